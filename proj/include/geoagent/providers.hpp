#pragma once

#include "geoagent/geo.hpp"

#include <chrono>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace geoagent::tools {

struct SearchResult {
  std::string title;
  std::string snippet;
  std::string url;
  bool operator==(const SearchResult&) const = default;
};

/// Thrown by live providers on transport/quota problems; executors turn it
/// into a ToolFailure observation rather than aborting the trajectory.
struct ProviderError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class SearchProvider {
 public:
  virtual ~SearchProvider() = default;
  virtual std::vector<SearchResult> search(const std::string& query, int limit) = 0;
};

struct GeocodeResult {
  enum class Status { ok, not_found, provider_error };
  std::string query_text;
  std::optional<geo::GeoPoint> point;
  Status status = Status::provider_error;
};

class GeocodeProvider {
 public:
  virtual ~GeocodeProvider() = default;
  /// Never throws; failures are carried in the status.
  virtual GeocodeResult geocode(const std::string& address) = 0;
};

/// Token bucket shared by all workers hitting one provider. qps <= 0
/// disables limiting (used in deterministic/offline runs).
class RateLimiter {
 public:
  explicit RateLimiter(double qps, double burst = 1.0);
  void acquire();

 private:
  std::mutex mutex_;
  double qps_;
  double tokens_;
  double burst_;
  std::chrono::steady_clock::time_point last_;
};

/// Deterministic provider backed by a JSON file keyed by normalized query.
class FixtureSearchProvider : public SearchProvider {
 public:
  explicit FixtureSearchProvider(const std::filesystem::path& fixture_file);
  std::vector<SearchResult> search(const std::string& query, int limit) override;

 private:
  std::map<std::string, std::vector<SearchResult>> entries_;
};

class FixtureGeocodeProvider : public GeocodeProvider {
 public:
  explicit FixtureGeocodeProvider(const std::filesystem::path& fixture_file);
  GeocodeResult geocode(const std::string& address) override;

 private:
  // nullopt value = fixture simulates a provider error for that address.
  std::map<std::string, std::optional<geo::GeoPoint>> entries_;
};

/// Live HTTP search provider. Wire contract: POST {query, limit} to the
/// configured URL, response is a JSON array of {title, snippet, url}.
class HttpSearchProvider : public SearchProvider {
 public:
  HttpSearchProvider(std::string base_url, std::string path, std::string api_key,
                     double qps = 0.0);
  std::vector<SearchResult> search(const std::string& query, int limit) override;

 private:
  std::string base_url_;
  std::string path_;
  std::string api_key_;
  RateLimiter limiter_;
};

/// Live HTTP geocoder. Wire contract: POST {address}; response {lat, lon}
/// on success, HTTP 404 or {status: "not_found"} for unknown addresses.
class HttpGeocodeProvider : public GeocodeProvider {
 public:
  HttpGeocodeProvider(std::string base_url, std::string path, std::string api_key,
                      double qps = 0.0);
  GeocodeResult geocode(const std::string& address) override;

 private:
  std::string base_url_;
  std::string path_;
  std::string api_key_;
  RateLimiter limiter_;
};

/// Disk cache wrapper: replays stored responses, forwards misses to the
/// inner provider and persists what it returns. Safe for concurrent use.
class CachingSearchProvider : public SearchProvider {
 public:
  CachingSearchProvider(std::shared_ptr<SearchProvider> inner,
                        std::filesystem::path cache_dir);
  std::vector<SearchResult> search(const std::string& query, int limit) override;

 private:
  std::shared_ptr<SearchProvider> inner_;
  std::filesystem::path cache_dir_;
  std::mutex mutex_;
};

/// Geocode wrapper caching by normalized address, in memory and on disk.
class CachingGeocodeProvider : public GeocodeProvider {
 public:
  CachingGeocodeProvider(std::shared_ptr<GeocodeProvider> inner,
                         std::filesystem::path cache_dir);
  GeocodeResult geocode(const std::string& address) override;

 private:
  std::shared_ptr<GeocodeProvider> inner_;
  std::filesystem::path cache_dir_;
  std::mutex mutex_;
  std::map<std::string, GeocodeResult> memory_;
};

}  // namespace geoagent::tools
