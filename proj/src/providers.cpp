#include "geoagent/providers.hpp"

#include "geoagent/util.hpp"

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>
#include <nlohmann/json.hpp>

#include <fstream>
#include <thread>

namespace geoagent::tools {

using nlohmann::json;

RateLimiter::RateLimiter(double qps, double burst)
    : qps_(qps), tokens_(burst), burst_(burst), last_(std::chrono::steady_clock::now()) {}

void RateLimiter::acquire() {
  if (qps_ <= 0.0) return;
  std::unique_lock lock(mutex_);
  for (;;) {
    const auto now = std::chrono::steady_clock::now();
    const double elapsed = std::chrono::duration<double>(now - last_).count();
    last_ = now;
    tokens_ = std::min(burst_, tokens_ + elapsed * qps_);
    if (tokens_ >= 1.0) {
      tokens_ -= 1.0;
      return;
    }
    const double wait_s = (1.0 - tokens_) / qps_;
    lock.unlock();
    std::this_thread::sleep_for(std::chrono::duration<double>(wait_s));
    lock.lock();
  }
}

namespace {

std::vector<SearchResult> results_from_json(const json& arr) {
  std::vector<SearchResult> results;
  for (const json& item : arr) {
    SearchResult r;
    r.title = item.value("title", "");
    r.snippet = item.value("snippet", "");
    r.url = item.value("url", "");
    results.push_back(std::move(r));
  }
  return results;
}

json results_to_json(const std::vector<SearchResult>& results) {
  json arr = json::array();
  for (const auto& r : results) {
    arr.push_back({{"title", r.title}, {"snippet", r.snippet}, {"url", r.url}});
  }
  return arr;
}

void truncate_to_limit(std::vector<SearchResult>& results, int limit) {
  if (limit >= 0 && results.size() > static_cast<size_t>(limit)) {
    results.resize(static_cast<size_t>(limit));
  }
}

}  // namespace

FixtureSearchProvider::FixtureSearchProvider(const std::filesystem::path& fixture_file) {
  json j = json::parse(util::read_file(fixture_file));
  for (auto it = j.begin(); it != j.end(); ++it) {
    entries_[util::normalize_text(it.key())] = results_from_json(it.value());
  }
}

std::vector<SearchResult> FixtureSearchProvider::search(const std::string& query, int limit) {
  auto it = entries_.find(util::normalize_text(query));
  if (it == entries_.end()) return {};
  std::vector<SearchResult> results = it->second;
  truncate_to_limit(results, limit);
  return results;
}

FixtureGeocodeProvider::FixtureGeocodeProvider(const std::filesystem::path& fixture_file) {
  json j = json::parse(util::read_file(fixture_file));
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = util::normalize_text(it.key());
    if (it.value().is_null()) {
      entries_[key] = std::nullopt;  // simulated provider error
    } else {
      entries_[key] = geo::GeoPoint::make(it.value().at("lat").get<double>(),
                                          it.value().at("lon").get<double>());
    }
  }
}

GeocodeResult FixtureGeocodeProvider::geocode(const std::string& address) {
  GeocodeResult result;
  result.query_text = address;
  auto it = entries_.find(util::normalize_text(address));
  if (it == entries_.end()) {
    result.status = GeocodeResult::Status::not_found;
  } else if (!it->second) {
    result.status = GeocodeResult::Status::provider_error;
  } else {
    result.status = GeocodeResult::Status::ok;
    result.point = it->second;
  }
  return result;
}

HttpSearchProvider::HttpSearchProvider(std::string base_url, std::string path,
                                       std::string api_key, double qps)
    : base_url_(std::move(base_url)),
      path_(std::move(path)),
      api_key_(std::move(api_key)),
      limiter_(qps) {}

std::vector<SearchResult> HttpSearchProvider::search(const std::string& query, int limit) {
  limiter_.acquire();
  httplib::Client client(base_url_);
  client.set_read_timeout(30, 0);
  httplib::Headers headers;
  if (!api_key_.empty()) headers.emplace("Authorization", "Bearer " + api_key_);
  const json body = {{"query", query}, {"limit", limit}};
  auto res = client.Post(path_, headers, body.dump(), "application/json");
  if (!res) throw ProviderError("search transport error: " + httplib::to_string(res.error()));
  if (res->status != 200) {
    throw ProviderError("search provider status " + std::to_string(res->status));
  }
  json parsed = json::parse(res->body, nullptr, false);
  if (parsed.is_discarded() || !parsed.is_array()) {
    throw ProviderError("search provider returned malformed body");
  }
  auto results = results_from_json(parsed);
  truncate_to_limit(results, limit);
  return results;
}

HttpGeocodeProvider::HttpGeocodeProvider(std::string base_url, std::string path,
                                         std::string api_key, double qps)
    : base_url_(std::move(base_url)),
      path_(std::move(path)),
      api_key_(std::move(api_key)),
      limiter_(qps) {}

GeocodeResult HttpGeocodeProvider::geocode(const std::string& address) {
  GeocodeResult result;
  result.query_text = address;
  limiter_.acquire();
  httplib::Client client(base_url_);
  client.set_read_timeout(30, 0);
  httplib::Headers headers;
  if (!api_key_.empty()) headers.emplace("Authorization", "Bearer " + api_key_);
  const json body = {{"address", address}};
  auto res = client.Post(path_, headers, body.dump(), "application/json");
  if (!res) {
    result.status = GeocodeResult::Status::provider_error;
    return result;
  }
  if (res->status == 404) {
    result.status = GeocodeResult::Status::not_found;
    return result;
  }
  if (res->status != 200) {
    result.status = GeocodeResult::Status::provider_error;
    return result;
  }
  json parsed = json::parse(res->body, nullptr, false);
  if (parsed.is_discarded() || !parsed.is_object()) {
    result.status = GeocodeResult::Status::provider_error;
    return result;
  }
  if (parsed.value("status", "") == "not_found" || !parsed.contains("lat")) {
    result.status = GeocodeResult::Status::not_found;
    return result;
  }
  try {
    result.point = geo::GeoPoint::make(parsed.at("lat").get<double>(),
                                       parsed.at("lon").get<double>());
    result.status = GeocodeResult::Status::ok;
  } catch (const std::exception&) {
    result.status = GeocodeResult::Status::provider_error;
  }
  return result;
}

CachingSearchProvider::CachingSearchProvider(std::shared_ptr<SearchProvider> inner,
                                             std::filesystem::path cache_dir)
    : inner_(std::move(inner)), cache_dir_(std::move(cache_dir)) {
  std::filesystem::create_directories(cache_dir_);
}

std::vector<SearchResult> CachingSearchProvider::search(const std::string& query, int limit) {
  const std::string key = util::sha256_hex("search:" + util::normalize_text(query));
  const auto path = cache_dir_ / (key + ".json");
  {
    std::lock_guard lock(mutex_);
    if (std::filesystem::exists(path)) {
      json j = json::parse(util::read_file(path));
      auto results = results_from_json(j);
      truncate_to_limit(results, limit);
      return results;
    }
  }
  auto results = inner_->search(query, limit);
  std::lock_guard lock(mutex_);
  util::write_file_atomic(path, results_to_json(results).dump());
  return results;
}

CachingGeocodeProvider::CachingGeocodeProvider(std::shared_ptr<GeocodeProvider> inner,
                                               std::filesystem::path cache_dir)
    : inner_(std::move(inner)), cache_dir_(std::move(cache_dir)) {
  if (!cache_dir_.empty()) std::filesystem::create_directories(cache_dir_);
}

GeocodeResult CachingGeocodeProvider::geocode(const std::string& address) {
  const std::string norm = util::normalize_text(address);
  {
    std::lock_guard lock(mutex_);
    if (auto it = memory_.find(norm); it != memory_.end()) return it->second;
    if (!cache_dir_.empty()) {
      const auto path = cache_dir_ / (util::sha256_hex("geocode:" + norm) + ".json");
      if (std::filesystem::exists(path)) {
        json j = json::parse(util::read_file(path));
        GeocodeResult cached;
        cached.query_text = address;
        cached.status = j.at("found").get<bool>() ? GeocodeResult::Status::ok
                                                  : GeocodeResult::Status::not_found;
        if (cached.status == GeocodeResult::Status::ok) {
          cached.point = geo::GeoPoint::make(j.at("lat").get<double>(),
                                             j.at("lon").get<double>());
        }
        memory_[norm] = cached;
        return cached;
      }
    }
  }
  GeocodeResult result = inner_->geocode(address);
  // Provider errors are transient; only definitive answers are cached.
  if (result.status == GeocodeResult::Status::provider_error) return result;
  std::lock_guard lock(mutex_);
  memory_[norm] = result;
  if (!cache_dir_.empty()) {
    json j;
    j["found"] = result.status == GeocodeResult::Status::ok;
    if (result.point) {
      j["lat"] = result.point->latitude;
      j["lon"] = result.point->longitude;
    }
    const auto path = cache_dir_ / (util::sha256_hex("geocode:" + norm) + ".json");
    util::write_file_atomic(path, j.dump());
  }
  return result;
}

}  // namespace geoagent::tools
