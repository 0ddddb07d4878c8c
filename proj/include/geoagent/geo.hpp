#pragma once

#include <string>
#include <vector>

namespace geoagent::geo {

/// Mean Earth radius in kilometres used by all great-circle math.
inline constexpr double kEarthRadiusKm = 6371.0;

/// Distance assigned when a prediction cannot be geocoded. Slightly above
/// the true great-circle maximum (pi * R_e = 20015.0867...) so no real
/// distance ever exceeds it.
inline constexpr double kMissSentinelKm = 20015.0868;

struct GeoPoint {
  double latitude = 0.0;
  double longitude = 0.0;

  /// Throws std::invalid_argument outside [-90, 90] x [-180, 180].
  static GeoPoint make(double latitude, double longitude);

  bool operator==(const GeoPoint&) const = default;
};

struct GeoLabel {
  std::string country;
  std::string province;
  std::string city;
  GeoPoint point;
  // Alias lists always include the canonical name (make() enforces it).
  std::vector<std::string> country_aliases;
  std::vector<std::string> province_aliases;
  std::vector<std::string> city_aliases;

  static GeoLabel make(std::string country, std::string province, std::string city,
                       GeoPoint point,
                       std::vector<std::string> country_aliases = {},
                       std::vector<std::string> province_aliases = {},
                       std::vector<std::string> city_aliases = {});

  bool operator==(const GeoLabel&) const = default;
};

enum class VerdictMethod { rule, model, forced_by_containment };

/// Per-level correctness with hierarchical containment: a correct city
/// forces province and country true. Produced by the evaluation stage and
/// consumed by the reward.
struct LevelVerdicts {
  bool country = false;
  bool province = false;
  bool city = false;
  VerdictMethod country_method = VerdictMethod::rule;
  VerdictMethod province_method = VerdictMethod::rule;
  VerdictMethod city_method = VerdictMethod::rule;

  /// Applies the containment closure (city => province => country),
  /// marking levels it flipped as forced_by_containment.
  static LevelVerdicts closed(bool country, bool province, bool city);

  bool operator==(const LevelVerdicts&) const = default;
};

struct HierarchicalReward {
  double beta = 2.0;
  double value = 0.0;  // one of {beta^2, beta, 1, 0}
};

/// beta^2 / beta / 1 / 0 for city / province / country / nothing correct,
/// evaluated finest-first. Throws std::invalid_argument when beta <= 1
/// (the rung ordering collapses).
HierarchicalReward hierarchical_reward(const LevelVerdicts& verdicts, double beta = 2.0);

struct RewardGroup {
  std::string question_id;
  std::vector<double> rewards;
  std::vector<double> advantages;

  size_t group_size() const { return rewards.size(); }

  /// Computes advantages from rewards via group_advantages.
  static RewardGroup make(std::string question_id, std::vector<double> rewards);
};

/// A_i = (r_i - mean) / std with population standard deviation. Groups with
/// zero spread get all-zero advantages. Throws std::invalid_argument on an
/// empty list or non-finite rewards.
std::vector<double> group_advantages(const std::vector<double>& rewards);

struct SurrogateTermInput {
  double logprob_new = 0.0;
  double logprob_old = 0.0;
  double advantage = 0.0;
  double clip_epsilon = 0.2;
};

/// min(ratio * A, clip(ratio, 1-eps, 1+eps) * A) with
/// ratio = exp(logprob_new - logprob_old). Throws std::invalid_argument on
/// non-finite inputs, non-finite ratio, or eps <= 0.
double clipped_surrogate_term(const SurrogateTermInput& input);

/// Great-circle distance in km between two valid points (haversine form).
/// Symmetric, zero for identical points, bounded by pi * R_e.
double haversine_km(const GeoPoint& a, const GeoPoint& b);

}  // namespace geoagent::geo
