#include "geoagent/geo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace geoagent::geo {

namespace {

double deg2rad(double deg) { return deg * std::numbers::pi / 180.0; }

void append_canonical(std::vector<std::string>& aliases, const std::string& canonical) {
  if (std::find(aliases.begin(), aliases.end(), canonical) == aliases.end()) {
    aliases.push_back(canonical);
  }
}

}  // namespace

GeoPoint GeoPoint::make(double latitude, double longitude) {
  if (!(latitude >= -90.0 && latitude <= 90.0)) {
    throw std::invalid_argument("latitude out of [-90, 90]: " + std::to_string(latitude));
  }
  if (!(longitude >= -180.0 && longitude <= 180.0)) {
    throw std::invalid_argument("longitude out of [-180, 180]: " + std::to_string(longitude));
  }
  return GeoPoint{latitude, longitude};
}

GeoLabel GeoLabel::make(std::string country, std::string province, std::string city,
                        GeoPoint point,
                        std::vector<std::string> country_aliases,
                        std::vector<std::string> province_aliases,
                        std::vector<std::string> city_aliases) {
  if (country.empty() || province.empty() || city.empty()) {
    throw std::invalid_argument("label requires non-empty country, province and city");
  }
  if (!country_aliases.empty()) append_canonical(country_aliases, country);
  if (!province_aliases.empty()) append_canonical(province_aliases, province);
  if (!city_aliases.empty()) append_canonical(city_aliases, city);
  return GeoLabel{std::move(country), std::move(province), std::move(city), point,
                  std::move(country_aliases), std::move(province_aliases),
                  std::move(city_aliases)};
}

LevelVerdicts LevelVerdicts::closed(bool country, bool province, bool city) {
  LevelVerdicts v;
  v.city = city;
  v.province = province || city;
  v.country = country || v.province;
  v.city_method = VerdictMethod::rule;
  v.province_method = (!province && v.province) ? VerdictMethod::forced_by_containment
                                                : VerdictMethod::rule;
  v.country_method = (!country && v.country) ? VerdictMethod::forced_by_containment
                                             : VerdictMethod::rule;
  return v;
}

HierarchicalReward hierarchical_reward(const LevelVerdicts& verdicts, double beta) {
  if (!(beta > 1.0)) {
    throw std::invalid_argument("beta must exceed 1");
  }
  double value = 0.0;
  if (verdicts.city) {
    value = beta * beta;
  } else if (verdicts.province) {
    value = beta;
  } else if (verdicts.country) {
    value = 1.0;
  }
  return HierarchicalReward{beta, value};
}

std::vector<double> group_advantages(const std::vector<double>& rewards) {
  if (rewards.empty()) {
    throw std::invalid_argument("reward group must not be empty");
  }
  for (double r : rewards) {
    if (!std::isfinite(r)) throw std::invalid_argument("non-finite reward");
  }
  const double n = static_cast<double>(rewards.size());
  double mean = 0.0;
  for (double r : rewards) mean += r;
  mean /= n;
  double var = 0.0;
  for (double r : rewards) var += (r - mean) * (r - mean);
  var /= n;
  const double sd = std::sqrt(var);
  std::vector<double> advantages(rewards.size(), 0.0);
  if (sd > 0.0) {
    for (size_t i = 0; i < rewards.size(); ++i) {
      advantages[i] = (rewards[i] - mean) / sd;
    }
  }
  return advantages;
}

RewardGroup RewardGroup::make(std::string question_id, std::vector<double> rewards) {
  RewardGroup group;
  group.question_id = std::move(question_id);
  group.advantages = group_advantages(rewards);
  group.rewards = std::move(rewards);
  return group;
}

double clipped_surrogate_term(const SurrogateTermInput& input) {
  if (!std::isfinite(input.logprob_new) || !std::isfinite(input.logprob_old) ||
      !std::isfinite(input.advantage)) {
    throw std::invalid_argument("non-finite surrogate input");
  }
  if (!(input.clip_epsilon > 0.0) || !std::isfinite(input.clip_epsilon)) {
    throw std::invalid_argument("clip epsilon must be finite and positive");
  }
  const double ratio = std::exp(input.logprob_new - input.logprob_old);
  if (!std::isfinite(ratio)) {
    throw std::invalid_argument("non-finite probability ratio");
  }
  const double clipped =
      std::clamp(ratio, 1.0 - input.clip_epsilon, 1.0 + input.clip_epsilon);
  return std::min(ratio * input.advantage, clipped * input.advantage);
}

double haversine_km(const GeoPoint& a, const GeoPoint& b) {
  const double phi1 = deg2rad(a.latitude);
  const double phi2 = deg2rad(b.latitude);
  const double dphi = deg2rad(b.latitude - a.latitude);
  const double dlambda = deg2rad(b.longitude - a.longitude);
  const double sp = std::sin(dphi / 2.0);
  const double sl = std::sin(dlambda / 2.0);
  double v = sp * sp + std::cos(phi1) * std::cos(phi2) * sl * sl;
  v = std::clamp(v, 0.0, 1.0);
  return 2.0 * kEarthRadiusKm * std::asin(std::sqrt(v));
}

}  // namespace geoagent::geo
