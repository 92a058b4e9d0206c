#include "tmrat/stability.hpp"

#include <algorithm>
#include <limits>

#include "tmrat/error.hpp"
#include "tmrat/parse.hpp"

namespace tmrat {

namespace {

void check_weights(const std::vector<std::uint64_t>& weights) {
  if (weights.empty()) throw DomainError("empty weight vector");
  std::uint64_t total = 0;
  for (auto w : weights) {
    if (w == 0) throw DomainError("weights must be positive");
    if (w > std::numeric_limits<std::uint64_t>::max() / 4 - total) throw DomainError("weights too large");
    total += w;
  }
}

std::uint64_t sum(const std::vector<std::uint64_t>& weights) {
  std::uint64_t t = 0;
  for (auto w : weights) t += w;
  return t;
}

std::string_view tuple_body(std::string_view text, std::string_view key) {
  text = trim(text);
  if (text.substr(0, key.size()) != key) throw ParseError("config literal: expected '" + std::string(key) + "'");
  text = trim(text.substr(key.size()));
  if (text.empty() || text.front() != '=') throw ParseError("config literal: expected '='");
  text = trim(text.substr(1));
  if (text.size() < 2 || text.front() != '(' || text.back() != ')') throw ParseError("config literal: expected (...)");
  return text.substr(1, text.size() - 2);
}

std::uint64_t parse_weight(std::string_view s) {
  s = trim(s);
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw ParseError("weight must be a positive integer: '" + std::string(s) + "'");
  }
  if (s.size() > 18) throw ParseError("weight too large");
  return std::stoull(std::string(s));
}

}  // namespace

WeightedConfig::WeightedConfig(std::vector<ProjPoint> points, std::vector<std::uint64_t> weights)
    : points_(std::move(points)), weights_(std::move(weights)) {
  if (points_.empty()) throw DomainError("configuration needs at least one point");
  if (points_.size() != weights_.size()) throw DomainError("points and weights differ in length");
  for (const auto& p : points_) {
    if (!(p.field() == points_[0].field())) throw FieldMismatch();
  }
  check_weights(weights_);
  total_ = sum(weights_);
}

WeightedConfig WeightedConfig::parse(std::string_view text, const Field& field) {
  auto parts = split_top_level(text, ';');
  if (parts.size() != 2) throw ParseError("config literal: expected points=(...);weights=(...)");
  std::vector<ProjPoint> points;
  for (auto s : split_top_level(tuple_body(parts[0], "points"), ',')) points.push_back(ProjPoint::parse(s, field));
  std::vector<std::uint64_t> weights;
  for (auto s : split_top_level(tuple_body(parts[1], "weights"), ',')) weights.push_back(parse_weight(s));
  try {
    return WeightedConfig(std::move(points), std::move(weights));
  } catch (const DomainError& e) {
    // A malformed literal is a usage error, not a rejected configuration.
    throw ParseError(std::string("config literal: ") + e.what());
  }
}

std::string to_string(Stability s) {
  switch (s) {
    case Stability::Stable: return "stable";
    case Stability::StrictlySemistable: return "strictly-semistable";
    case Stability::Unstable: return "unstable";
  }
  return "?";
}

StabilityVerdict classify(const WeightedConfig& cfg) {
  std::vector<StabilityWitness> classes;
  for (std::size_t i = 0; i < cfg.points().size(); ++i) {
    auto it = std::find_if(classes.begin(), classes.end(),
                           [&](const StabilityWitness& c) { return c.point == cfg.points()[i]; });
    if (it == classes.end()) {
      classes.push_back({cfg.points()[i], cfg.weights()[i]});
    } else {
      it->weight += cfg.weights()[i];
    }
  }
  StabilityVerdict v{Stability::Stable, {}};
  const std::uint64_t total = cfg.total_weight();
  for (auto& c : classes) {
    if (2 * c.weight < total) continue;
    if (2 * c.weight > total) {
      v.classification = Stability::Unstable;
    } else if (v.classification == Stability::Stable) {
      v.classification = Stability::StrictlySemistable;
    }
    v.witnesses.push_back(std::move(c));
  }
  std::sort(v.witnesses.begin(), v.witnesses.end(),
            [](const auto& a, const auto& b) { return canonical_order(a.point, b.point) < 0; });
  return v;
}

std::pair<bool, bool> semistable_nonempty(const std::vector<std::uint64_t>& weights) {
  check_weights(weights);
  const std::uint64_t total = sum(weights);
  const std::uint64_t top = *std::max_element(weights.begin(), weights.end());
  return {2 * top <= total, 2 * top < total};
}

bool stable_equals_semistable(const std::vector<std::uint64_t>& weights) {
  check_weights(weights);
  const std::uint64_t total = sum(weights);
  if (total % 2 != 0) return true;
  const std::uint64_t half = total / 2;
  if (half > (1u << 24)) throw DomainError("weights too large for the subset-sum check");
  std::vector<char> reachable(half + 1, 0);
  reachable[0] = 1;
  for (auto w : weights) {
    if (w > half) continue;
    for (std::uint64_t s = half; s >= w; --s) {
      if (reachable[s - w]) reachable[s] = 1;
      if (s == w) break;
    }
  }
  return !reachable[half];
}

}  // namespace tmrat
