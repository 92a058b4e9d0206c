#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tmrat/projective.hpp"

namespace tmrat {

/// m points of the projective line with positive integer weights.
class WeightedConfig {
 public:
  /// Throws DomainError for m == 0, mismatched lengths or a zero weight.
  WeightedConfig(std::vector<ProjPoint> points, std::vector<std::uint64_t> weights);

  /// `points=(p1,...,pm);weights=(v1,...,vm)`
  static WeightedConfig parse(std::string_view text, const Field& field);

  const std::vector<ProjPoint>& points() const noexcept { return points_; }
  const std::vector<std::uint64_t>& weights() const noexcept { return weights_; }
  std::uint64_t total_weight() const noexcept { return total_; }

 private:
  std::vector<ProjPoint> points_;
  std::vector<std::uint64_t> weights_;
  std::uint64_t total_ = 0;
};

enum class Stability { Stable, StrictlySemistable, Unstable };

std::string to_string(Stability s);

struct StabilityWitness {
  ProjPoint point;
  std::uint64_t weight;  // total weight of the points equal to `point`
};

struct StabilityVerdict {
  Stability classification;
  /// Every coincidence class with 2 * weight >= total, in canonical point order.
  std::vector<StabilityWitness> witnesses;
};

/// On the projective line the proper linear subspaces are points, so a
/// configuration is stable iff every coincidence class has 2 w < sum v, and
/// semistable iff 2 w <= sum v.
StabilityVerdict classify(const WeightedConfig& cfg);

/// (semistable locus nonempty, stable locus nonempty): (all 2 v_i <= sum, all 2 v_i < sum).
std::pair<bool, bool> semistable_nonempty(const std::vector<std::uint64_t>& weights);

/// True iff no sub-multiset of the weights sums to exactly half the total.
bool stable_equals_semistable(const std::vector<std::uint64_t>& weights);

}  // namespace tmrat
