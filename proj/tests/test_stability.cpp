#include <gtest/gtest.h>

#include <numeric>

#include "support.hpp"
#include "tmrat/error.hpp"
#include "tmrat/stability.hpp"

using namespace tmrat;
using namespace tmrat::testing;

namespace {

// Direct reading of the numerical criterion on P^1: every proper linear
// subspace is a single point W, with dim W + 1 = 1 and r + 1 = 2.
Stability brute_force(const WeightedConfig& cfg, const Field& F) {
  const std::uint64_t total = cfg.total_weight();
  bool strict = false, equality = false;
  for (const auto& W : all_points(F)) {
    std::uint64_t w = 0;
    for (std::size_t i = 0; i < cfg.points().size(); ++i) {
      if (cfg.points()[i] == W) w += cfg.weights()[i];
    }
    if (2 * w > total) strict = true;
    if (2 * w == total) equality = true;
  }
  if (strict) return Stability::Unstable;
  return equality ? Stability::StrictlySemistable : Stability::Stable;
}

}  // namespace

TEST(Stability, Fixtures) {
  const Field Q = Field::rationals();
  const auto v1 = classify(WeightedConfig::parse("points=(1,1,1,0,inf);weights=(1,1,1,1,1)", Q));
  EXPECT_EQ(v1.classification, Stability::Unstable);
  ASSERT_EQ(v1.witnesses.size(), 1u);
  EXPECT_EQ(v1.witnesses[0].point, ProjPoint::affine(Q.one()));
  EXPECT_EQ(v1.witnesses[0].weight, 3u);

  const auto v2 = classify(WeightedConfig::parse("points=(1,1,1,0,inf);weights=(1,1,1,2,2)", Q));
  EXPECT_EQ(v2.classification, Stability::Stable);
  EXPECT_TRUE(v2.witnesses.empty());

  const auto v3 = classify(WeightedConfig::parse("points=(1,-1,2,0,inf);weights=(1,1,1,2,2)", Q));
  EXPECT_EQ(v3.classification, Stability::Stable);

  const auto v4 = classify(WeightedConfig::parse("points=(0,inf);weights=(1,1)", Q));
  EXPECT_EQ(v4.classification, Stability::StrictlySemistable);
  EXPECT_EQ(v4.witnesses.size(), 2u);
}

TEST(Stability, ConfigValidation) {
  const Field Q = Field::rationals();
  EXPECT_THROW(WeightedConfig::parse("points=(1,2);weights=(1)", Q), ParseError);
  EXPECT_THROW(WeightedConfig::parse("points=(1,2);weights=(1,0)", Q), ParseError);
  EXPECT_THROW(WeightedConfig::parse("points=();weights=()", Q), ParseError);
  EXPECT_THROW(WeightedConfig::parse("weights=(1)", Q), ParseError);
}

TEST(Stability, NonemptyLoci) {
  EXPECT_EQ(semistable_nonempty({1, 1, 1, 2, 2}), std::make_pair(true, true));
  EXPECT_EQ(semistable_nonempty({1, 1}), std::make_pair(true, false));
  EXPECT_EQ(semistable_nonempty({3, 1, 1}), std::make_pair(false, false));
}

TEST(Stability, StableEqualsSemistable) {
  EXPECT_TRUE(stable_equals_semistable({1, 1, 1, 2, 2}));
  EXPECT_FALSE(stable_equals_semistable({1, 1, 1, 1}));
  EXPECT_TRUE(stable_equals_semistable({1, 1, 1, 1, 1}));
  EXPECT_TRUE(stable_equals_semistable({2, 4}));  // sum 6, no subset sums to 3
  EXPECT_FALSE(stable_equals_semistable({1, 2, 3}));
}

TEST(Stability, ExhaustiveAgainstBruteForceOverF3) {
  const Field F = Field::prime(3);
  const auto pts = all_points(F);
  std::size_t cases = 0;
  for (std::size_t m = 1; m <= 4; ++m) {
    std::vector<std::size_t> pi(m, 0);
    for (;;) {
      std::vector<ProjPoint> points;
      for (auto i : pi) points.push_back(pts[i]);
      std::vector<std::uint64_t> w(m, 1);
      for (;;) {
        if (std::accumulate(w.begin(), w.end(), std::uint64_t{0}) <= 8) {
          const WeightedConfig cfg(points, w);
          ASSERT_EQ(classify(cfg).classification, brute_force(cfg, F));
          ++cases;
        }
        std::size_t k = 0;
        while (k < m && ++w[k] > 8) w[k++] = 1;
        if (k == m) break;
      }
      std::size_t k = 0;
      while (k < m && ++pi[k] == pts.size()) pi[k++] = 0;
      if (k == m) break;
    }
  }
  EXPECT_GT(cases, 10000u);
}

TEST(Stability, MobiusInvariance) {
  const Field F = Field::prime(101);
  Rng rng(40);
  for (int n = 0; n < 200; ++n) {
    const std::size_t m = 1 + rng() % 6;
    std::vector<ProjPoint> pts;
    std::vector<std::uint64_t> w;
    for (std::size_t i = 0; i < m; ++i) {
      // A small pool so coincidences happen.
      pts.push_back(i > 0 && rng() % 3 == 0 ? pts[rng() % i] : random_point(F, rng));
      w.push_back(1 + rng() % 4);
    }
    const MobiusMap g = random_mobius(F, rng);
    std::vector<ProjPoint> moved;
    for (const auto& p : pts) moved.push_back(g.apply(p));
    EXPECT_EQ(classify(WeightedConfig(pts, w)).classification, classify(WeightedConfig(moved, w)).classification);
  }
}

TEST(Stability, ValidMarkingsAreStableUnderTheMarkingWeights) {
  const std::vector<std::uint64_t> weights{1, 1, 1, 2, 2};
  auto as_config = [&](const TotalMarking& m) {
    return WeightedConfig({m.p(0), m.p(1), m.p(2), m.q(0), m.q(1)}, weights);
  };
  const Field F5 = Field::prime(5);
  const auto pts = all_points(F5);
  std::size_t valid = 0;
  for (const auto& a : pts)
    for (const auto& b : pts)
      for (const auto& c : pts)
        for (const auto& d : pts)
          for (const auto& e : pts) {
            const auto mc = validate_marking({a, b, c}, {d, e});
            if (!mc.marking) continue;
            ++valid;
            ASSERT_EQ(classify(as_config(*mc.marking)).classification, Stability::Stable) << mc.marking->to_string();
          }
  EXPECT_EQ(valid, 3720u);

  const Field F = Field::prime(101);
  Rng rng(41);
  for (int n = 0; n < 500; ++n) {
    EXPECT_EQ(classify(as_config(random_valid_marking(F, rng))).classification, Stability::Stable);
  }
}

TEST(Stability, NoStrictlySemistableWhenLociCoincide) {
  const Field F = Field::prime(5);
  Rng rng(42);
  for (int n = 0; n < 2000; ++n) {
    const std::size_t m = 1 + rng() % 6;
    std::vector<std::uint64_t> w;
    for (std::size_t i = 0; i < m; ++i) w.push_back(1 + rng() % 5);
    if (!stable_equals_semistable(w)) continue;
    std::vector<ProjPoint> pts;
    for (std::size_t i = 0; i < m; ++i) pts.push_back(all_points(F)[rng() % 6]);
    EXPECT_NE(classify(WeightedConfig(pts, w)).classification, Stability::StrictlySemistable);
  }
}
