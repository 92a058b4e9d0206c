#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tmrat/projective.hpp"
#include "tmrat/ratmap.hpp"

namespace tmrat {

/// Excluded loci of the five-point configuration space: coincident critical
/// slots (C) and r_i = -1 (R1, R2, R3).
enum class Locus { C, R1, R2, R3 };

std::string to_string(Locus locus);

/// Three fixed-point slots and two critical-point slots. Always valid.
class TotalMarking {
 public:
  /// Throws DomainError naming the first violated locus.
  TotalMarking(std::array<ProjPoint, 3> fixed, std::array<ProjPoint, 2> critical);

  const std::array<ProjPoint, 3>& fixed() const noexcept { return p_; }
  const std::array<ProjPoint, 2>& critical() const noexcept { return q_; }
  const ProjPoint& p(std::size_t i) const { return p_.at(i); }
  const ProjPoint& q(std::size_t i) const { return q_.at(i); }
  const Field& field() const noexcept { return p_[0].field(); }

  /// Image of all five points under g.
  TotalMarking transported(const MobiusMap& g) const;

  /// `(p1,p2,p3;q1,q2)`
  std::string to_string() const;

  friend bool operator==(const TotalMarking& a, const TotalMarking& b);

 private:
  std::array<ProjPoint, 3> p_;
  std::array<ProjPoint, 2> q_;
};

struct MarkingCheck {
  std::optional<TotalMarking> marking;  // set iff accepted
  std::vector<Locus> violated;          // in the order C, R1, R2, R3
};

MarkingCheck validate_marking(const std::array<ProjPoint, 3>& fixed, const std::array<ProjPoint, 2>& critical);

/// Parses `(p1,p2,p3;q1,q2)` into the five raw points without validating.
std::pair<std::array<ProjPoint, 3>, std::array<ProjPoint, 2>> parse_marking_points(std::string_view text,
                                                                                      const Field& field);
/// Parses and validates; throws DomainError for an excluded tuple.
TotalMarking parse_marking(std::string_view text, const Field& field);

/// Homogeneous triple (r1, r2, r3).
struct CrossRatioTriple {
  std::array<ProjPoint, 3> r;

  const ProjPoint& operator[](std::size_t i) const { return r.at(i); }
  const Field& field() const noexcept { return r[0].field(); }
  /// num1 num2 num3 == den1 den2 den3
  bool on_w() const;
  /// No r_i equals -1.
  bool avoids_minus_one() const;
  /// `(r1,r2,r3)` with `inf` for infinity.
  std::string to_string() const;
  /// `[[n1,d1],[n2,d2],[n3,d3]]`
  std::string to_homogeneous_string() const;

  friend bool operator==(const CrossRatioTriple& a, const CrossRatioTriple& b) { return a.r == b.r; }
};

/// Lexicographic in canonical_order of the points.
std::weak_ordering canonical_order(const CrossRatioTriple& a, const CrossRatioTriple& b);

/// Parses `(r1,r2,r3)`.
CrossRatioTriple parse_cross_ratios(std::string_view text, const Field& field);

/// r_i = [bracket(w_j,x_1) bracket(w_k,x_2) : bracket(w_j,x_2) bracket(w_k,x_1)]
/// for cyclic (i,j,k).
CrossRatioTriple cross_ratios(const TotalMarking& m);

struct VPoint {
  std::array<ProjPoint, 3> x;

  const ProjPoint& operator[](std::size_t i) const { return x.at(i); }
  /// a1 b2 b3 + b1 a2 b3 + b1 b2 a3 + a1 a2 a3 == 0 for x_i = [a_i : b_i]
  bool on_v() const;
  std::string to_string() const;
};

/// x_i = [den_i - num_i : den_i + num_i]. Throws DomainError if some r_i = -1.
VPoint to_v_coords(const CrossRatioTriple& r);
/// The same involution read backwards. Throws DomainError if some x_i is infinite.
CrossRatioTriple from_v_coords(const VPoint& x);

/// mu_i = 1 + x_j x_k. Throws DomainError if some x_i is infinite.
std::array<Element, 3> multipliers_from_v(const VPoint& x);

/// The unique degree-two map with fixed-point multiset {p1,p2,p3} and critical
/// points {q1,q2}. Both properties are verified before returning.
RatMap2 reconstruct(const TotalMarking& m);

/// A marking with the given cross ratios: the first of the charts
/// (1, 1/r3, r2; 0, inf), (r3, 1, 1/r1; 0, inf), (1/r2, r1, 1; 0, inf) that
/// reproduces r. Throws DomainError off W, on some R_i, or when no chart applies.
TotalMarking marking_from_w(const CrossRatioTriple& r);
RatMap2 reconstruct_from_w(const CrossRatioTriple& r);

/// Closed-form maps (a z^2 + b)/(c z^2 + d) in the chart (1, 1/r3, r2; 0, inf),
/// one per affine case on (r2, r3) that applies:
///   1: r2 finite, r3 != 0     c = 1
///   2: r2, r3 finite          c = r3
///   3: r2 != 0, r3 != 0       c = 1/r2
///   4: r2 != 0, r3 finite     c = r3/r2
std::vector<std::pair<int, RatMap2>> chart_case_maps(const CrossRatioTriple& r);

struct Equivalence {
  bool equivalent = false;
  CrossRatioTriple first;
  CrossRatioTriple second;
  /// Sends the first marking to the second, slot by slot.
  std::optional<MobiusMap> witness;
};

Equivalence equivalent(const TotalMarking& a, const TotalMarking& b);

struct Orbit12 {
  /// Fixed-slot permutations in lexicographic order, each with the critical
  /// slots as given and then swapped.
  std::vector<CrossRatioTriple> triples;
  CrossRatioTriple canonical;
  std::size_t distinct = 0;
};

Orbit12 orbit12(const TotalMarking& m);

/// Fixed points and critical points in canonical order. Throws
/// IncompleteFactorization when either set does not split.
TotalMarking marking_of(const RatMap2& phi, Rng& rng);
TotalMarking marking_of(const RatMap2& phi);

}  // namespace tmrat
