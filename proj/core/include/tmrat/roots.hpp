#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tmrat/polynomial.hpp"
#include "tmrat/projective.hpp"

namespace tmrat {

struct RootEntry {
  ProjPoint point;
  unsigned multiplicity;
};

/// Roots of a binary form over its field of definition.
struct RootList {
  std::vector<RootEntry> entries;  // sorted by canonical_order on the points
  unsigned degree = 0;             // of the source form
  bool complete = false;           // multiplicities sum to `degree`
  /// Irreducible factors of degree > 1 (monic, in the dehomogenized variable)
  /// with their multiplicities. Empty iff complete.
  std::vector<std::pair<Polynomial, unsigned>> unsplit;

  unsigned total_multiplicity() const;
  /// Least k such that every unsplit factor splits over the degree-k extension (1 when complete).
  unsigned splitting_degree() const;
  /// Product of the unsplit factors, printed in z.
  std::string unsplit_string() const;
  /// Each root repeated by multiplicity.
  std::vector<ProjPoint> flattened() const;
  /// Multiplicity of `p`, or 0.
  unsigned multiplicity_of(const ProjPoint& p) const;
};

/// Roots with multiplicity of a nonzero form of degree <= 3.
///
/// F_p and F_{p^k}: squarefree decomposition, then the linear part of the
/// distinct-degree split and Cantor-Zassenhaus equal-degree splitting driven by
/// `rng`. Q: squarefree decomposition and an exact rational-root search. C:
/// closed-form quadratic/cubic, one Newton step per simple root, multiplicities
/// from tolerance tests on the discriminants.
///
/// Throws DomainError for the zero form or degree > 3.
RootList roots(const BinaryForm& f, Rng& rng);
/// As above with a generator seeded with 0.
RootList roots(const BinaryForm& f);

/// Squarefree decomposition over an exact field: pairs (g_i, m_i) with
/// f = lc * prod g_i^m_i, each g_i monic and squarefree. Handles p-th powers in
/// characteristic p.
std::vector<std::pair<Polynomial, unsigned>> squarefree_decomposition(const Polynomial& f);

}  // namespace tmrat
