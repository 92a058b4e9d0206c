#pragma once

// Dense polynomials over a prime field F_p with word-sized residues. Used to
// build and multiply in extension fields; not part of the public surface.

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace tmrat::detail {

using Residue = std::uint64_t;
/// Coefficients low degree first, no trailing zeros; the zero polynomial is empty.
using FpPoly = std::vector<Residue>;

inline Residue add_mod(Residue a, Residue b, Residue p) {
  Residue s = a + b;
  return s >= p ? s - p : s;
}
inline Residue sub_mod(Residue a, Residue b, Residue p) { return a >= b ? a - b : a + p - b; }
inline Residue mul_mod(Residue a, Residue b, Residue p) { return (a * b) % p; }

Residue pow_mod(Residue base, std::uint64_t exponent, Residue p);
/// Throws DivisionByZero for a == 0.
Residue inv_mod(Residue a, Residue p);
bool is_prime(std::uint64_t n);

void trim(FpPoly& f);
int degree(const FpPoly& f);

FpPoly poly_add(const FpPoly& a, const FpPoly& b, Residue p);
FpPoly poly_sub(const FpPoly& a, const FpPoly& b, Residue p);
FpPoly poly_mul(const FpPoly& a, const FpPoly& b, Residue p);
std::pair<FpPoly, FpPoly> poly_divmod(const FpPoly& a, const FpPoly& b, Residue p);
FpPoly poly_mod(const FpPoly& a, const FpPoly& b, Residue p);
/// Monic gcd; gcd(0, 0) = 0.
FpPoly poly_gcd(FpPoly a, FpPoly b, Residue p);
FpPoly poly_powmod(const FpPoly& base, const mpz_class& exponent, const FpPoly& modulus, Residue p);
/// Inverse of `a` modulo `modulus`; throws DivisionByZero when they are not coprime.
FpPoly poly_invmod(const FpPoly& a, const FpPoly& modulus, Residue p);

/// Rabin's test for a monic polynomial of degree >= 1.
bool is_irreducible(const FpPoly& f, Residue p);
/// Smallest monic irreducible of degree k, comparing coefficient vectors
/// lexicographically from the constant term upward.
FpPoly smallest_irreducible(Residue p, unsigned k);

}  // namespace tmrat::detail
