#include "fp_poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "tmrat/error.hpp"

namespace tmrat::detail {

Residue pow_mod(Residue base, std::uint64_t exponent, Residue p) {
  Residue result = 1 % p;
  base %= p;
  while (exponent > 0) {
    if (exponent & 1U) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exponent >>= 1U;
  }
  return result;
}

Residue inv_mod(Residue a, Residue p) {
  a %= p;
  if (a == 0) throw DivisionByZero();
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<Residue>(t);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

void trim(FpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const FpPoly& f) { return static_cast<int>(f.size()) - 1; }

FpPoly poly_add(const FpPoly& a, const FpPoly& b, Residue p) {
  FpPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = add_mod(r[i], b[i], p);
  trim(r);
  return r;
}

FpPoly poly_sub(const FpPoly& a, const FpPoly& b, Residue p) {
  FpPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = sub_mod(r[i], b[i], p);
  trim(r);
  return r;
}

FpPoly poly_mul(const FpPoly& a, const FpPoly& b, Residue p) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = add_mod(r[i + j], mul_mod(a[i], b[j], p), p);
    }
  }
  trim(r);
  return r;
}

std::pair<FpPoly, FpPoly> poly_divmod(const FpPoly& a, const FpPoly& b, Residue p) {
  if (b.empty()) throw DivisionByZero();
  FpPoly rem = a;
  trim(rem);
  if (rem.size() < b.size()) return {{}, rem};
  FpPoly quot(rem.size() - b.size() + 1, 0);
  Residue lead_inv = inv_mod(b.back(), p);
  for (std::size_t i = rem.size(); i-- >= b.size();) {
    Residue c = mul_mod(rem[i], lead_inv, p);
    std::size_t shift = i + 1 - b.size();
    quot[shift] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      rem[shift + j] = sub_mod(rem[shift + j], mul_mod(c, b[j], p), p);
    }
  }
  trim(quot);
  trim(rem);
  return {quot, rem};
}

FpPoly poly_mod(const FpPoly& a, const FpPoly& b, Residue p) { return poly_divmod(a, b, p).second; }

FpPoly poly_gcd(FpPoly a, FpPoly b, Residue p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    FpPoly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Residue inv = inv_mod(a.back(), p);
    for (auto& c : a) c = mul_mod(c, inv, p);
  }
  return a;
}

FpPoly poly_powmod(const FpPoly& base, const mpz_class& exponent, const FpPoly& modulus, Residue p) {
  FpPoly result{1 % p};
  trim(result);
  result = poly_mod(result, modulus, p);
  FpPoly b = poly_mod(base, modulus, p);
  std::size_t bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
  if (exponent == 0) return result;
  for (std::size_t i = bits; i-- > 0;) {
    result = poly_mod(poly_mul(result, result, p), modulus, p);
    if (mpz_tstbit(exponent.get_mpz_t(), i)) result = poly_mod(poly_mul(result, b, p), modulus, p);
  }
  return result;
}

FpPoly poly_invmod(const FpPoly& a, const FpPoly& modulus, Residue p) {
  FpPoly r0 = modulus, r1 = poly_mod(a, modulus, p);
  FpPoly s0{}, s1{1};
  while (!r1.empty()) {
    auto [q, r] = poly_divmod(r0, r1, p);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, poly_sub(s0, poly_mul(q, s1, p), p));
  }
  if (degree(r0) != 0) throw DivisionByZero();
  Residue inv = inv_mod(r0[0], p);
  for (auto& c : s0) c = mul_mod(c, inv, p);
  return poly_mod(s0, modulus, p);
}

namespace {

std::vector<unsigned> prime_divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_irreducible(const FpPoly& f, Residue p) {
  int k = degree(f);
  if (k < 1) return false;
  if (k == 1) return true;
  const FpPoly x{0, 1};
  auto frobenius_power = [&](unsigned n) {
    mpz_class q;
    mpz_ui_pow_ui(q.get_mpz_t(), p, n);
    return poly_powmod(x, q, f, p);
  };
  if (poly_sub(frobenius_power(static_cast<unsigned>(k)), x, p) != FpPoly{}) return false;
  for (unsigned d : prime_divisors(static_cast<unsigned>(k))) {
    FpPoly h = poly_sub(frobenius_power(static_cast<unsigned>(k) / d), x, p);
    if (degree(poly_gcd(h, f, p)) != 0) return false;
  }
  return true;
}

FpPoly smallest_irreducible(Residue p, unsigned k) {
  if (k == 0) throw std::invalid_argument("extension degree must be positive");
  // Enumerate with the constant term as the most significant digit.
  std::vector<Residue> digits(k, 0);
  while (true) {
    FpPoly f(digits.begin(), digits.end());
    f.push_back(1);
    // t divides anything with zero constant term (k > 1)
    if ((k == 1 || digits[0] != 0) && is_irreducible(f, p)) return f;
    if (k > 1 && digits[0] == 0) {
      digits[0] = 1;
      continue;
    }
    std::size_t pos = k;
    while (pos-- > 0) {
      if (++digits[pos] < p) break;
      digits[pos] = 0;
      if (pos == 0) throw std::logic_error("no irreducible polynomial found");
    }
  }
}

}  // namespace tmrat::detail
