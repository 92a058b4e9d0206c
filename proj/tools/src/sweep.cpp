#include <algorithm>
#include <numeric>

#include "commands.hpp"
#include "tmrat/error.hpp"
#include "tmrat/parse.hpp"

namespace tmrat::cli {

namespace {

constexpr std::uint64_t kMaxSweepPrime = 1000003;

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t parse_u64(std::string_view s) {
  s = trim(s);
  if (s.empty() || s.size() > 12 || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw ParseError("bad prime bound '" + std::string(s) + "'");
  }
  return std::stoull(std::string(s));
}

struct Payload {
  std::string kind;                     // "map" or "marking"
  std::optional<RatMap2> map;           // over Q
  std::optional<TotalMarking> marking;  // over Q, when rational
  std::optional<std::array<Element, 3>> sigma;
  std::vector<mpz_class> denominators;
  mpz_class resultant;  // of the primitive integer representative
};

Payload read_payload(const std::string& text) {
  const Field Q = Field::rationals();
  Payload pl;
  if (text.find(';') != std::string::npos) {
    pl.kind = "marking";
    pl.marking.emplace(parse_marking(text, Q));
    for (const auto& pt : pl.marking->fixed()) {
      if (!pt.is_infinity()) pl.denominators.push_back(pt.value().rational().get_den());
    }
    for (const auto& pt : pl.marking->critical()) {
      if (!pt.is_infinity()) pl.denominators.push_back(pt.value().rational().get_den());
    }
    pl.map.emplace(reconstruct(*pl.marking));
  } else {
    pl.kind = "map";
    const auto raw = RatMap2::parse_coefficients(text, Q);
    for (const auto& c : raw) pl.denominators.push_back(c.rational().get_den());
    pl.map.emplace(raw);
    try {
      pl.marking.emplace(marking_of(*pl.map));
    } catch (const IncompleteFactorization&) {
      // Irrational fixed or critical points: only the map reduces.
    }
  }
  if (pl.marking) pl.sigma = multiplier_spectrum(*pl.map).symmetric_functions();
  const auto c = pl.map->display_coefficients();
  pl.resultant = resultant2(BinaryForm({c[0], c[1], c[2]}), BinaryForm({c[3], c[4], c[5]})).rational().get_num();
  return pl;
}

// Reduction of a rational point of the projective line modulo the field's characteristic.
ProjPoint reduce(const ProjPoint& pt, const Field& F) {
  if (pt.is_infinity()) return ProjPoint::infinity(F);
  const mpq_class& v = pt.value().rational();
  return ProjPoint(F.from_integer(v.get_num()), F.from_integer(v.get_den()));
}

Element reduce(const Element& e, const Field& F) { return F.from_rational(e.rational()); }

RatMap2 reduce(const RatMap2& phi, const Field& F) {
  const auto c = phi.display_coefficients();
  return RatMap2({reduce(c[0], F), reduce(c[1], F), reduce(c[2], F), reduce(c[3], F), reduce(c[4], F), reduce(c[5], F)});
}

bool divides(std::uint64_t p, const mpz_class& n) { return mpz_divisible_ui_p(n.get_mpz_t(), p) != 0; }

json run_prime(std::uint64_t p, const Payload& pl, Rng& rng) {
  json entry = json::object();
  entry["prime"] = p;
  auto skip = [&](const std::string& why) {
    entry["status"] = "skipped";
    entry["reason"] = why;
    return entry;
  };
  if (p == 2) return skip("characteristic two excluded");
  for (const auto& d : pl.denominators) {
    if (divides(p, d)) return skip("prime divides a denominator");
  }
  if (divides(p, pl.resultant)) return skip("bad reduction: prime divides the resultant");

  Field F = Field::prime(p);
  RatMap2 phi = reduce(*pl.map, F);
  {
    const RootList fixed = fixed_points(phi, rng);
    const RootList crit = critical_points(phi, rng);
    const unsigned k = std::lcm(fixed.splitting_degree(), crit.splitting_degree());
    if (k > 1) {
      F = Field::extension(p, k);
      phi = reduce(*pl.map, F);
    }
  }
  entry["field"] = F.describe();

  json checks = json::object();
  try {
    if (pl.marking) {
      std::array<ProjPoint, 3> ps{reduce(pl.marking->p(0), F), reduce(pl.marking->p(1), F), reduce(pl.marking->p(2), F)};
      std::array<ProjPoint, 2> qs{reduce(pl.marking->q(0), F), reduce(pl.marking->q(1), F)};
      const MarkingCheck mc = validate_marking(ps, qs);
      if (!mc.marking) return skip("bad reduction: marking falls into locus " + to_string(mc.violated.front()));
      const CrossRatioTriple rq = cross_ratios(*pl.marking);
      const CrossRatioTriple rp{{reduce(rq[0], F), reduce(rq[1], F), reduce(rq[2], F)}};
      checks["cross_ratios_reduce"] = cross_ratios(*mc.marking) == rp;
      checks["reconstruction_reduces"] = reconstruct(*mc.marking).equivalent(phi);
    }

    const TotalMarking m = marking_of(phi, rng);
    const CrossRatioTriple r = cross_ratios(m);
    const VPoint x = to_v_coords(r);
    checks["w_check"] = r.on_w();
    checks["v_check"] = x.on_v();
    checks["involution"] = from_v_coords(x) == r;
    checks["round_trip"] = reconstruct(m).equivalent(phi);
    const MultiplierSpectrum s = multiplier_spectrum(phi, rng);
    checks["multiplier_identity"] = s.satisfies_fixed_point_identity();
    const auto mu = multipliers_from_v(x);
    bool agree = true;
    for (std::size_t i = 0; i < 3; ++i) {
      const Element direct = fixed_points(phi, rng).multiplicity_of(m.p(i)) >= 2 ? F.one() : multiplier(phi, m.p(i));
      agree = agree && direct == mu[i];
    }
    checks["two_path_multipliers"] = agree;
    if (pl.sigma) {
      const auto sig = s.symmetric_functions();
      checks["moduli_reduce"] = sig[0] == reduce((*pl.sigma)[0], F) && sig[1] == reduce((*pl.sigma)[1], F);
    }
  } catch (const std::exception& e) {
    entry["status"] = "fail";
    entry["reason"] = e.what();
    entry["checks"] = checks;
    return entry;
  }
  bool all = true;
  for (const auto& [name, ok] : checks.items()) all = all && ok.get<bool>();
  entry["status"] = all ? "pass" : "fail";
  entry["checks"] = checks;
  return entry;
}

}  // namespace

std::vector<std::uint64_t> parse_prime_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  const std::string_view t = trim(text);
  if (auto dots = t.find(".."); dots != std::string_view::npos) {
    const std::uint64_t lo = parse_u64(t.substr(0, dots));
    const std::uint64_t hi = parse_u64(t.substr(dots + 2));
    if (lo > hi) throw ParseError("empty prime range");
    if (hi > kMaxSweepPrime) throw ParseError("prime range too large");
    for (std::uint64_t n = lo; n <= hi; ++n) {
      if (is_prime(n)) out.push_back(n);
    }
  } else {
    for (auto piece : split_top_level(t, ',')) {
      const std::uint64_t n = parse_u64(piece);
      if (!is_prime(n)) throw ParseError(std::to_string(n) + " is not prime");
      if (n > kMaxSweepPrime) throw ParseError("prime too large");
      out.push_back(n);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }
  if (out.empty()) throw ParseError("no primes in '" + text + "'");
  return out;
}

void cmd_sweep(Report& report, const Options& opt, const std::string& payload, const std::string& primes) {
  if (opt.field.kind() != FieldKind::Rationals) throw ParseError("sweep payloads are read over Q");
  const std::vector<std::uint64_t> ps = parse_prime_list(primes);
  const Payload pl = read_payload(payload);
  report.result["payload_kind"] = pl.kind;
  report.result["map"] = pl.map->to_string();
  report.result["marking"] = pl.marking ? json(pl.marking->to_string()) : json(nullptr);
  report.result["resultant"] = pl.resultant.get_str();

  Rng rng(opt.seed);
  json entries = json::array();
  std::size_t passed = 0, failed = 0, skipped = 0;
  for (auto p : ps) {
    json e = run_prime(p, pl, rng);
    const std::string status = e["status"].get<std::string>();
    if (status == "pass") ++passed;
    else if (status == "fail") ++failed;
    else ++skipped;
    if (status == "skipped") {
      report.diagnose("skipped", "p = " + std::to_string(p) + ": " + e["reason"].get<std::string>(), {{"prime", p}});
    } else if (status == "fail") {
      report.diagnose("failed", "p = " + std::to_string(p) + " failed", {{"prime", p}});
    }
    entries.push_back(std::move(e));
  }
  report.result["primes"] = entries;
  report.result["passed"] = passed;
  report.result["failed"] = failed;
  report.result["skipped"] = skipped;
  if (failed > 0 || passed == 0) report.fail(1);
}

}  // namespace tmrat::cli
