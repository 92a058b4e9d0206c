#include <map>
#include <numeric>

#include "commands.hpp"
#include "tmrat/error.hpp"

namespace tmrat::cli {

namespace {

struct Suite {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  json counts = json::object();
  json counterexample = nullptr;

  void check(bool ok, const std::string& what) {
    ++cases;
    if (ok) return;
    ++failures;
    if (counterexample.is_null()) counterexample = what;
  }

  json to_json() const {
    return {{"name", name},         {"cases", cases},   {"failures", failures},
            {"passed", failures == 0}, {"counts", counts}, {"counterexample", counterexample}};
  }
};

// Points of P^1(F_p) indexed 0..p-1 (affine) and p (infinity).
ProjPoint point_at(const Field& F, std::uint64_t i) {
  return i == F.prime() ? ProjPoint::infinity(F) : ProjPoint::affine(F.from_int(static_cast<long long>(i)));
}

// Zero when either form vanishes identically.
Element resultant_or_zero(const BinaryForm& f, const BinaryForm& g) {
  if (f.is_zero() || g.is_zero()) return f.field().zero();
  return resultant2(f, g);
}

std::uint64_t index_of(const ProjPoint& pt) { return pt.is_infinity() ? pt.field().prime() : pt.x().residue(); }

// Every coefficient vector over F_p with first nonzero entry 1 and nonzero resultant.
template <class Fn>
void for_each_map(const Field& F, Fn&& fn) {
  const std::uint64_t p = F.prime();
  std::uint64_t total = 1;
  for (int i = 0; i < 6; ++i) total *= p;
  for (std::uint64_t code = 1; code < total; ++code) {
    std::array<std::uint64_t, 6> d{};
    std::uint64_t c = code;
    for (int i = 5; i >= 0; --i) {
      d[static_cast<std::size_t>(i)] = c % p;
      c /= p;
    }
    const auto first = std::find_if(d.begin(), d.end(), [](auto v) { return v != 0; });
    if (*first != 1) continue;
    std::array<Element, 6> e{F.zero(), F.zero(), F.zero(), F.zero(), F.zero(), F.zero()};
    for (std::size_t i = 0; i < 6; ++i) e[i] = F.from_int(static_cast<long long>(d[i]));
    if (resultant_or_zero(BinaryForm({e[0], e[1], e[2]}), BinaryForm({e[3], e[4], e[5]})).is_zero()) continue;
    fn(RatMap2(std::move(e)));
  }
}

Suite round_trip_f5() {
  const Field F = Field::prime(5);
  Suite s{"round_trip_f5"};
  std::uint64_t maps = 0, rational = 0, fixed_rational = 0;
  for_each_map(F, [&](const RatMap2& phi) {
    ++maps;
    const RootList fixed = fixed_points(phi);
    if (fixed.complete) {
      ++fixed_rational;
      const MultiplierSpectrum sp = multiplier_spectrum(phi);
      s.check(sp.satisfies_fixed_point_identity(), "multiplier identity: " + phi.to_string());
      const BinaryForm w = phi.critical_point_form();
      for (const auto& e : sp.entries) {
        const bool critical = w.evaluate(e.point).is_zero();
        s.check(e.multiplier.is_zero() == critical, "superattracting vs critical: " + phi.to_string());
      }
    }
    try {
      const TotalMarking m = marking_of(phi);
      ++rational;
      s.check(reconstruct(m).equivalent(phi), "round trip: " + phi.to_string());
    } catch (const IncompleteFactorization&) {
    }
  });
  s.counts = {{"maps", maps}, {"maps_with_rational_fixed_points", fixed_rational}, {"maps_with_rational_marking", rational}};
  return s;
}

// Every tuple of P^1(F_5)^5: validity against the resultant of the normal
// form, then orbits under PGL2(F_5) against cross-ratio classes.
std::pair<Suite, Suite> tuples_and_conjugacy_f5(std::uint64_t witness_cap) {
  const Field F = Field::prime(5);
  const std::uint64_t n = 6;  // points of P^1(F_5)
  std::uint64_t total = 1;
  for (int i = 0; i < 5; ++i) total *= n;

  Suite valid{"valid_tuples_f5"};
  std::vector<std::optional<TotalMarking>> markings(total);
  std::uint64_t accepted = 0, rejected = 0;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::array<std::uint64_t, 5> idx{};
    std::uint64_t c = code;
    for (int i = 4; i >= 0; --i) {
      idx[static_cast<std::size_t>(i)] = c % n;
      c /= n;
    }
    std::array<ProjPoint, 3> p{point_at(F, idx[0]), point_at(F, idx[1]), point_at(F, idx[2])};
    std::array<ProjPoint, 2> q{point_at(F, idx[3]), point_at(F, idx[4])};
    MarkingCheck mc = validate_marking(p, q);
    if (q[0] == q[1]) {
      valid.check(!mc.marking, "coincident critical slots accepted");
      ++rejected;
      continue;
    }
    // Resultant of the normal form built from the pushed fixed points.
    const MobiusMap g(q[0].y(), -q[0].x(), q[1].y(), -q[1].x());
    const BinaryForm cubic = BinaryForm::from_roots({g.apply(p[0]), g.apply(p[1]), g.apply(p[2])}, F);
    const Element res =
        resultant_or_zero(BinaryForm({cubic[1], F.zero(), cubic[3]}), BinaryForm({-cubic[0], F.zero(), -cubic[2]}));
    const std::string label = "(" + p[0].to_string() + "," + p[1].to_string() + "," + p[2].to_string() + ";" +
                              q[0].to_string() + "," + q[1].to_string() + ")";
    valid.check(mc.marking.has_value() == !res.is_zero(), "validity vs resultant: " + label);
    if (!mc.marking) {
      ++rejected;
      continue;
    }
    ++accepted;
    bool ok = true;
    try {
      const RatMap2 phi = reconstruct(*mc.marking);
      ok = marking_of(phi).fixed().size() == 3;
    } catch (const std::exception&) {
      ok = false;
    }
    valid.check(ok, "valid tuple does not come from a map: " + label);
    markings[code] = std::move(mc.marking);
  }
  valid.counts = {{"tuples", total}, {"valid", accepted}, {"excluded", rejected}};

  Suite conj{"conjugacy_f5"};
  const std::vector<MobiusMap> group = enumerate_pgl2(F);
  std::vector<std::array<std::uint64_t, 6>> perms;
  for (const auto& g : group) {
    std::array<std::uint64_t, 6> perm{};
    for (std::uint64_t i = 0; i < n; ++i) perm[i] = index_of(g.apply(point_at(F, i)));
    perms.push_back(perm);
  }
  std::vector<std::uint64_t> parent(total);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::uint64_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::uint64_t code = 0; code < total; ++code) {
    if (!markings[code]) continue;
    for (const auto& perm : perms) {
      std::uint64_t image = 0;
      std::uint64_t c = code, scale = 1;
      for (int i = 0; i < 5; ++i) {
        image += perm[c % n] * scale;
        c /= n;
        scale *= n;
      }
      const std::uint64_t a = find(code), b = find(image);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::map<std::uint64_t, std::string> key_of_orbit;
  std::map<std::string, std::uint64_t> orbit_of_key;
  std::uint64_t witnesses = 0;
  for (std::uint64_t code = 0; code < total; ++code) {
    if (!markings[code]) continue;
    const std::uint64_t root = find(code);
    const std::string key = cross_ratios(*markings[code]).to_string();
    auto [it1, new_orbit] = key_of_orbit.emplace(root, key);
    auto [it2, new_key] = orbit_of_key.emplace(key, root);
    conj.check(it1->second == key && it2->second == root,
               "orbit/cross-ratio mismatch at " + markings[code]->to_string());
    if (witnesses < witness_cap && root != code) {
      ++witnesses;
      bool ok = false;
      try {
        const Equivalence e = equivalent(*markings[root], *markings[code]);
        ok = e.equivalent && e.witness.has_value();
      } catch (const std::exception&) {
      }
      conj.check(ok, "no witness for " + markings[root]->to_string() + " ~ " + markings[code]->to_string());
    }
  }
  conj.counts = {{"group_order", group.size()},
                 {"markings", accepted},
                 {"orbits", key_of_orbit.size()},
                 {"cross_ratio_classes", orbit_of_key.size()},
                 {"witnesses_checked", witnesses}};
  return {valid, conj};
}

Suite distinct_critical_points(const std::vector<std::uint64_t>& primes) {
  Suite s{"distinct_critical_points"};
  for (auto p : primes) {
    const Field F = Field::prime(p);
    std::uint64_t maps = 0;
    for_each_map(F, [&](const RatMap2& phi) {
      ++maps;
      s.check(!discriminant2(phi.critical_point_form()).is_zero(), "coincident critical points: " + phi.to_string());
    });
    s.counts["F" + std::to_string(p)] = maps;
  }
  return s;
}

// Exhaustive over P^1(F_3): the coincidence-class classifier against a direct
// evaluation of the subspace inequality at every point of the line.
Suite gitstab_f3() {
  const Field F = Field::prime(3);
  Suite s{"stability_f3"};
  const std::uint64_t n = 4;
  for (std::size_t m = 1; m <= 4; ++m) {
    std::uint64_t tuples = 1;
    for (std::size_t i = 0; i < m; ++i) tuples *= n;
    // weights in [1, 8] with sum <= 8
    std::vector<std::vector<std::uint64_t>> weight_vectors;
    std::vector<std::uint64_t> w(m, 1);
    while (true) {
      if (std::accumulate(w.begin(), w.end(), std::uint64_t{0}) <= 8) weight_vectors.push_back(w);
      std::size_t i = 0;
      while (i < m && ++w[i] > 8) w[i++] = 1;
      if (i == m) break;
    }
    for (std::uint64_t code = 0; code < tuples; ++code) {
      std::vector<ProjPoint> pts;
      std::uint64_t c = code;
      for (std::size_t i = 0; i < m; ++i) {
        pts.push_back(point_at(F, c % n));
        c /= n;
      }
      for (const auto& wv : weight_vectors) {
        const WeightedConfig cfg(pts, wv);
        const std::uint64_t total = cfg.total_weight();
        bool strict = true, weak = true;
        for (std::uint64_t k = 0; k < n; ++k) {
          const ProjPoint W = point_at(F, k);
          std::uint64_t inside = 0;
          for (std::size_t i = 0; i < m; ++i) {
            if (pts[i] == W) inside += wv[i];
          }
          // (dim W + 1) / (r + 1) = 1/2 for a point of the line
          strict = strict && 2 * inside < total;
          weak = weak && 2 * inside <= total;
        }
        const Stability expected = strict ? Stability::Stable : weak ? Stability::StrictlySemistable : Stability::Unstable;
        s.check(classify(cfg).classification == expected, "classification mismatch");
      }
    }
  }
  return s;
}

Suite random_markings_f101(std::uint64_t count, Rng& rng) {
  const Field F = Field::prime(101);
  Suite s{"random_markings_f101"};
  std::uniform_int_distribution<std::uint64_t> pick(0, 101);
  std::uint64_t drawn = 0, generic = 0;
  while (drawn < count) {
    std::array<ProjPoint, 3> p{point_at(F, pick(rng)), point_at(F, pick(rng)), point_at(F, pick(rng))};
    std::array<ProjPoint, 2> q{point_at(F, pick(rng)), point_at(F, pick(rng))};
    const MarkingCheck mc = validate_marking(p, q);
    if (!mc.marking) continue;
    ++drawn;
    const TotalMarking& m = *mc.marking;
    const CrossRatioTriple r = cross_ratios(m);
    const VPoint x = to_v_coords(r);
    s.check(r.on_w(), "W: " + m.to_string());
    s.check(x.on_v(), "V: " + m.to_string());
    s.check(from_v_coords(x) == r, "involution: " + m.to_string());
    const RatMap2 phi = reconstruct(m);
    const MultiplierSpectrum sp = multiplier_spectrum(phi);
    s.check(sp.satisfies_fixed_point_identity(), "multiplier identity: " + m.to_string());
    const bool is_generic = std::none_of(r.r.begin(), r.r.end(), [](const ProjPoint& v) {
      return v.is_infinity() || v.value().is_zero();
    });
    if (is_generic) {
      ++generic;
      const auto mu = multipliers_from_v(x);
      for (std::size_t i = 0; i < 3; ++i) s.check(multiplier(phi, m.p(i)) == mu[i], "two-path multiplier: " + m.to_string());
    }
  }
  s.counts = {{"markings", drawn}, {"generic", generic}};
  return s;
}

}  // namespace

void cmd_selftest(Report& report, const Options& opt, const std::string& scale) {
  if (scale != "small" && scale != "full") throw ParseError("selftest scale must be small or full");
  const bool full = scale == "full";
  Rng rng(opt.seed);
  std::vector<Suite> suites;
  suites.push_back(round_trip_f5());
  auto [valid, conj] = tuples_and_conjugacy_f5(full ? UINT64_MAX : 500);
  suites.push_back(std::move(valid));
  suites.push_back(std::move(conj));
  suites.push_back(distinct_critical_points(full ? std::vector<std::uint64_t>{5, 7} : std::vector<std::uint64_t>{5}));
  suites.push_back(gitstab_f3());
  suites.push_back(random_markings_f101(full ? 1000 : 200, rng));

  report.result["scale"] = scale;
  json out = json::array();
  bool all = true;
  for (const auto& s : suites) {
    out.push_back(s.to_json());
    if (s.failures > 0) {
      all = false;
      report.diagnose("oracle-disagreement", s.name + ": " + s.counterexample.get<std::string>());
    }
  }
  report.result["suites"] = out;
  report.result["all_passed"] = all;
  if (!all) report.fail(1);
}

}  // namespace tmrat::cli
