// Acceptance suite: one PASS/FAIL line per criterion, with wall time against
// the budget. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

#include "support.hpp"
#include "tmrat/error.hpp"
#include "tmrat/stability.hpp"
#include "tmrat_cli/app.hpp"

using namespace tmrat;
using namespace tmrat::testing;

namespace {

struct Check {
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string first_failure;
  std::string notes;

  void expect(bool ok, const std::string& what) {
    ++cases;
    if (ok) return;
    if (failures++ == 0) first_failure = what;
  }
};

// Complete multiplier spectra seen in criteria 4-6, replayed by criterion 7.
struct SpectrumLog {
  std::uint64_t seen = 0;
  std::uint64_t violations = 0;
  std::string first;

  void record(const RatMap2& phi) {
    const RootList fixed = fixed_points(phi);
    if (!fixed.complete) return;
    ++seen;
    std::array<Element, 3> mu{phi.field().zero(), phi.field().zero(), phi.field().zero()};
    std::size_t k = 0;
    for (const auto& e : fixed.entries) {
      // A repeated fixed point has multiplier 1; simple ones come from the quotient rule.
      const Element m = e.multiplicity >= 2 ? phi.field().one() : derivative_oracle(phi.coefficients(), e.point);
      for (unsigned i = 0; i < e.multiplicity; ++i) mu[k++] = m;
    }
    const Element s1 = mu[0] + mu[1] + mu[2];
    const Element s3 = mu[0] * mu[1] * mu[2];
    if (!(s1 == s3 + phi.field().from_int(2))) {
      if (violations++ == 0) first = phi.to_string();
    }
  }
} spectra;

int failed_criteria = 0;

void criterion(int id, const char* title, double budget_s, const std::function<void(Check&)>& body) {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool ok = c.failures == 0 && dt < budget_s;
  if (!ok) ++failed_criteria;
  std::printf("%s criterion %2d  %-44s %7llu cases  %8.3f s (budget %g s)%s%s\n", ok ? "PASS" : "FAIL", id, title,
              static_cast<unsigned long long>(c.cases), dt, budget_s, c.notes.empty() ? "" : "  ", c.notes.c_str());
  if (c.failures) {
    std::printf("     %llu failure(s); first: %s\n", static_cast<unsigned long long>(c.failures), c.first_failure.c_str());
  }
  if (dt >= budget_s) std::printf("     over the runtime budget\n");
  std::fflush(stdout);
}

ProjPoint aff(const Field& F, long v) { return ProjPoint::affine(F.from_int(v)); }

void c1(Check& c) {
  const Field Q = Field::rationals();
  const RatMap2 phi = RatMap2::parse("(3*z^2+1)/(z^2+3)", Q);
  const RootList fixed = fixed_points(phi);
  c.expect(fixed.complete && fixed.entries.size() == 1 && fixed.entries[0].point == aff(Q, 1) &&
               fixed.entries[0].multiplicity == 3,
           "fixed points");
  const RootList crit = critical_points(phi);
  c.expect(crit.complete && crit.entries.size() == 2 && crit.multiplicity_of(aff(Q, 0)) == 1 &&
               crit.multiplicity_of(ProjPoint::infinity(Q)) == 1,
           "critical points");
  // Same through the CLI.
  const auto out = cli::run({"--output", "json", "analyze", "(3*z^2+1)/(z^2+3)", "--field", "Q"});
  const auto j = nlohmann::json::parse(out.out);
  c.expect(out.exit_code == 0, "cli exit code");
  c.expect(j["result"]["fixed_points"]["roots"] == nlohmann::json::parse(R"([{"point":"1","multiplicity":3}])"),
           "cli fixed points");
  c.expect(j["result"]["critical_points"]["roots"] ==
               nlohmann::json::parse(R"([{"point":"0","multiplicity":1},{"point":"inf","multiplicity":1}])"),
           "cli critical points");
}

void c2(Check& c) {
  const Field Q = Field::rationals();
  const auto mc = validate_marking({aff(Q, 1), aff(Q, -1), aff(Q, 2)}, {aff(Q, 0), ProjPoint::infinity(Q)});
  c.expect(!mc.marking && mc.violated == std::vector<Locus>{Locus::R3}, "rejected with locus R3");
  const auto v = classify(WeightedConfig::parse("points=(1,-1,2,0,inf);weights=(1,1,1,2,2)", Q));
  c.expect(v.classification == Stability::Stable, "stable under (1,1,1,2,2)");
  const auto out = cli::run({"--output", "json", "invariants", "(1,-1,2;0,inf)"});
  c.expect(out.exit_code == 1 && nlohmann::json::parse(out.out)["result"]["loci"] == nlohmann::json::array({"R3"}),
           "cli rejection");
}

void c3(Check& c) {
  const Field Q = Field::rationals();
  const auto u = classify(WeightedConfig::parse("points=(1,1,1,0,inf);weights=(1,1,1,1,1)", Q));
  c.expect(u.classification == Stability::Unstable && u.witnesses.size() == 1 && u.witnesses[0].weight == 3,
           "unstable under all-ones");
  const auto s = classify(WeightedConfig::parse("points=(1,1,1,0,inf);weights=(1,1,1,2,2)", Q));
  c.expect(s.classification == Stability::Stable, "stable under (1,1,1,2,2)");
}

void w_surface_batch(Check& c, const Field& F, const std::function<TotalMarking()>& draw, int n) {
  for (int i = 0; i < n; ++i) {
    const TotalMarking m = draw();
    const CrossRatioTriple r = cross_ratios(m);
    c.expect(w_equation_oracle(r) && r == cross_ratio_oracle(m) && r.on_w(), "W equation at " + m.to_string());
    spectra.record(reconstruct(m));
  }
  (void)F;
}

void c4(Check& c) {
  Rng rng(4001);
  const Field F101 = Field::prime(101), F9 = Field::extension(3, 2), Q = Field::rationals();
  w_surface_batch(c, F101, [&] { return random_valid_marking(F101, rng); }, 1000);
  w_surface_batch(c, F9, [&] { return random_valid_marking(F9, rng); }, 1000);
  w_surface_batch(c, Q, [&] { return random_valid_marking([&] { return random_rational_point(Q, rng); }); }, 1000);
  const Field F3 = Field::prime(3);
  const auto pts = all_points(F3);
  std::uint64_t exhaustive = 0;
  for (const auto& a : pts)
    for (const auto& b : pts)
      for (const auto& d : pts)
        for (const auto& q1 : pts)
          for (const auto& q2 : pts) {
            const auto mc = validate_marking({a, b, d}, {q1, q2});
            if (!mc.marking) continue;
            ++exhaustive;
            const CrossRatioTriple r = cross_ratios(*mc.marking);
            c.expect(w_equation_oracle(r) && r == cross_ratio_oracle(*mc.marking), "W over F3: " + mc.marking->to_string());
            spectra.record(reconstruct(*mc.marking));
          }
  c.notes = "F3 valid markings: " + std::to_string(exhaustive);
}

void c5(Check& c) {
  const Field F5 = Field::prime(5);
  std::uint64_t maps = 0, marked = 0;
  for_each_map(F5, [&](const RatMap2& phi) {
    ++maps;
    spectra.record(phi);
    if (!fixed_points(phi).complete || !critical_points(phi).complete) return;
    ++marked;
    c.expect(reconstruct(marking_of(phi)).equivalent(phi), "round trip " + phi.to_string());
  });
  c.expect(maps == 5 * 5 * 5 * 5 * 5 - 5 * 5 * 5, "map count over F5 is q^5 - q^3");

  const Field C = Field::complex(128);
  Rng rng(5001);
  double worst = 0;
  for (int n = 0; n < 100; ++n) {
    std::array<Element, 6> coeffs{C.zero(), C.zero(), C.zero(), C.zero(), C.zero(), C.zero()};
    for (auto& e : coeffs) {
      const long num = static_cast<long>(rng() % 2001) - 1000;
      e = C.from_rational(mpq_class(num, 100));
    }
    if (sylvester_resultant(coeffs).is_zero()) {
      --n;
      continue;
    }
    const RatMap2 phi(coeffs);
    const RatMap2 back = reconstruct(marking_of(phi, rng));
    const double err = back.relative_distance(phi).to_double();
    worst = std::max(worst, err);
    c.expect(err < 1e-20, "complex round trip error " + std::to_string(err) + " on " + phi.to_string());
  }
  std::ostringstream os;
  os << "F5 maps " << maps << ", rationally marked " << marked << ", worst C error " << worst;
  c.notes = os.str();
}

void c6(Check& c) {
  const Field F = Field::prime(5);
  const auto pts = all_points(F);
  const auto group = enumerate_pgl2(F);
  c.expect(group.size() == 120, "|PGL2(F5)| = 120");
  std::vector<TotalMarking> markings;
  for (const auto& a : pts)
    for (const auto& b : pts)
      for (const auto& d : pts)
        for (const auto& q1 : pts)
          for (const auto& q2 : pts) {
            auto mc = validate_marking({a, b, d}, {q1, q2});
            if (mc.marking) markings.push_back(*mc.marking);
          }
  // Orbit of each marking under the whole group, keyed by its literal.
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < markings.size(); ++i) index.emplace(markings[i].to_string(), i);
  std::vector<std::size_t> orbit_id(markings.size(), SIZE_MAX);
  std::size_t orbits = 0;
  for (std::size_t i = 0; i < markings.size(); ++i) {
    if (orbit_id[i] != SIZE_MAX) continue;
    for (const auto& g : group) {
      const std::size_t j = index.at(markings[i].transported(g).to_string());
      orbit_id[j] = orbits;
    }
    ++orbits;
  }
  // Equal cross ratios <=> same orbit, checked on every pair through the keys.
  std::map<std::string, std::size_t> orbit_of_key;
  std::map<std::size_t, std::string> key_of_orbit;
  for (std::size_t i = 0; i < markings.size(); ++i) {
    const std::string key = cross_ratios(markings[i]).to_homogeneous_string();
    const auto [a, fresh_key] = orbit_of_key.emplace(key, orbit_id[i]);
    const auto [b, fresh_orbit] = key_of_orbit.emplace(orbit_id[i], key);
    c.expect(a->second == orbit_id[i] && b->second == key, "disagreement at " + markings[i].to_string());
    spectra.record(reconstruct(markings[i]));
  }
  // The decision procedure itself, on a spread of pairs.
  for (std::size_t i = 0; i < markings.size(); i += 37) {
    for (std::size_t j = 0; j < markings.size(); j += 53) {
      const Equivalence e = equivalent(markings[i], markings[j]);
      c.expect(e.equivalent == (orbit_id[i] == orbit_id[j]), "equivalent() on " + markings[i].to_string());
      if (e.equivalent) {
        c.expect(e.witness && markings[i].transported(*e.witness) == markings[j], "witness transports");
      }
    }
  }
  c.notes = std::to_string(markings.size()) + " markings, " + std::to_string(orbits) + " orbits, " +
            std::to_string(orbit_of_key.size()) + " cross-ratio classes";
}

void c7(Check& c) {
  c.cases += spectra.seen;
  if (spectra.violations) {
    c.failures += spectra.violations;
    c.first_failure = "sigma identity fails on " + spectra.first;
  }
  const Field F = Field::prime(101);
  Rng rng(7001);
  for (int n = 0; n < 500; ++n) {
    const TotalMarking m = random_generic_marking(F, rng);
    const RatMap2 phi = reconstruct(m);
    const auto mu = multipliers_from_v(to_v_coords(cross_ratios(m)));
    for (std::size_t i = 0; i < 3; ++i) {
      c.expect(derivative_oracle(phi.coefficients(), m.p(i)) == mu[i], "two-path multiplier at " + m.to_string());
      c.expect(multiplier(phi, m.p(i)) == mu[i], "library multiplier at " + m.to_string());
    }
  }
  c.notes = std::to_string(spectra.seen) + " complete spectra from criteria 4-6";
}

void c8(Check& c) {
  for (std::uint64_t p : {5u, 7u}) {
    const Field F = Field::prime(p);
    std::uint64_t maps = 0;
    for_each_map(F, [&](const RatMap2& phi) {
      ++maps;
      c.expect(!critical_discriminant_oracle(phi.coefficients()).is_zero(), "repeated critical point " + phi.to_string());
    });
    c.expect(maps == p * p * p * p * p - p * p * p, "map count over F" + std::to_string(p));
  }
}

void c9(Check& c) {
  const Field F = Field::prime(101);
  Rng rng(9001);
  for (int n = 0; n < 500; ++n) {
    const TotalMarking m = random_valid_marking(F, rng);
    const Orbit12 o = orbit12(m);
    std::set<std::string> distinct;
    for (const auto& t : o.triples) distinct.insert(t.to_homogeneous_string());
    c.expect(o.triples.size() == 12 && 12 % distinct.size() == 0 && distinct.size() == o.distinct, "orbit size");
    std::array<std::size_t, 3> perm{0, 1, 2};
    std::shuffle(perm.begin(), perm.end(), rng);
    const bool swap = rng() % 2;
    const TotalMarking s({m.p(perm[0]), m.p(perm[1]), m.p(perm[2])}, {m.q(swap ? 1 : 0), m.q(swap ? 0 : 1)});
    c.expect(orbit12(s).canonical == o.canonical, "canonical depends on slot order: " + m.to_string());
  }
  const Field Q = Field::rationals();
  c.expect(orbit12(parse_marking("(1,1,1;0,inf)", Q)).distinct == 1, "fixture orbit collapses");
}

void c10(Check& c) {
  for (const char* payload : {"(3*z^2+1)/(z^2+3)", "(0,1,inf;0,inf)"}) {
    const auto out = cli::run({"--output", "json", "sweep", payload, "--primes", "2..99"});
    const auto j = nlohmann::json::parse(out.out);
    c.expect(out.exit_code == 0, std::string("sweep exit code for ") + payload);
    std::size_t odd = 0;
    for (const auto& e : j["result"]["primes"]) {
      if (e["prime"] == 2) {
        c.expect(e["status"] == "skipped" && e["reason"] == "characteristic two excluded", "p = 2 not skipped");
      } else {
        ++odd;
        c.expect(e["status"] == "pass", std::string(payload) + " fails at p = " + e["prime"].dump());
      }
    }
    c.expect(odd == 24, "all 24 odd primes below 100 checked");
    bool diagnosed = false;
    for (const auto& d : j["diagnostics"]) {
      diagnosed = diagnosed || (d["kind"] == "skipped" && d["message"].get<std::string>().find("characteristic two") !=
                                                              std::string::npos);
    }
    c.expect(diagnosed, "skip diagnostic for p = 2");
  }
}

}  // namespace

int main() {
  criterion(1, "triple fixed point fixture", 1, c1);
  criterion(2, "excluded locus R3 and stable configuration", 1, c2);
  criterion(3, "linearization contrast", 1, c3);
  criterion(4, "W-surface identity (F101, F9, Q, all of F3)", 30, c4);
  criterion(5, "round trip (all of F5; C at 128 bits)", 60, c5);
  criterion(6, "complete conjugacy invariant over F5", 120, c6);
  criterion(7, "multiplier identities", 30, c7);
  criterion(8, "two distinct critical points (F5, F7)", 60, c8);
  criterion(9, "12-to-1 structure", 10, c9);
  criterion(10, "prime sweep over Z[1/2]", 30, c10);
  std::printf("%d of 10 criteria failed\n", failed_criteria);
  return failed_criteria == 0 ? 0 : 1;
}
