#include "commands.hpp"

#include "tmrat/error.hpp"
#include "tmrat/parse.hpp"

namespace tmrat::cli {

namespace {

void report_incomplete(Report& report, const std::string& what, const RootList& r, const Field& field) {
  json extra = {{"factor", r.unsplit_string()}};
  if (field.finite()) {
    extra["splits_over"] = Field::extension(field.prime(), field.degree() * r.splitting_degree()).describe();
  }
  report.diagnose("incomplete-factorization", what + " do not split over " + field.describe(), extra);
  report.fail(1);
}

json sigma_json(const std::array<Element, 3>& s) {
  return {{"sigma1", s[0].to_string()}, {"sigma2", s[1].to_string()}, {"sigma3", s[2].to_string()}};
}

json map_json(const RatMap2& phi) { return {{"coefficients", phi.to_string()}, {"rational", phi.to_rational_string()}}; }

// Fills the marking-derived invariants shared by `invariants` and `reconstruct`.
void fill_invariants(json& out, const TotalMarking& m) {
  const CrossRatioTriple r = cross_ratios(m);
  out["cross_ratios"] = triple_json(r);
  out["w_check"] = r.on_w();
  const VPoint x = to_v_coords(r);
  out["v_coords"] = vpoint_json(x);
  out["v_check"] = x.on_v();
  out["involution_check"] = from_v_coords(x) == r;
  const auto mu = multipliers_from_v(x);
  out["multipliers"] = json::array({mu[0].to_string(), mu[1].to_string(), mu[2].to_string()});
  const Field& f = m.field();
  out["multiplier_identity"] = mu[0] + mu[1] + mu[2] == mu[0] * mu[1] * mu[2] + f.from_int(2);
}

}  // namespace

void cmd_analyze(Report& report, const Options& opt, const std::string& map_text) {
  Rng rng(opt.seed);
  const auto raw = RatMap2::parse_coefficients(map_text, opt.field);
  const Element res = resultant2(BinaryForm({raw[0], raw[1], raw[2]}), BinaryForm({raw[3], raw[4], raw[5]}));
  report.result["resultant"] = res.to_string();
  const RatMap2 phi(raw);
  report.result["map"] = map_json(phi);

  const RootList fixed = fixed_points(phi, rng);
  const RootList crit = critical_points(phi, rng);
  report.result["fixed_points"] = roots_json(fixed);
  report.result["critical_points"] = roots_json(crit);
  if (!crit.complete) report_incomplete(report, "critical points", crit, opt.field);
  if (!fixed.complete) {
    report_incomplete(report, "fixed points", fixed, opt.field);
    return;
  }
  const MultiplierSpectrum s = multiplier_spectrum(phi, rng);
  const auto sig = s.symmetric_functions();
  report.result["multipliers"] = spectrum_json(s);
  report.result["symmetric_functions"] = sigma_json(sig);
  report.result["moduli"] = json::array({sig[0].to_string(), sig[1].to_string()});
  report.result["sigma1_equals_sigma3_plus_2"] = s.satisfies_fixed_point_identity();
}

void cmd_invariants(Report& report, const Options& opt, const std::string& marking_text) {
  auto [p, q] = parse_marking_points(marking_text, opt.field);
  const MarkingCheck check = validate_marking(p, q);
  report.result["valid"] = check.marking.has_value();
  if (!check.marking) {
    json loci = json::array();
    for (auto l : check.violated) loci.push_back(to_string(l));
    report.result["loci"] = loci;
    for (auto l : check.violated) {
      report.diagnose("rejected", "excluded marking: locus " + to_string(l), {{"locus", to_string(l)}});
    }
    report.fail(1);
    return;
  }
  const TotalMarking& m = *check.marking;
  report.result["marking"] = marking_json(m);
  fill_invariants(report.result, m);
  report.result["map"] = map_json(reconstruct(m));
}

void cmd_reconstruct(Report& report, const Options& opt, const std::string& text) {
  if (text.find(';') != std::string::npos) {
    const TotalMarking m = parse_marking(text, opt.field);
    report.result["source"] = "marking";
    report.result["marking"] = marking_json(m);
    report.result["map"] = map_json(reconstruct(m));
    report.result["cross_ratios"] = triple_json(cross_ratios(m));
    return;
  }
  const CrossRatioTriple r = parse_cross_ratios(text, opt.field);
  const TotalMarking m = marking_from_w(r);
  const RatMap2 phi = reconstruct(m);
  report.result["source"] = "cross_ratios";
  report.result["cross_ratios"] = triple_json(r);
  report.result["marking"] = marking_json(m);
  report.result["map"] = map_json(phi);

  // The closed-form case maps live in the chart (1, 1/r3, r2; 0, inf).
  const Field& f = opt.field;
  json checks = json::array();
  const ProjPoint one = ProjPoint::affine(f.one());
  const MarkingCheck chart =
      validate_marking({one, ProjPoint(r[2].y(), r[2].x()), r[1]}, {ProjPoint::affine(f.zero()), ProjPoint::infinity(f)});
  if (chart.marking && cross_ratios(*chart.marking) == r) {
    const RatMap2 reference = reconstruct(*chart.marking);
    for (const auto& [id, mp] : chart_case_maps(r)) {
      const bool agrees = mp.equivalent(reference);
      checks.push_back({{"case", id}, {"map", mp.to_string()}, {"agrees", agrees}});
      if (!agrees) {
        report.diagnose("internal", "chart case " + std::to_string(id) + " disagrees with the reconstruction");
        report.fail(1);
      }
    }
  }
  report.result["chart_checks"] = checks;
}

void cmd_equiv(Report& report, const Options& opt, const std::string& first, const std::string& second) {
  const TotalMarking a = parse_marking(first, opt.field);
  const TotalMarking b = parse_marking(second, opt.field);
  const Equivalence e = equivalent(a, b);
  report.result["equivalent"] = e.equivalent;
  report.result["first"] = {{"marking", a.to_string()}, {"cross_ratios", triple_json(e.first)}};
  report.result["second"] = {{"marking", b.to_string()}, {"cross_ratios", triple_json(e.second)}};
  report.result["witness"] = e.witness ? json(e.witness->to_string()) : json(nullptr);
}

void cmd_orbit(Report& report, const Options& opt, const std::string& marking_text) {
  const TotalMarking m = parse_marking(marking_text, opt.field);
  const Orbit12 o = orbit12(m);
  report.result["marking"] = m.to_string();
  json triples = json::array();
  for (const auto& t : o.triples) triples.push_back(t.to_string());
  report.result["triples"] = triples;
  report.result["distinct"] = o.distinct;
  report.result["canonical"] = triple_json(o.canonical);
}

void cmd_stability(Report& report, const Options& opt, const std::string& config_text) {
  const WeightedConfig cfg = WeightedConfig::parse(config_text, opt.field);
  const StabilityVerdict v = classify(cfg);
  report.result["classification"] = to_string(v.classification);
  report.result["total_weight"] = cfg.total_weight();
  json witnesses = json::array();
  for (const auto& w : v.witnesses) witnesses.push_back({{"point", point_json(w.point)}, {"weight", w.weight}});
  report.result["witnesses"] = witnesses;
  const auto [ss, s] = semistable_nonempty(cfg.weights());
  report.result["semistable_locus_nonempty"] = ss;
  report.result["stable_locus_nonempty"] = s;
  report.result["stable_equals_semistable"] = stable_equals_semistable(cfg.weights());
}

}  // namespace tmrat::cli
