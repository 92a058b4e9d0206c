#include "tmrat_cli/app.hpp"

#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "tmrat/error.hpp"

namespace tmrat::cli {

namespace {

struct Globals {
  std::string field = "Q";
  std::uint64_t seed = 0;
  std::string output = "text";
  std::optional<unsigned> precision;
};

// A descriptor the library refuses (char 2, composite p) is a usage error here.
Field resolve_field(const Globals& g, Report& report) {
  Field f = [&] {
    try {
      return Field::parse(g.field);
    } catch (const DomainError& e) {
      throw ParseError("--field " + g.field + ": " + e.what());
    }
  }();
  if (g.precision) {
    if (f.kind() != FieldKind::BigComplex) {
      report.diagnose("note", "--precision ignored for exact field " + f.describe());
    } else {
      f = Field::complex(*g.precision);
    }
  }
  return f;
}

}  // namespace

Outcome run(const std::vector<std::string>& args) {
  CLI::App app{"Degree-two rational maps of the projective line: markings, cross ratios, stability"};
  app.name("tmrat");
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--field", g.field, "Q | Fp:<p> | Fpk:<p>^<k>[,mod=<poly in t>] | C[:<bits>]");
  app.add_option("--seed", g.seed, "Seed for randomized factorization and sampling");
  app.add_option("--output", g.output, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--precision", g.precision, "Working precision in bits for C")->check(CLI::Range(16u, 65536u));

  std::string a, b;
  std::string primes = "2..99";
  std::string scale = "small";
  std::function<void(Report&, const Options&)> action;

  auto add = [&](const char* name, const char* help) { return app.add_subcommand(name, help); };
  add("analyze", "Fixed points, critical points and multipliers of a map")
      ->callback([&] { action = [&](Report& r, const Options& o) { cmd_analyze(r, o, a); }; })
      ->add_option("map", a, "(<poly>)/(<poly>) or [a,b,c;d,e,f]")
      ->required();
  add("invariants", "Validity, cross ratios and V-coordinates of a marking")
      ->callback([&] { action = [&](Report& r, const Options& o) { cmd_invariants(r, o, a); }; })
      ->add_option("marking", a, "(p1,p2,p3;q1,q2)")
      ->required();
  add("reconstruct", "The map of a marking or of a cross-ratio triple")
      ->callback([&] { action = [&](Report& r, const Options& o) { cmd_reconstruct(r, o, a); }; })
      ->add_option("payload", a, "(p1,p2,p3;q1,q2) or (r1,r2,r3)")
      ->required();
  auto* eq = add("equiv", "Decide conjugacy of two marked maps");
  eq->callback([&] { action = [&](Report& r, const Options& o) { cmd_equiv(r, o, a, b); }; });
  eq->add_option("first", a, "(p1,p2,p3;q1,q2)")->required();
  eq->add_option("second", b, "(p1,p2,p3;q1,q2)")->required();
  add("orbit", "Cross ratios of the 12 re-markings")
      ->callback([&] { action = [&](Report& r, const Options& o) { cmd_orbit(r, o, a); }; })
      ->add_option("marking", a, "(p1,p2,p3;q1,q2)")
      ->required();
  add("stability", "Classify a weighted point configuration")
      ->callback([&] { action = [&](Report& r, const Options& o) { cmd_stability(r, o, a); }; })
      ->add_option("config", a, "points=(...);weights=(...)")
      ->required();
  auto* sw = add("sweep", "Check the identities modulo many primes");
  sw->callback([&] { action = [&](Report& r, const Options& o) { cmd_sweep(r, o, a, primes); }; });
  sw->add_option("payload", a, "map or marking with rational data")->required();
  sw->add_option("--primes", primes, "lo..hi or a comma-separated list")->capture_default_str();
  auto* st = add("selftest", "Exhaustive small-field oracles");
  st->callback([&] { action = [&](Report& r, const Options& o) { cmd_selftest(r, o, scale); }; });
  st->add_option("scale", scale, "small | full")->check(CLI::IsMember({"small", "full"}))->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  Outcome outcome;
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    outcome.out = app.help();
    return outcome;
  } catch (const CLI::CallForAllHelp&) {
    outcome.out = app.help("", CLI::AppFormatMode::All);
    return outcome;
  } catch (const CLI::ParseError& e) {
    outcome.err = std::string(e.what()) + "\nRun with --help for usage.\n";
    outcome.exit_code = 2;
    return outcome;
  }

  Report report;
  report.command = app.get_subcommands().front()->get_name();
  report.field = g.field;
  report.input = a + (b.empty() ? "" : " " + b);
  report.seed = g.seed;
  try {
    Options opt;
    opt.field = resolve_field(g, report);
    opt.seed = g.seed;
    report.field = opt.field.describe();
    action(report, opt);
  } catch (const ParseError& e) {
    report.diagnose("parse-error", e.what());
    report.exit_code = 2;
  } catch (const IncompleteFactorization& e) {
    report.diagnose("incomplete-factorization", e.what(), {{"factor", e.factor()}});
    report.exit_code = 1;
  } catch (const DomainError& e) {
    report.diagnose("rejected", e.what());
    report.exit_code = 1;
  } catch (const FieldMismatch& e) {
    report.diagnose("parse-error", e.what());
    report.exit_code = 2;
  } catch (const InternalError& e) {
    report.diagnose("internal", e.what());
    report.exit_code = 1;
  }

  outcome.exit_code = report.exit_code;
  outcome.out = g.output == "json" ? render_json(report) : render_text(report);
  if (report.exit_code != 0) {
    for (const auto& d : report.diagnostics) {
      if (d["kind"] != "skipped") outcome.err += "tmrat: " + d["message"].get<std::string>() + "\n";
    }
  }
  return outcome;
}

}  // namespace tmrat::cli
