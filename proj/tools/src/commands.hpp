#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "report.hpp"

namespace tmrat::cli {

struct Options {
  Field field = Field::rationals();
  std::uint64_t seed = 0;
};

// Each command fills `report.result` and `report.diagnostics`; exceptions are
// mapped to exit codes by the caller.
void cmd_analyze(Report& report, const Options& opt, const std::string& map_text);
void cmd_invariants(Report& report, const Options& opt, const std::string& marking_text);
void cmd_reconstruct(Report& report, const Options& opt, const std::string& text);
void cmd_equiv(Report& report, const Options& opt, const std::string& first, const std::string& second);
void cmd_orbit(Report& report, const Options& opt, const std::string& marking_text);
void cmd_stability(Report& report, const Options& opt, const std::string& config_text);
/// `primes` is `lo..hi` (all primes in range) or a comma list.
void cmd_sweep(Report& report, const Options& opt, const std::string& payload, const std::string& primes);
void cmd_selftest(Report& report, const Options& opt, const std::string& scale);

/// Parses the --primes argument; throws ParseError.
std::vector<std::uint64_t> parse_prime_list(const std::string& text);

}  // namespace tmrat::cli
