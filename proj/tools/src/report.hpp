#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "tmrat/marking.hpp"
#include "tmrat/ratmap.hpp"
#include "tmrat/roots.hpp"
#include "tmrat/stability.hpp"

namespace tmrat::cli {

using json = nlohmann::ordered_json;

struct Report {
  std::string command;
  std::string field;
  std::string input;
  std::uint64_t seed = 0;
  json result = json::object();
  json diagnostics = json::array();
  int exit_code = 0;

  void diagnose(const std::string& kind, const std::string& message, json extra = json::object());
  /// Raises the exit code to `code` if it is currently lower.
  void fail(int code) {
    if (code > exit_code) exit_code = code;
  }
};

json to_json(const Report& r);
std::string render_json(const Report& r);
std::string render_text(const Report& r);

json point_json(const ProjPoint& p);
json points_json(const std::vector<ProjPoint>& ps);
json homogeneous_json(const ProjPoint& p);
json roots_json(const RootList& r);
json triple_json(const CrossRatioTriple& r);
json vpoint_json(const VPoint& x);
json marking_json(const TotalMarking& m);
json spectrum_json(const MultiplierSpectrum& s);

}  // namespace tmrat::cli
