#include "report.hpp"

#include <algorithm>
#include <sstream>

namespace tmrat::cli {

namespace {

std::string status_of(int exit_code) {
  switch (exit_code) {
    case 0: return "ok";
    case 1: return "rejected";
    default: return "error";
  }
}

std::string scalar_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "null";
  return j.dump();
}

bool is_scalar(const json& j) { return !j.is_object() && !j.is_array(); }

// Arrays of scalars stay on one line; everything else nests by two spaces.
void render(std::ostringstream& os, const json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (is_scalar(value)) {
        os << pad << key << ": " << scalar_text(value) << "\n";
      } else if (value.empty()) {
        os << pad << key << ": " << (value.is_array() ? "[]" : "{}") << "\n";
      } else if (value.is_array() && std::all_of(value.begin(), value.end(), is_scalar)) {
        os << pad << key << ": ";
        for (std::size_t i = 0; i < value.size(); ++i) os << (i ? ", " : "") << scalar_text(value[i]);
        os << "\n";
      } else {
        os << pad << key << ":\n";
        render(os, value, indent + 2);
      }
    }
    return;
  }
  if (j.is_array()) {
    for (const auto& item : j) {
      if (is_scalar(item)) {
        os << pad << "- " << scalar_text(item) << "\n";
      } else if (item.is_array() && std::all_of(item.begin(), item.end(), is_scalar)) {
        os << pad << "- ";
        for (std::size_t i = 0; i < item.size(); ++i) os << (i ? ", " : "") << scalar_text(item[i]);
        os << "\n";
      } else {
        std::ostringstream inner;
        render(inner, item, indent + 2);
        std::string block = inner.str();
        // Put the first line after the dash.
        block.replace(0, static_cast<std::size_t>(indent) + 2, pad + "- ");
        os << block;
      }
    }
    return;
  }
  os << pad << scalar_text(j) << "\n";
}

}  // namespace

void Report::diagnose(const std::string& kind, const std::string& message, json extra) {
  json d = json::object();
  d["kind"] = kind;
  d["message"] = message;
  for (auto& [k, v] : extra.items()) d[k] = v;
  diagnostics.push_back(std::move(d));
}

json to_json(const Report& r) {
  json j = json::object();
  j["command"] = r.command;
  j["field"] = r.field;
  j["input"] = r.input;
  j["seed"] = r.seed;
  j["status"] = status_of(r.exit_code);
  j["exit_code"] = r.exit_code;
  j["result"] = r.result;
  j["diagnostics"] = r.diagnostics;
  return j;
}

std::string render_json(const Report& r) { return to_json(r).dump(2) + "\n"; }

std::string render_text(const Report& r) {
  std::ostringstream os;
  render(os, to_json(r), 0);
  return os.str();
}

json point_json(const ProjPoint& p) { return p.to_string(); }

json points_json(const std::vector<ProjPoint>& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(point_json(p));
  return a;
}

json homogeneous_json(const ProjPoint& p) { return json::array({p.x().to_string(), p.y().to_string()}); }

json roots_json(const RootList& r) {
  json j = json::object();
  j["complete"] = r.complete;
  json roots = json::array();
  for (const auto& e : r.entries) roots.push_back({{"point", point_json(e.point)}, {"multiplicity", e.multiplicity}});
  j["roots"] = roots;
  json unsplit = json::array();
  for (const auto& [f, m] : r.unsplit) unsplit.push_back({{"factor", f.to_string('z')}, {"multiplicity", m}});
  j["unsplit"] = unsplit;
  j["splitting_degree"] = r.splitting_degree();
  return j;
}

json triple_json(const CrossRatioTriple& r) {
  json j = json::object();
  j["affine"] = points_json({r[0], r[1], r[2]});
  j["homogeneous"] = json::array({homogeneous_json(r[0]), homogeneous_json(r[1]), homogeneous_json(r[2])});
  return j;
}

json vpoint_json(const VPoint& x) {
  json j = json::object();
  j["affine"] = points_json({x[0], x[1], x[2]});
  j["homogeneous"] = json::array({homogeneous_json(x[0]), homogeneous_json(x[1]), homogeneous_json(x[2])});
  return j;
}

json marking_json(const TotalMarking& m) {
  json j = json::object();
  j["literal"] = m.to_string();
  j["fixed"] = points_json({m.p(0), m.p(1), m.p(2)});
  j["critical"] = points_json({m.q(0), m.q(1)});
  return j;
}

json spectrum_json(const MultiplierSpectrum& s) {
  json a = json::array();
  for (const auto& e : s.entries) {
    a.push_back({{"point", point_json(e.point)}, {"multiplicity", e.multiplicity}, {"multiplier", e.multiplier.to_string()}});
  }
  return a;
}

}  // namespace tmrat::cli
