#include "partlab/report.hpp"

#include <json.hpp>

#include <sstream>

namespace partlab {

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string to_csv(const CheckReport& r, bool include_runtime) {
  std::ostringstream os;
  os << "# check=" << r.name << "\n";
  os << "# grid=" << r.grid << "\n";
  if (r.conjecture) os << "# CONJECTURE: finite search only, never a proof\n";
  for (const auto& [k, v] : r.metadata) os << "# " << k << "=" << v << "\n";
  os << "# points_checked=" << r.points_checked << "\n";
  os << "# status=" << (r.passed() ? "pass" : "counterexample") << "\n";
  if (include_runtime) os << "# runtime_seconds=" << r.runtime_seconds << "\n";
  for (const auto& note : r.notes) os << "# note=" << note << "\n";
  os << "params,label,value\n";
  for (const auto& ce : r.counterexamples)
    for (const auto& [label, value] : ce.values)
      os << csv_escape(ce.params) << "," << csv_escape(label) << "," << csv_escape(value)
         << "\n";
  return os.str();
}

std::string to_json(const CheckReport& r, bool include_runtime) {
  nlohmann::ordered_json j;
  j["check"] = r.name;
  j["grid"] = r.grid;
  j["conjecture"] = r.conjecture;
  j["points_checked"] = r.points_checked;
  j["status"] = r.passed() ? "pass" : "counterexample";
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.metadata) meta[k] = v;
  j["metadata"] = meta;
  j["notes"] = r.notes;
  nlohmann::ordered_json ces = nlohmann::ordered_json::array();
  for (const auto& ce : r.counterexamples) {
    nlohmann::ordered_json o;
    o["params"] = ce.params;
    nlohmann::ordered_json w = nlohmann::ordered_json::object();
    for (const auto& [label, value] : ce.values) w[label] = value;  // decimal strings
    o["witness"] = w;
    ces.push_back(o);
  }
  j["counterexamples"] = ces;
  if (include_runtime) j["runtime_seconds"] = r.runtime_seconds;
  return j.dump(2) + "\n";
}

std::string summary_line(const CheckReport& r) {
  std::ostringstream os;
  os << (r.passed() ? "PASS" : "FAIL") << " " << r.name;
  if (r.conjecture) os << " [CONJECTURE]";
  os << " (" << r.grid << ", points=" << r.points_checked;
  if (!r.passed()) os << ", counterexamples=" << r.counterexamples.size();
  os << ")";
  return os.str();
}

}  // namespace partlab
