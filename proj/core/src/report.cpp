// SPDX-License-Identifier: Apache-2.0

#include "seifertwrt/report.hpp"

#include <sstream>

#include <json.hpp>

namespace swrt {

bool VerificationReport::all_pass() const {
  for (const auto& c : claims) {
    if (!c.pass) return false;
  }
  return true;
}

std::string VerificationReport::to_json() const {
  nlohmann::json j;
  j["command"] = command;
  j["inputs"] = inputs;
  j["pass"] = all_pass();
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& c : claims) {
    nlohmann::json row;
    row["name"] = c.name;
    row["pass"] = c.pass;
    row["detail"] = c.detail;
    row["values"] = c.values;
    rows.push_back(row);
  }
  j["claims"] = rows;
  return j.dump(2) + "\n";
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  os << "== " << command;
  for (const auto& [k, v] : inputs) os << " " << k << "=" << v;
  os << " ==\n";
  for (const auto& c : claims) {
    os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << "\n";
    for (const auto& [k, v] : c.values) os << "       " << k << " = " << v << "\n";
  }
  os << "overall: " << (all_pass() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::string fmt(const HPReal& x, int digits) { return x.str(digits); }

std::string fmt(const HPComplex& z, int digits) { return z.str(digits); }

}  // namespace swrt
