// SPDX-License-Identifier: Apache-2.0
// Verification reports: named claims with pass/fail state and the quantities
// behind them, serialized deterministically (sorted keys, fixed-width value
// strings) so repeated runs produce byte-identical output.

#ifndef SEIFERT_WRT_REPORT_HPP
#define SEIFERT_WRT_REPORT_HPP

#include <map>
#include <string>
#include <vector>

#include "seifertwrt/hpcomplex.hpp"

namespace swrt {

struct ClaimRow {
  std::string name;
  bool pass = false;
  std::string detail;
  std::map<std::string, std::string> values;
};

struct VerificationReport {
  std::string command;
  std::map<std::string, std::string> inputs;
  std::vector<ClaimRow> claims;

  bool all_pass() const;
  std::string to_json() const;
  std::string to_text() const;
};

// Deterministic value strings shared by reports and the CLI.
std::string fmt(const HPReal& x, int digits = 40);
std::string fmt(const HPComplex& z, int digits = 40);

}  // namespace swrt

#endif
