#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace blipfield {

struct CheckResult {
  int criterion = 0;  // 1..13
  std::string name;
  bool passed = false;
  double measured = 0.0;
  double threshold = 0.0;
  std::string detail;
};

struct ValidationOptions {
  std::uint64_t seed = 20260808;
};

// Runs the full physics-validation suite: transport equivalence, dispersion
// and unitarity properties, generator spectrum, energy laws, kernel tail
// laws, the truncated-Fock commutator checks, the classical Maxwell oracle,
// Poynting sign rules, the field-moment oracle comparison, and the
// dynamical-vs-energy sign split.  Every check carries a fixed tolerance.
std::vector<CheckResult> run_validation_suite(
    const ValidationOptions& options = {});

nlohmann::json validation_report_json(const std::vector<CheckResult>& checks);

}  // namespace blipfield
