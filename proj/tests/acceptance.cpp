// Acceptance suite: runs every checklist criterion at its pinned tolerance
// and prints one pass/fail line per criterion.

#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "blipfield/validate.hpp"

namespace {

const char* kCriterionTitles[13] = {
    "transport equivalence (shift vs spectral, c*t = 64*dx)",
    "no dispersion (variance drift over 100 steps)",
    "unitarity and counter-propagating orthogonality",
    "generator spectrum hbar*s*c*k with +- pairing",
    "monochromatic energy hbar*c*|k0| (fast path and Fock oracle)",
    "narrowband gaussian energy (k0 = 2, sigma_k = 0.1)",
    "kernel law (R~(pi) = 1, tail exponents -1.5 and -3.0)",
    "Fock commutators and H_energy positivity (M = 6, n_max = 2)",
    "energy conservation under evolution (100 times)",
    "classical Maxwell oracle (convergence and energy forms)",
    "Poynting sign rules and flux/energy ratio",
    "intensity vs dense field-moment oracle (N = 16)",
    "sign split: <H_dyn> = -hbar*c*k with energy +hbar*c*k",
};

}  // namespace

int main() {
  const std::vector<blipfield::CheckResult> checks =
      blipfield::run_validation_suite({});

  int failures = 0;
  for (int criterion = 1; criterion <= 13; ++criterion) {
    bool passed = true;
    std::string detail;
    for (const blipfield::CheckResult& check : checks) {
      if (check.criterion != criterion) continue;
      passed = passed && check.passed;
      char buffer[160];
      std::snprintf(buffer, sizeof(buffer), "%s%s=%.3g (tol %.3g)",
                    detail.empty() ? "" : "; ", check.name.c_str(),
                    check.measured, check.threshold);
      detail += buffer;
    }
    if (!passed) ++failures;
    std::printf("[%s] criterion %2d: %s\n        %s\n",
                passed ? "PASS" : "FAIL", criterion,
                kCriterionTitles[criterion - 1], detail.c_str());
  }

  if (failures == 0) {
    std::printf("all 13 acceptance criteria passed\n");
  } else {
    std::printf("%d criteria FAILED\n", failures);
  }
  return failures;
}
