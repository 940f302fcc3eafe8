#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lipkin {

enum class VerifyLevel { quick, full };

struct CriterionResult {
  std::string id;
  std::string description;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

/// Run the verification suite. quick covers the small-size oracle
/// equivalence and the two-site identities; full runs every criterion.
std::vector<CriterionResult> run_verification(VerifyLevel level);

/// Print one pass/fail line per criterion; returns the number of failures.
int print_verification(VerifyLevel level, std::ostream& out);

namespace verify_detail {

/// Max relative deviation of the block spectra from the closed-form
/// isotropic levels at chi = 1. `perturbation` shifts one matrix entry and
/// exists as the negative-control hook for the test suite.
double isotropic_spectrum_error(int omega, double eps, double vx, double perturbation = 0.0);

}  // namespace verify_detail

}  // namespace lipkin
