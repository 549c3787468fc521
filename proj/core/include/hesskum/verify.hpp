#pragma once

#include <string>
#include <utility>
#include <vector>

namespace hesskum {

struct CheckResult {
  std::string name;
  bool pass = false;
  // Key/value payload: counts, ratios, polynomials in canonical text form.
  std::vector<std::pair<std::string, std::string>> payload;
  double elapsed_ms = 0.0;
};

// The full verification battery, one entry per acceptance criterion, in a
// fixed order. Sampled checks draw from a deterministic generator seeded
// here. Exceptions from a check are converted into a failing result whose
// payload carries the message.
std::vector<CheckResult> run_verification_battery(unsigned seed);

CheckResult check_weber_hexad_count();
CheckResult check_vanishing_quartics_dimension();
CheckResult check_hessian_identity_samples(unsigned seed);
CheckResult check_resultant_identity();
CheckResult check_closed_form_reconciliation();
CheckResult check_r_quadric_dichotomy(unsigned seed);
CheckResult check_correspondence_round_trip();
CheckResult check_coplanarity_factorization(unsigned seed);
CheckResult check_branch_sextic(unsigned seed);
CheckResult check_combinatorial_battery();

}  // namespace hesskum
