#ifndef NILREP_VERIFY_HPP
#define NILREP_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "nilrep/lie_algebra.hpp"
#include "nilrep/sampling.hpp"

namespace nilrep {

struct CheckResult {
  std::string name;
  bool pass = true;
  long cases = 0;
  std::string counterexample;  // inputs + observed vs expected; empty when passing
};

struct VerificationReport {
  std::string algebra;
  int dim_g = 0;
  int N = 0;
  int bound = 0;
  int dim_fg = 0;
  int max_nilpotence_index = 0;
  int samples = 0;
  uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool all_pass() const;
};

struct VerifyOptions {
  int samples = 100;
  uint64_t seed = 42;
  int height = Sampler::kDefaultHeight;
};

/// Runs the full exact property suite on one algebra: group law axioms,
/// series coefficients against the Bernoulli recurrence, derivative formula
/// equivalences, degree and dimension bounds, bracket-word families,
/// derivative nilpotency, representation faithfulness, nilpotence and
/// unipotence bounds and the homomorphism identities. All checks are exact;
/// sampling is deterministic in the seed.
VerificationReport run_verification(const LieAlgebra& g, const VerifyOptions& opts = {});

std::string report_to_json(const VerificationReport& report);

}  // namespace nilrep

#endif
