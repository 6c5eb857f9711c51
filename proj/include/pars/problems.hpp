#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pars/adaptive.hpp"
#include "pars/envelope.hpp"
#include "pars/mechanisms.hpp"

namespace pars {

// Everything needed to run the additive-wait scheme: a normalized target
// with pi(x) <= c_current * U(x) and the matching envelope
// (log_cU = log c_current).
struct WaitSetup {
  UnnormalizedTarget normalized_target;
  Envelope envelope;
  double c_current = 1.0;
};

// A named, ready-to-run sampling problem for the CLI and the harness.
struct SamplingProblem {
  std::string name;
  int dimension = 1;
  UnnormalizedTarget target;  // unnormalized log-density
  Envelope envelope;          // proposal (+ squeeze when available)

  double squeeze_rate = 0.0;         // c_L / c_U, 0 when no squeeze
  double simple_accept_rate = 0.0;   // integral(pi~)/c_U when known, else 0
  std::optional<WaitSetup> wait;
  std::function<double(double)> output_cdf;  // analytic 1-d CDF when known
};

// d=1 target exp(-x^2) with declared strong concavity 1 and smoothness 4:
// Gaussian sandwich with ratio 1/2, output law N(0, 1/2), simple-rejection
// acceptance 1/sqrt(2). Provides a wait setup against the N(0,1) proposal
// (c_current = sqrt(2)).
SamplingProblem gaussian_demo();

// d=2 gradient-norm target exp(-||diag(1,3) x||_2) with K-norm sandwich of
// ratio (1/3)^2.
SamplingProblem kng_demo();

// Ridge empirical-risk target in d=1 (three records) through the Gaussian
// sandwich; `swap_record` replaces one record to form an adjacent database.
SamplingProblem ridge_erm_demo(bool swap_record = false);
ERMSpec ridge_erm_demo_spec(bool swap_record = false);

// A problem for which the acceptance test is an exact coin: the target IS
// the proposal, declared bound c, so each iteration accepts with probability
// exactly 1/c. Used to pin runtime laws in tests.
SamplingProblem coin_demo(double c);

// The 7-Lipschitz benchmark on [0,1]: g(x) = -3|x - 1/2| + (1/5) sin(20 x),
// declared (s, H) = (1, 7).
LogHolderTarget example4_lipschitz();

// A second target with the same declared (s, H) = (1, 7) but a different
// shape, for runtime data-independence checks.
LogHolderTarget example4_lipschitz_alt();

// Lookup for the CLI names: gaussian-demo | kng-demo | ridge-erm.
// Unknown names raise ConfigError. "example4-lipschitz" is the adaptive
// target and is fetched via example4_lipschitz().
SamplingProblem problem_by_name(const std::string& name);

}  // namespace pars
