#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "pars/envelope.hpp"
#include "pars/rng.hpp"

namespace pars {

// One iteration of a sampler's inner loop, for test inspection and the
// harness event-log interface.
struct IterationEvent {
  std::uint64_t iter = 0;         // 1-based
  std::vector<double> x;          // proposal point
  double y = 0.0;                 // uniform draw
  bool target_accept = false;     // y <= pi~(x) / (c_U U(x))
  bool publish = false;
};

// JSON-lines encoding: {"iter":..,"x":[..],"y":..,"target_accept":..,"publish":..}
std::string to_json_line(const IterationEvent& event);
std::string to_json_lines(const std::vector<IterationEvent>& events);

// Result of one sampler invocation. `runtime` counts iterations (the runtime
// model throughout: one iteration, one unit of observable time).
struct SampleTrace {
  std::vector<double> value;
  std::uint64_t runtime = 0;
  bool accepted = false;
  std::vector<IterationEvent> events;  // filled only when requested
};

struct SamplerOptions {
  bool record_events = false;
  std::uint64_t max_iterations = 1ull << 32;  // guard against broken envelopes
};

// Plain rejection sampler: propose from U, accept with probability
// pi~(X) / (c_U U(X)), repeat until acceptance. The accepted value is an
// exact draw from the normalized target; the runtime is Geom(p) with
// p = integral(pi~) / c_U and leaks whatever p leaks.
// All accept tests run in log space. A proposal at which the target exceeds
// the declared upper bound (beyond 1e-9 in log space) aborts with
// EnvelopeViolation.
SampleTrace simple_reject(const UnnormalizedTarget& target, const Envelope& env,
                          RngStream& rng, const SamplerOptions& opt = {});

// Constant-runtime variant: runs exactly N = ceil(log(1/delta)/log(1/(1-alpha0)))
// iterations no matter what, publishes the first accepted proposal, and falls
// back to one extra proposal draw (accepted = false) when nothing accepted.
// alpha0 must lower-bound the true acceptance probability across databases;
// the none-accepted probability is then at most delta. The runtime field is
// always N.
SampleTrace truncated_reject(const UnnormalizedTarget& target, const Envelope& env,
                             double alpha0, double delta, RngStream& rng,
                             const SamplerOptions& opt = {});

std::uint64_t truncated_iteration_count(double alpha0, double delta);

enum class WaitMode {
  // Run the accept loop to completion, then with probability c_current/c_worst
  // publish immediately, else add an independent Geom(1/c_worst) wait.
  terminal_wait,
  // Thin at every acceptance: publish an accepted sample with probability
  // c_current/c_worst, otherwise keep looping. Same runtime law; useful for
  // cross-validation.
  per_iteration_thinning,
};

// Additive geometric wait-time sampler. Requires a *normalized* target with
// pi(x) <= c_current * U(x) and a worst-case constant c_worst >= c_current;
// env.log_cU must equal log(c_current). The published value is an exact draw
// from pi and the total runtime is Geom(1/c_worst) in either mode, which does
// not depend on the database. Wait cycles count toward `runtime` but are not
// recorded as events.
SampleTrace additive_wait_reject(const UnnormalizedTarget& target, const Envelope& env,
                                 double c_current, double c_worst, RngStream& rng,
                                 WaitMode mode = WaitMode::terminal_wait,
                                 const SamplerOptions& opt = {});

// Per-iteration draws, injectable for scripted traces in tests.
struct DrawHooks {
  std::function<void(std::span<double>)> propose;
  std::function<double()> uniform;
};

// Squeeze-gated rejection sampler. Each iteration draws X ~ U and a single
// uniform Y compared against both thresholds (the shared Y is what couples
// acceptance and publication):
//   accept X_s = X at the first Y <= pi~(X)/(c_U U(X)) since the last publish,
//   publish X_s when Y <= c_L L(X) / (c_U U(X)).
// The published value is an exact draw from pi and the runtime is
// Geom(c_L/c_U), which depends on the envelope ratio only. The sandwich makes
// publish-without-acceptance impossible; if it happens anyway the run aborts
// with InvariantViolation.
SampleTrace squeeze_reject(const UnnormalizedTarget& target, const Envelope& env,
                           RngStream& rng, const SamplerOptions& opt = {});
SampleTrace squeeze_reject(const UnnormalizedTarget& target, const Envelope& env,
                           const DrawHooks& hooks, const SamplerOptions& opt = {});

// Squeeze sampler for a *normalized* target when only an upper envelope and a
// worst-case constant c >= c_U are known: uses the target itself as squeeze
// with c_L = c_U / c, giving runtime Geom(1/c).
SampleTrace squeeze_from_known_constant(const UnnormalizedTarget& target, const Envelope& env,
                                        double c, RngStream& rng,
                                        const SamplerOptions& opt = {});

}  // namespace pars
