#include "pars/samplers.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "pars/distributions.hpp"
#include "pars/error.hpp"

namespace pars {
namespace {

constexpr double kLogSlack = 1e-9;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

DrawHooks hooks_from(const Envelope& env, RngStream& rng) {
  return DrawHooks{
      [&env, &rng](std::span<double> out) { env.proposal.sample(rng, out); },
      [&rng] { return rng.uniform(); }};
}

// log of pi~(x) / (c_U U(x)); -inf outside the support. Aborts when the
// claimed upper bound is violated beyond slack.
double accept_log_ratio(const UnnormalizedTarget& target, const Envelope& env,
                        std::span<const double> x) {
  if (!target.support.contains(x)) return kNegInf;
  const double g = target.log_density(x);
  const double ratio = g - env.log_cU - env.proposal.log_pdf(x);
  if (ratio > kLogSlack) {
    throw EnvelopeViolation("rejection sampler: target exceeds c_U * U at a drawn point");
  }
  return ratio;
}

}  // namespace

std::string to_json_line(const IterationEvent& event) {
  nlohmann::json j;
  j["iter"] = event.iter;
  j["x"] = event.x;
  j["y"] = event.y;
  j["target_accept"] = event.target_accept;
  j["publish"] = event.publish;
  return j.dump();
}

std::string to_json_lines(const std::vector<IterationEvent>& events) {
  std::ostringstream out;
  for (const IterationEvent& e : events) out << to_json_line(e) << '\n';
  return out.str();
}

SampleTrace simple_reject(const UnnormalizedTarget& target, const Envelope& env,
                          RngStream& rng, const SamplerOptions& opt) {
  SampleTrace trace;
  std::vector<double> x(target.dimension);
  for (std::uint64_t iter = 1; iter <= opt.max_iterations; ++iter) {
    env.proposal.sample(rng, x);
    const double y = rng.uniform();
    const bool accept = std::log(y) <= accept_log_ratio(target, env, x);
    if (opt.record_events) trace.events.push_back({iter, x, y, accept, accept});
    if (accept) {
      trace.value = x;
      trace.runtime = iter;
      trace.accepted = true;
      return trace;
    }
  }
  throw Error("simple_reject: no acceptance within the iteration cap");
}

std::uint64_t truncated_iteration_count(double alpha0, double delta) {
  if (!(alpha0 > 0.0) || !(alpha0 < 1.0)) {
    throw DomainError("truncated_reject: alpha0 must lie in (0, 1)");
  }
  if (!(delta > 0.0) || !(delta < 1.0)) {
    throw DomainError("truncated_reject: delta must lie in (0, 1)");
  }
  const double n = std::ceil(std::log(1.0 / delta) / std::log(1.0 / (1.0 - alpha0)));
  return n < 1.0 ? 1 : static_cast<std::uint64_t>(n);
}

SampleTrace truncated_reject(const UnnormalizedTarget& target, const Envelope& env,
                             double alpha0, double delta, RngStream& rng,
                             const SamplerOptions& opt) {
  const std::uint64_t n_iters = truncated_iteration_count(alpha0, delta);
  SampleTrace trace;
  trace.runtime = n_iters;
  std::vector<double> x(target.dimension);
  bool have = false;
  for (std::uint64_t iter = 1; iter <= n_iters; ++iter) {
    env.proposal.sample(rng, x);
    const double y = rng.uniform();
    const bool accept = std::log(y) <= accept_log_ratio(target, env, x);
    const bool keep = accept && !have;
    if (keep) {
      trace.value = x;
      trace.accepted = true;
      have = true;
    }
    if (opt.record_events) trace.events.push_back({iter, x, y, accept, keep});
  }
  if (!have) {
    // Arbitrary fallback output; one more proposal draw.
    trace.value.resize(target.dimension);
    env.proposal.sample(rng, trace.value);
    trace.accepted = false;
  }
  return trace;
}

SampleTrace additive_wait_reject(const UnnormalizedTarget& target, const Envelope& env,
                                 double c_current, double c_worst, RngStream& rng,
                                 WaitMode mode, const SamplerOptions& opt) {
  if (!(c_current >= 1.0)) {
    throw DomainError("additive_wait_reject: c_current must be >= 1");
  }
  if (!(c_worst >= c_current)) {
    throw DomainError("additive_wait_reject: c_worst must be >= c_current");
  }
  if (std::abs(env.log_cU - std::log(c_current)) > kLogSlack) {
    throw DomainError("additive_wait_reject: env.log_cU must equal log(c_current)");
  }
  const double publish_prob = c_current / c_worst;

  if (mode == WaitMode::per_iteration_thinning) {
    SampleTrace trace;
    std::vector<double> x(target.dimension);
    for (std::uint64_t iter = 1; iter <= opt.max_iterations; ++iter) {
      env.proposal.sample(rng, x);
      const double y = rng.uniform();
      const bool accept = std::log(y) <= accept_log_ratio(target, env, x);
      const bool publish = accept && rng.uniform() < publish_prob;
      if (opt.record_events) trace.events.push_back({iter, x, y, accept, publish});
      if (publish) {
        trace.value = x;
        trace.runtime = iter;
        trace.accepted = true;
        return trace;
      }
    }
    throw Error("additive_wait_reject: no acceptance within the iteration cap");
  }

  SampleTrace trace = simple_reject(target, env, rng, opt);
  if (rng.uniform() >= publish_prob) {
    trace.runtime +=
        static_cast<std::uint64_t>(geometric_sample(GeometricLaw{1.0 / c_worst}, rng));
  }
  return trace;
}

SampleTrace squeeze_reject(const UnnormalizedTarget& target, const Envelope& env,
                           const DrawHooks& hooks, const SamplerOptions& opt) {
  if (!env.squeeze) {
    throw DomainError("squeeze_reject: envelope carries no squeeze density");
  }
  SampleTrace trace;
  std::vector<double> x(target.dimension);
  std::vector<double> x_s;
  bool any_accepted = false;
  for (std::uint64_t iter = 1; iter <= opt.max_iterations; ++iter) {
    hooks.propose(x);
    const double y = hooks.uniform();
    const double log_y = std::log(y);
    const double g = target.support.contains(x) ? target.log_density(x) : kNegInf;
    const double log_bound_u = env.log_cU + env.proposal.log_pdf(x);
    if (g > log_bound_u + kLogSlack) {
      throw EnvelopeViolation("squeeze_reject: target exceeds c_U * U at a drawn point");
    }
    const double log_squeeze = env.log_cL + env.squeeze->log_pdf(x);
    if (log_squeeze > g + kLogSlack) {
      throw EnvelopeViolation("squeeze_reject: squeeze exceeds target at a drawn point");
    }
    const bool target_accept = log_y <= g - log_bound_u;
    if (target_accept && !any_accepted) {
      x_s = x;
      any_accepted = true;
    }
    const bool publish = log_y <= log_squeeze - log_bound_u;
    if (opt.record_events) trace.events.push_back({iter, x, y, target_accept, publish});
    if (publish) {
      if (!any_accepted) {
        throw InvariantViolation(
            "squeeze_reject: publish event without an accepted sample; the sandwich rules "
            "this out, so the envelope constants are inconsistent");
      }
      trace.value = std::move(x_s);
      trace.runtime = iter;
      trace.accepted = true;
      return trace;
    }
  }
  throw Error("squeeze_reject: no publication within the iteration cap");
}

SampleTrace squeeze_reject(const UnnormalizedTarget& target, const Envelope& env,
                           RngStream& rng, const SamplerOptions& opt) {
  return squeeze_reject(target, env, hooks_from(env, rng), opt);
}

SampleTrace squeeze_from_known_constant(const UnnormalizedTarget& target, const Envelope& env,
                                        double c, RngStream& rng, const SamplerOptions& opt) {
  if (!(c > 0.0) || std::log(c) < env.log_cU - 1e-12) {
    throw DomainError("squeeze_from_known_constant: c must be >= c_U");
  }
  Envelope with_squeeze = env;
  // The normalized target doubles as its own squeeze; it is only ever
  // evaluated, never sampled.
  with_squeeze.squeeze = ProposalDensity{
      [](RngStream&, std::span<double>) {
        throw InvariantViolation("squeeze density is evaluate-only here");
      },
      target.log_density};
  with_squeeze.log_cL = env.log_cU - std::log(c);
  return squeeze_reject(target, with_squeeze, rng, opt);
}

}  // namespace pars
