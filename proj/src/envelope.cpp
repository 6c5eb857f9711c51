#include "pars/envelope.hpp"

#include <cmath>
#include <string>

#include "pars/error.hpp"

namespace pars {

Support Support::box_of(std::vector<double> lo, std::vector<double> hi) {
  if (lo.size() != hi.size() || lo.empty()) {
    throw DomainError("Support: box bounds must be non-empty and of equal size");
  }
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (!(lo[i] < hi[i])) throw DomainError("Support: box requires lo < hi per axis");
  }
  Support s;
  s.kind = Kind::box;
  s.lo = std::move(lo);
  s.hi = std::move(hi);
  return s;
}

bool Support::contains(std::span<const double> x) const {
  if (kind == Kind::all_space) return true;
  if (x.size() != lo.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < lo[i] || x[i] > hi[i]) return false;
  }
  return true;
}

ProposalDensity make_proposal(const GaussianLaw& law) {
  return ProposalDensity{
      [law](RngStream& rng, std::span<double> out) { gaussian_sample(law, rng, out); },
      [law](std::span<const double> x) { return gaussian_logpdf(law, x); }};
}

ProposalDensity make_proposal(const KNormLaw& law) {
  return ProposalDensity{
      [law](RngStream& rng, std::span<double> out) { knorm_sample(law, rng, out); },
      [law](std::span<const double> x) { return knorm_logpdf(law, x); }};
}

double Envelope::ratio() const {
  if (!squeeze) throw DomainError("Envelope::ratio: no squeeze density present");
  return std::exp(log_cL - log_cU);
}

namespace {

void check_point(const UnnormalizedTarget& target, const Envelope& env,
                 std::span<const double> x, bool check_lower, double slack) {
  if (!target.support.contains(x)) return;  // zero target mass outside
  const double g = target.log_density(x);
  const double upper = env.log_cU + env.proposal.log_pdf(x);
  if (g > upper + slack) {
    throw EnvelopeViolation("envelope probe: target exceeds c_U * U at a probe point (by " +
                            std::to_string(g - upper) + " in log space)");
  }
  if (check_lower && env.squeeze) {
    const double lower = env.log_cL + env.squeeze->log_pdf(x);
    if (lower > g + slack) {
      throw EnvelopeViolation("envelope probe: squeeze exceeds target at a probe point (by " +
                              std::to_string(lower - g) + " in log space)");
    }
  }
}

}  // namespace

void validate_envelope(const UnnormalizedTarget& target, const Envelope& env,
                       RngStream& rng, int n_points, double slack) {
  std::vector<double> x(target.dimension);
  for (int i = 0; i < n_points; ++i) {
    env.proposal.sample(rng, x);
    check_point(target, env, x, /*check_lower=*/true, slack);
  }
  if (env.squeeze) {
    for (int i = 0; i < n_points; ++i) {
      env.squeeze->sample(rng, x);
      check_point(target, env, x, /*check_lower=*/true, slack);
    }
  }
}

}  // namespace pars
