#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "pars/distributions.hpp"
#include "pars/rng.hpp"

namespace pars {

// Support descriptor for a target density: the whole space or an axis box.
struct Support {
  enum class Kind { all_space, box };

  Kind kind = Kind::all_space;
  std::vector<double> lo;
  std::vector<double> hi;

  static Support all_space_of() { return Support{}; }
  static Support box_of(std::vector<double> lo, std::vector<double> hi);

  bool contains(std::span<const double> x) const;
};

// Unnormalized log-density g with pi~(x) = exp(g(x)). Evaluation must be
// deterministic and finite on the support.
struct UnnormalizedTarget {
  std::function<double(std::span<const double>)> log_density;
  int dimension = 1;
  Support support;

  double operator()(std::span<const double> x) const { return log_density(x); }
};

// A normalized density that can be sampled and evaluated in log space.
struct ProposalDensity {
  std::function<void(RngStream&, std::span<double>)> sample;
  std::function<double(std::span<const double>)> log_pdf;
};

ProposalDensity make_proposal(const GaussianLaw& law);
ProposalDensity make_proposal(const KNormLaw& law);

// Pair of bounding densities sandwiching the target:
//   exp(log_cL) * L(x) <= exp(g(x)) <= exp(log_cU) * U(x).
// The squeeze side is optional; log_cL is meaningful only when present.
struct Envelope {
  ProposalDensity proposal;
  double log_cU = 0.0;
  std::optional<ProposalDensity> squeeze;
  double log_cL = 0.0;

  // c_L / c_U, the squeeze sampler's per-iteration publish probability.
  double ratio() const;
};

// Randomized probing of the sandwich: n points from the proposal against the
// upper bound and, when a squeeze is present, n points from the squeeze
// against both bounds. Violations beyond `slack` on the log scale throw
// EnvelopeViolation. Probing is a spot check, not a proof.
void validate_envelope(const UnnormalizedTarget& target, const Envelope& env,
                       RngStream& rng, int n_points = 10000, double slack = 1e-9);

}  // namespace pars
