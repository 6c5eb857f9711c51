#pragma once

#include <cstdint>
#include <span>

#include "pars/tradeoff.hpp"

namespace pars {

struct EpsDelta {
  double eps = 0.0;    // >= 0
  double delta = 0.0;  // in [0, 1]
};

// Worst-case ratio of log-survival rates of acceptance probabilities across
// adjacent databases; governs the runtime privacy cost of a rejection
// sampler. Normalized so R >= 1 (swap the databases otherwise).
class RBound {
 public:
  explicit RBound(double r);
  double value() const { return r_; }

 private:
  double r_;
};

// Max-divergence between Geom(p) and Geom(q) runtimes: log(p/q) when p >= q,
// +infinity when p < q. Both parameters must lie strictly inside (0, 1).
double geom_max_divergence(double p, double q);

// max(D(p||q), D(q||p)); +infinity whenever p != q.
double geom_max_divergence_symmetric(double p, double q);

// The runtime tradeoff bound: three branches with breakpoints
// alpha1 = R^(R/(1-R)) and alpha2 = 1 - R^(1/(1-R)); the limit R -> 1 is the
// perfect-privacy line 1 - alpha.
double f_R(const RBound& r, double alpha);

double f_R_breakpoint_low(const RBound& r);   // alpha1
double f_R_breakpoint_high(const RBound& r);  // alpha2

// delta(eps) = (1 - 1/R) exp((-eps - log R) / (R - 1)); zero at R = 1.
double delta_of_eps(const RBound& r, double eps);

// eps(delta) = log(1/R) + (R-1)(log(1/delta) + log(1 - 1/R)), valid for
// 0 < delta <= (R-1) R^(R/(1-R)) and clamped to 0 for larger delta.
double eps_of_delta(const RBound& r, double delta);

// Largest delta with a non-trivial eps(delta), i.e. delta(0).
double delta_at_eps_zero(const RBound& r);

// Piecewise-linear tradeoff function of (eps, delta)-DP:
// max{0, 1 - delta - e^eps alpha, e^-eps (1 - delta - alpha)}.
double f_eps_delta(const EpsDelta& ed, double alpha);

// Smallest delta such that the line (1 - delta) - e^eps * alpha lies below
// the curve everywhere; for a piecewise-linear curve the maximum is attained
// at a vertex.
EpsDelta curve_to_eps_delta(const TradeoffCurve& f, double eps);

// Runtime R bound for a generic exponential mechanism with best-case
// acceptance probability p*: log(1 - p*) / log(1 - e^-eps p*).
// Always at least e^eps.
//
// Composition note: releasing the sample together with the runtime costs the
// tensor product of the mechanism's own tradeoff function with f_R. That
// product has no usable closed form, so this module prices the runtime
// channel alone; compose downstream with whatever calculus the caller uses.
RBound exp_mech_R(double eps, double p_star);

// Lower bound on the runtime privacy cost of an adaptive sampler with
// per-iteration acceptance sequences p and q:
//   sup_{t <= horizon} | log(p_t/q_t) + sum_{i<t} log((1-p_i)/(1-q_i)) |.
// Returns +infinity if some p_t = 1 while q_t != 1 (or vice versa). This is
// a necessary lower bound, not an exact privacy cost.
double adaptive_runtime_divergence(std::span<const double> p_seq,
                                   std::span<const double> q_seq,
                                   std::size_t horizon);

// R for the batched/parallelized sampler with batch size k. Identical to the
// k = 1 value: batching does not change the runtime privacy cost.
double batched_R(double p, double q, int k);

// Exact Neyman-Pearson tradeoff T(Geom(p), Geom(q)) for p > q, with vertices
// ((1-p)^(t-1), 1-(1-q)^(t-1)) for integer thresholds t, truncated once
// alpha < 1e-6 and closed at (0, 1). p = q yields the line 1 - alpha; for
// p < q the arguments are swapped and the curve inverted.
TradeoffCurve exact_geometric_tradeoff(double p, double q);

}  // namespace pars
