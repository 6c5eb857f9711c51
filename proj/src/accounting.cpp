#include "pars/accounting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pars/error.hpp"

namespace pars {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_open_unit(double v, const char* what) {
  if (!(v > 0.0) || !(v < 1.0)) {
    throw DomainError(std::string(what) + " must lie strictly inside (0, 1)");
  }
}

}  // namespace

RBound::RBound(double r) : r_(r) {
  if (!(r >= 1.0) || !std::isfinite(r)) {
    throw DomainError("RBound requires R >= 1 (swap databases to normalize)");
  }
}

double geom_max_divergence(double p, double q) {
  check_open_unit(p, "geom_max_divergence: p");
  check_open_unit(q, "geom_max_divergence: q");
  if (p < q) return kInf;
  return std::log(p / q);
}

double geom_max_divergence_symmetric(double p, double q) {
  check_open_unit(p, "geom_max_divergence: p");
  check_open_unit(q, "geom_max_divergence: q");
  if (p != q) return kInf;
  return 0.0;
}

double f_R_breakpoint_low(const RBound& r) {
  const double R = r.value();
  if (R == 1.0) return 0.0;
  return std::exp(R / (1.0 - R) * std::log(R));
}

double f_R_breakpoint_high(const RBound& r) {
  const double R = r.value();
  if (R == 1.0) return 1.0;
  return 1.0 - std::exp(std::log(R) / (1.0 - R));
}

double f_R(const RBound& r, double alpha) {
  if (alpha < 0.0 || alpha > 1.0) throw DomainError("f_R: alpha must be in [0, 1]");
  const double R = r.value();
  if (R == 1.0) return 1.0 - alpha;  // limit case, avoids 0/0 in the breakpoints
  const double a1 = f_R_breakpoint_low(r);
  const double a2 = f_R_breakpoint_high(r);
  if (alpha <= a1) return 1.0 - std::exp(std::log(alpha) / R);  // alpha^(1/R)
  if (alpha < a2) return -alpha + a1 + 1.0 - std::exp(std::log(R) / (1.0 - R));
  return std::exp(R * std::log1p(-alpha));  // (1 - alpha)^R
}

double delta_at_eps_zero(const RBound& r) {
  const double R = r.value();
  if (R == 1.0) return 0.0;
  return (R - 1.0) * f_R_breakpoint_low(r);
}

double delta_of_eps(const RBound& r, double eps) {
  if (eps < 0.0) throw DomainError("delta_of_eps: eps must be non-negative");
  const double R = r.value();
  if (R == 1.0) return 0.0;  // identical runtimes
  return (1.0 - 1.0 / R) * std::exp((-eps - std::log(R)) / (R - 1.0));
}

double eps_of_delta(const RBound& r, double delta) {
  if (!(delta > 0.0) || delta > 1.0) {
    throw DomainError("eps_of_delta: delta must lie in (0, 1]");
  }
  const double R = r.value();
  if (R == 1.0) return 0.0;
  if (delta > delta_at_eps_zero(r)) return 0.0;  // only weaker guarantees past delta(0)
  const double eps =
      std::log(1.0 / R) + (R - 1.0) * (std::log(1.0 / delta) + std::log(1.0 - 1.0 / R));
  return eps < 0.0 ? 0.0 : eps;
}

double f_eps_delta(const EpsDelta& ed, double alpha) {
  if (ed.eps < 0.0) throw DomainError("f_eps_delta: eps must be non-negative");
  if (ed.delta < 0.0 || ed.delta > 1.0) {
    throw DomainError("f_eps_delta: delta must be in [0, 1]");
  }
  const double a = 1.0 - ed.delta - std::exp(ed.eps) * alpha;
  const double b = std::exp(-ed.eps) * (1.0 - ed.delta - alpha);
  return std::max({0.0, a, b});
}

EpsDelta curve_to_eps_delta(const TradeoffCurve& f, double eps) {
  if (eps < 0.0) throw DomainError("curve_to_eps_delta: eps must be non-negative");
  const double slope = std::exp(eps);
  double delta = 0.0;
  for (const auto& [alpha, beta] : f.vertices()) {
    delta = std::max(delta, 1.0 - slope * alpha - beta);
  }
  return EpsDelta{eps, delta};
}

RBound exp_mech_R(double eps, double p_star) {
  if (!(eps > 0.0)) throw DomainError("exp_mech_R: eps must be positive");
  check_open_unit(p_star, "exp_mech_R: p_star");
  const double r = std::log1p(-p_star) / std::log1p(-std::exp(-eps) * p_star);
  return RBound(r);
}

double adaptive_runtime_divergence(std::span<const double> p_seq,
                                   std::span<const double> q_seq,
                                   std::size_t horizon) {
  if (horizon == 0) throw DomainError("adaptive_runtime_divergence: horizon must be >= 1");
  if (p_seq.size() < horizon || q_seq.size() < horizon) {
    throw DomainError("adaptive_runtime_divergence: sequences shorter than horizon");
  }
  double sup = 0.0;
  double partial = 0.0;  // sum_{i<t} log((1-p_i)/(1-q_i))
  for (std::size_t t = 0; t < horizon; ++t) {
    const double p = p_seq[t];
    const double q = q_seq[t];
    if (!(p > 0.0) || p > 1.0 || !(q > 0.0) || q > 1.0) {
      throw DomainError("adaptive_runtime_divergence: entries must lie in (0, 1]");
    }
    if ((p == 1.0) != (q == 1.0)) return kInf;
    sup = std::max(sup, std::abs(std::log(p / q) + partial));
    if (p == 1.0) break;  // no runtime mass beyond a certain-acceptance step
    partial += std::log1p(-p) - std::log1p(-q);
  }
  return sup;
}

double batched_R(double p, double q, int k) {
  check_open_unit(p, "batched_R: p");
  check_open_unit(q, "batched_R: q");
  if (k < 1) throw DomainError("batched_R: k must be >= 1");
  // The batched acceptance probability is 1 - (1-p)^k, whose log-survival is
  // exactly k log(1-p). Evaluating the survival in log space keeps the
  // identity with the k = 1 ratio intact even when (1-p)^k underflows the
  // neighborhood of 1.
  return (k * std::log1p(-p)) / (k * std::log1p(-q));
}

TradeoffCurve exact_geometric_tradeoff(double p, double q) {
  check_open_unit(p, "exact_geometric_tradeoff: p");
  check_open_unit(q, "exact_geometric_tradeoff: q");
  if (p == q) return TradeoffCurve::perfect_privacy();
  const bool swapped = p < q;
  if (swapped) std::swap(p, q);
  std::vector<TradeoffCurve::Vertex> v;
  const double log_sp = std::log1p(-p);
  const double log_sq = std::log1p(-q);
  for (std::int64_t t = 1;; ++t) {
    const double alpha = std::exp(static_cast<double>(t - 1) * log_sp);
    if (alpha < 1e-6) break;
    const double beta = -std::expm1(static_cast<double>(t - 1) * log_sq);
    v.emplace_back(alpha, beta);
  }
  v.emplace_back(0.0, 1.0);
  if (swapped) {
    // T(Geom(p), Geom(q)) with p < q is the inverse curve: reflect vertices.
    for (auto& [a, b] : v) std::swap(a, b);
  }
  return TradeoffCurve::from_vertices(std::move(v));
}

}  // namespace pars
