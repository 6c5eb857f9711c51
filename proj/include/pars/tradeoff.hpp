#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace pars {

// Convex, non-increasing, piecewise-linear function on [0,1] stored by its
// vertex list with alpha strictly decreasing from 1 to 0. Evaluation is
// binary search plus linear interpolation; randomized tests between integer
// thresholds make hypothesis-testing curves exactly piecewise linear, so the
// representation is lossless for the curves this library produces.
class TradeoffCurve {
 public:
  using Vertex = std::pair<double, double>;  // (alpha, beta)

  // Default: the perfect-privacy line 1 - alpha.
  TradeoffCurve();

  // Sorts, deduplicates, and validates: endpoints at alpha=0 and alpha=1
  // present, beta non-increasing in growing alpha... i.e. curve
  // non-increasing and convex, and beta <= 1 - alpha. Throws DomainError.
  static TradeoffCurve from_vertices(std::vector<Vertex> vertices);

  // Piecewise-linear interpolation of f at the given alphas (plus the
  // endpoints if missing).
  static TradeoffCurve sample_function(const std::function<double(double)>& f,
                                       std::span<const double> alphas);

  static TradeoffCurve perfect_privacy();

  double operator()(double alpha) const;

  std::span<const Vertex> vertices() const { return vertices_; }

 private:
  explicit TradeoffCurve(std::vector<Vertex> sorted_vertices);

  std::vector<Vertex> vertices_;  // alpha strictly decreasing
};

}  // namespace pars
