#include "pars/tradeoff.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pars/error.hpp"

namespace pars {
namespace {

constexpr double kSlack = 1e-12;

}  // namespace

TradeoffCurve::TradeoffCurve() : vertices_{{1.0, 0.0}, {0.0, 1.0}} {}

TradeoffCurve::TradeoffCurve(std::vector<Vertex> sorted_vertices)
    : vertices_(std::move(sorted_vertices)) {}

TradeoffCurve TradeoffCurve::perfect_privacy() { return TradeoffCurve(); }

TradeoffCurve TradeoffCurve::from_vertices(std::vector<Vertex> vertices) {
  if (vertices.size() < 2) {
    throw DomainError("TradeoffCurve: need at least the two endpoints");
  }
  std::sort(vertices.begin(), vertices.end(),
            [](const Vertex& a, const Vertex& b) { return a.first > b.first; });
  // Drop duplicate alphas, keeping the first (they must agree for a function).
  std::vector<Vertex> v;
  v.reserve(vertices.size());
  for (const Vertex& p : vertices) {
    if (!v.empty() && p.first == v.back().first) {
      if (std::abs(p.second - v.back().second) > kSlack) {
        throw DomainError("TradeoffCurve: conflicting values at one alpha");
      }
      continue;
    }
    v.push_back(p);
  }
  if (std::abs(v.front().first - 1.0) > kSlack || std::abs(v.back().first) > kSlack) {
    throw DomainError("TradeoffCurve: endpoints alpha=0 and alpha=1 required");
  }
  v.front().first = 1.0;
  v.back().first = 0.0;
  for (const auto& [a, b] : v) {
    if (a < -kSlack || a > 1.0 + kSlack || b < -kSlack || b > 1.0 + kSlack) {
      throw DomainError("TradeoffCurve: vertices must lie in the unit square");
    }
    if (b > 1.0 - a + kSlack) {
      throw DomainError("TradeoffCurve: beta must satisfy beta <= 1 - alpha");
    }
  }
  // Non-increasing in alpha, and convex: segment slopes (walking upward in
  // alpha, i.e. backwards through v) must be non-decreasing.
  double last_slope = -std::numeric_limits<double>::infinity();
  for (std::size_t i = v.size(); i-- > 1;) {
    const auto& [a1, b1] = v[i - 1];  // larger alpha
    const auto& [a0, b0] = v[i];      // smaller alpha
    if (b0 < b1 - kSlack) {
      throw DomainError("TradeoffCurve: curve must be non-increasing");
    }
    const double slope = (b1 - b0) / (a1 - a0);
    if (slope < last_slope - 1e-9) {
      throw DomainError("TradeoffCurve: vertices are not convex");
    }
    last_slope = std::max(last_slope, slope);
  }
  return TradeoffCurve(std::move(v));
}

TradeoffCurve TradeoffCurve::sample_function(const std::function<double(double)>& f,
                                             std::span<const double> alphas) {
  std::vector<Vertex> v;
  v.reserve(alphas.size() + 2);
  v.emplace_back(0.0, f(0.0));
  v.emplace_back(1.0, f(1.0));
  for (double a : alphas) {
    if (a < 0.0 || a > 1.0) throw DomainError("sample_function: alpha outside [0,1]");
    v.emplace_back(a, f(a));
  }
  return from_vertices(std::move(v));
}

double TradeoffCurve::operator()(double alpha) const {
  if (alpha <= 0.0) return vertices_.back().second;
  if (alpha >= 1.0) return vertices_.front().second;
  // vertices_ sorted by alpha descending; find the segment containing alpha.
  const auto it = std::lower_bound(
      vertices_.begin(), vertices_.end(), alpha,
      [](const Vertex& v, double a) { return v.first > a; });
  // it points at the first vertex with alpha_v <= alpha; it-1 has alpha_v > alpha.
  const auto& [a0, b0] = *it;
  const auto& [a1, b1] = *(it - 1);
  const double t = (alpha - a0) / (a1 - a0);
  return b0 + t * (b1 - b0);
}

}  // namespace pars
