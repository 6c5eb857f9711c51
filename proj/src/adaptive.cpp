#include "pars/adaptive.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pars/error.hpp"

namespace pars {
namespace {

constexpr double kLogSlack = 1e-9;

double ipow_capped(int base, int exp, std::uint64_t cap) {
  double v = 1.0;
  for (int i = 0; i < exp; ++i) {
    v *= base;
    if (v > static_cast<double>(cap) * 2.0) return v;  // early exit, already over
  }
  return v;
}

}  // namespace

LogHolderTarget::LogHolderTarget(std::function<double(std::span<const double>)> log_density,
                                 std::vector<double> lo, std::vector<double> hi,
                                 double holder_s, double holder_h)
    : g_(std::move(log_density)), lo_(std::move(lo)), hi_(std::move(hi)),
      s_(holder_s), h_(holder_h) {
  if (lo_.empty() || lo_.size() != hi_.size()) {
    throw DomainError("LogHolderTarget: box bounds must be non-empty and equal-sized");
  }
  double longest = 0.0;
  for (std::size_t i = 0; i < lo_.size(); ++i) {
    if (!(lo_[i] < hi_[i])) throw DomainError("LogHolderTarget: box requires lo < hi");
    longest = std::max(longest, hi_[i] - lo_[i]);
  }
  if (!(s_ > 0.0) || s_ > 1.0) throw DomainError("LogHolderTarget: s must lie in (0, 1]");
  if (!(h_ > 0.0)) throw DomainError("LogHolderTarget: H must be positive");
  h_unit_ = h_ * std::pow(longest, s_);
  probe_holder();
}

void LogHolderTarget::to_box(std::span<const double> u, std::span<double> out) const {
  for (std::size_t i = 0; i < lo_.size(); ++i) out[i] = lo_[i] + u[i] * (hi_[i] - lo_[i]);
}

double LogHolderTarget::log_density_unit(std::span<const double> u) const {
  std::vector<double> x(lo_.size());
  to_box(u, x);
  const double v = g_(x);
  if (!std::isfinite(v)) {
    throw DomainError("LogHolderTarget: log-density must be finite on the box");
  }
  return v;
}

void LogHolderTarget::probe_holder() const {
  RngStream rng(0x486f6c6465722121ull);  // fixed probe stream, construction-time check
  const int d = dimension();
  std::vector<double> u(d), v(d);
  for (int trial = 0; trial < 256; ++trial) {
    double dist = 0.0;
    for (int i = 0; i < d; ++i) {
      u[i] = rng.uniform();
      v[i] = rng.uniform();
      dist = std::max(dist, std::abs(u[i] - v[i]));
    }
    const double gap = std::abs(log_density_unit(u) - log_density_unit(v));
    if (gap > h_unit_ * std::pow(dist, s_) + kLogSlack) {
      throw InvalidStructureError(
          "LogHolderTarget: declared (s, H) violated at a probed pair of points");
    }
  }
}

GridApproximation::GridApproximation(const LogHolderTarget& target, int resolution,
                                     GridMode mode, std::uint64_t max_evals)
    : m_(resolution), dim_(target.dimension()), mode_(mode) {
  if (m_ < 1) throw DomainError("GridApproximation: resolution must be >= 1");
  if (mode_ == GridMode::endpoint && m_ < 2) {
    throw DomainError("GridApproximation: endpoint mode needs at least 2 points per axis");
  }
  if (ipow_capped(m_, dim_, max_evals) > static_cast<double>(max_evals)) {
    throw BudgetError("GridApproximation: m^d exceeds the evaluation budget");
  }

  points_.resize(m_);
  edges_.resize(m_ + 1);
  double radius = 0.0;
  if (mode_ == GridMode::cell_center) {
    for (int i = 0; i < m_; ++i) points_[i] = (i + 0.5) / m_;
    for (int i = 0; i <= m_; ++i) edges_[i] = static_cast<double>(i) / m_;
    radius = 0.5 / m_;
  } else {
    for (int i = 0; i < m_; ++i) points_[i] = static_cast<double>(i) / (m_ - 1);
    edges_[0] = 0.0;
    edges_[m_] = 1.0;
    for (int i = 1; i < m_; ++i) edges_[i] = 0.5 * (points_[i - 1] + points_[i]);
    radius = 0.5 / (m_ - 1);
  }
  r_hat_ = target.holder_h_unit() * std::pow(radius, target.holder_s());

  const std::size_t n_cells = static_cast<std::size_t>(std::llround(std::pow(m_, dim_)));
  log_g_.resize(n_cells);
  cum_.resize(n_cells);
  std::vector<double> u(dim_);
  double log_max = -std::numeric_limits<double>::infinity();
  for (std::size_t flat = 0; flat < n_cells; ++flat) {
    std::size_t rest = flat;
    for (int a = dim_ - 1; a >= 0; --a) {
      u[a] = points_[rest % m_];
      rest /= m_;
    }
    log_g_[flat] = target.log_density_unit(u);
    log_max = std::max(log_max, log_g_[flat]);
  }
  // Cell mass proportional to exp(g_hat) * volume; shifted by the max for
  // stability, normalized so the last cumulative entry is exactly 1.
  double total = 0.0;
  for (std::size_t flat = 0; flat < n_cells; ++flat) {
    std::size_t rest = flat;
    double volume = 1.0;
    for (int a = dim_ - 1; a >= 0; --a) {
      const int i = static_cast<int>(rest % m_);
      volume *= edges_[i + 1] - edges_[i];
      rest /= m_;
    }
    total += std::exp(log_g_[flat] - log_max) * volume;
    cum_[flat] = total;
  }
  for (std::size_t flat = 0; flat < n_cells; ++flat) cum_[flat] /= total;
  cum_.back() = 1.0;
}

std::size_t GridApproximation::cell_of(std::span<const double> u) const {
  std::size_t flat = 0;
  for (int a = 0; a < dim_; ++a) {
    int i;
    if (mode_ == GridMode::cell_center) {
      i = static_cast<int>(u[a] * m_);
    } else {
      i = static_cast<int>(std::lround(u[a] * (m_ - 1)));
    }
    i = std::clamp(i, 0, m_ - 1);
    flat = flat * m_ + static_cast<std::size_t>(i);
  }
  return flat;
}

double GridApproximation::g_hat_unit(std::span<const double> u) const {
  return log_g_[cell_of(u)];
}

void GridApproximation::sample_unit(RngStream& rng, std::span<double> u) const {
  const double r = rng.uniform();
  const auto it = std::lower_bound(cum_.begin(), cum_.end(), r);
  std::size_t flat = static_cast<std::size_t>(it - cum_.begin());
  if (flat >= cum_.size()) flat = cum_.size() - 1;
  for (int a = dim_ - 1; a >= 0; --a) {
    const int i = static_cast<int>(flat % m_);
    u[a] = edges_[i] + rng.uniform() * (edges_[i + 1] - edges_[i]);
    flat /= m_;
  }
}

void GridApproximation::probe_sandwich(const LogHolderTarget& target, RngStream& rng,
                                       int n_points) const {
  std::vector<double> u(dim_);
  for (int trial = 0; trial < n_points; ++trial) {
    for (int a = 0; a < dim_; ++a) u[a] = rng.uniform();
    const double g = target.log_density_unit(u);
    const double ghat = g_hat_unit(u);
    if (g > ghat + r_hat_ + kLogSlack || g < ghat - r_hat_ - kLogSlack) {
      throw InvariantViolation("GridApproximation: sandwich violated at a probe point");
    }
  }
}

int RefinementSchedule::resolution_at(std::uint64_t iteration, int dimension) const {
  if (initial_m < 1) throw DomainError("RefinementSchedule: initial_m must be >= 1");
  if (doubling_interval == 0) {
    throw DomainError("RefinementSchedule: doubling_interval must be >= 1");
  }
  const std::uint64_t doublings = iteration / doubling_interval;
  int m = initial_m;
  for (std::uint64_t j = 0; j < doublings; ++j) {
    const int next = m * 2;
    if (ipow_capped(next, dimension, max_evals) > static_cast<double>(max_evals)) break;
    m = next;
  }
  return m;
}

AdaptiveRun adaptive_sample(const LogHolderTarget& target, std::uint64_t n_samples,
                            const RefinementSchedule& schedule, RngStream& rng) {
  if (n_samples == 0) throw DomainError("adaptive_sample: n_samples must be >= 1");
  const int d = target.dimension();
  AdaptiveRun run;
  run.samples.reserve(n_samples);
  run.runtimes.reserve(n_samples);

  int m = schedule.resolution_at(0, d);
  GridApproximation grid(target, m, schedule.mode, schedule.max_evals);
  if (schedule.validate_sandwich) grid.probe_sandwich(target, rng, 10000);
  run.levels.push_back({m, grid.r_hat(), 0, 0});

  std::vector<double> x(d), x_s(d);
  bool any_accepted = false;
  std::uint64_t iter = 0;
  std::uint64_t last_publish = 0;
  while (run.samples.size() < n_samples) {
    // Refinement happens between iterations, driven by the iteration count.
    const int m_now = schedule.resolution_at(iter, d);
    if (m_now != m) {
      m = m_now;
      grid = GridApproximation(target, m, schedule.mode, schedule.max_evals);
      if (schedule.validate_sandwich) grid.probe_sandwich(target, rng, 10000);
      run.levels.push_back({m, grid.r_hat(), 0, 0});
    }
    ++iter;
    run.levels.back().iterations += 1;

    grid.sample_unit(rng, x);
    const double log_y = std::log(rng.uniform());
    const double g = target.log_density_unit(x);
    const double ghat = grid.g_hat_unit(x);
    const double r = grid.r_hat();
    if (g > ghat + r + kLogSlack || g < ghat - r - kLogSlack) {
      throw InvariantViolation("adaptive_sample: sandwich violated at a drawn point");
    }
    if (log_y <= g - ghat - r && !any_accepted) {
      x_s = x;
      any_accepted = true;
    }
    if (log_y <= -2.0 * r) {
      if (!any_accepted) {
        throw InvariantViolation("adaptive_sample: publish event without an accepted sample");
      }
      std::vector<double> out(d);
      target.to_box(x_s, out);
      run.samples.push_back(std::move(out));
      run.runtimes.push_back(iter - last_publish);
      run.levels.back().publishes += 1;
      last_publish = iter;
      any_accepted = false;
    }
  }
  run.total_iterations = iter;
  return run;
}

double relative_runtime_ratio(double r_hat) {
  if (!(r_hat > 0.0)) throw DomainError("relative_runtime_ratio: r_hat must be positive");
  return std::expm1(-2.0 * r_hat) / std::expm1(-r_hat);
}

}  // namespace pars
