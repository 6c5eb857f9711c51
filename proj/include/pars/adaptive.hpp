#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "pars/rng.hpp"

namespace pars {

// Target with a log-Holder log-density on a bounded box:
// |g(x) - g(y)| <= H ||x - y||_inf^s on the box, with the same (s, H)
// declared for every database. Internally the box is transported affinely to
// the unit cube with H rescaled by (longest edge)^s; the Holder bound is
// spot-checked by randomized probing at construction.
class LogHolderTarget {
 public:
  LogHolderTarget(std::function<double(std::span<const double>)> log_density,
                  std::vector<double> lo, std::vector<double> hi,
                  double holder_s, double holder_h);

  int dimension() const { return static_cast<int>(lo_.size()); }
  double holder_s() const { return s_; }
  double holder_h() const { return h_; }
  double holder_h_unit() const { return h_unit_; }
  const std::vector<double>& lower() const { return lo_; }
  const std::vector<double>& upper() const { return hi_; }

  double log_density_unit(std::span<const double> u) const;
  void to_box(std::span<const double> u, std::span<double> out) const;

 private:
  void probe_holder() const;

  std::function<double(std::span<const double>)> g_;
  std::vector<double> lo_, hi_;
  double s_, h_, h_unit_;
};

enum class GridMode {
  cell_center,  // m cells per axis, evaluation point at each cell center
  endpoint,     // m points per axis including the box endpoints (m >= 2)
};

// Piecewise-constant approximation g_hat(x) = g(nearest evaluation point),
// with slack r_hat = H * (nearest-neighbor radius)^s, so that
// exp(g_hat - r_hat) <= exp(g) <= exp(g_hat + r_hat) on the box.
// Holds the cumulative cell-mass table used to sample from exp(g_hat).
class GridApproximation {
 public:
  GridApproximation(const LogHolderTarget& target, int resolution,
                    GridMode mode = GridMode::cell_center,
                    std::uint64_t max_evals = kDefaultBudget);

  static constexpr std::uint64_t kDefaultBudget = 1ull << 22;

  int resolution() const { return m_; }
  GridMode mode() const { return mode_; }
  double r_hat() const { return r_hat_; }
  double log_publish_threshold() const { return -2.0 * r_hat_; }
  std::uint64_t evaluations() const { return static_cast<std::uint64_t>(log_g_.size()); }

  // g_hat at a unit-box point (the value at the cell containing it).
  double g_hat_unit(std::span<const double> u) const;

  // Cell chosen proportional to exp(g_hat) * volume via the cumulative
  // table, point uniform within the cell.
  void sample_unit(RngStream& rng, std::span<double> u) const;

  // Hard assertion of the sandwich at n random unit-box points; throws
  // InvariantViolation on failure.
  void probe_sandwich(const LogHolderTarget& target, RngStream& rng, int n_points) const;

 private:
  int m_ = 1;
  int dim_ = 1;
  GridMode mode_ = GridMode::cell_center;
  double r_hat_ = 0.0;
  std::vector<double> points_;  // per-axis evaluation coordinates (m of them)
  std::vector<double> edges_;   // per-axis cell boundaries (m + 1)
  std::vector<double> log_g_;   // m^d evaluations, row-major over axes
  std::vector<double> cum_;     // normalized cumulative cell masses, last = 1

  std::size_t cell_of(std::span<const double> u) const;
};

// Data-independent refinement policy: the per-axis resolution doubles every
// `doubling_interval` iterations, starting from `initial_m`, and stops
// growing once the next grid would exceed `max_evals` evaluations. The
// resolution is a function of the iteration count and these constants only;
// by construction it cannot consult target values, which is what keeps the
// runtime law database-free.
struct RefinementSchedule {
  int initial_m = 5;
  std::uint64_t doubling_interval = 64;
  std::uint64_t max_evals = 1ull << 14;
  GridMode mode = GridMode::cell_center;
  bool validate_sandwich = true;  // probe each refinement level (1e4 points)

  int resolution_at(std::uint64_t iteration, int dimension) const;
};

struct LevelStats {
  int resolution = 0;
  double r_hat = 0.0;
  std::uint64_t iterations = 0;
  std::uint64_t publishes = 0;
};

struct AdaptiveRun {
  std::vector<std::vector<double>> samples;  // box coordinates
  std::vector<std::uint64_t> runtimes;       // iterations since previous publish
  std::vector<LevelStats> levels;            // refinement schedule record
  std::uint64_t total_iterations = 0;
};

// Squeeze-gated adaptive rejection for log-Holder targets. Per iteration
// draws X from exp(g_hat) and one uniform Y; the first Y <= exp(g - g_hat - r)
// since the last publish fixes the candidate, and Y <= exp(-2r) publishes it.
// Published samples are i.i.d. from the normalized target; the publish
// probability each iteration is exactly exp(-2 r_hat), so inter-publish
// runtimes depend only on (H, s, schedule), never on the data.
AdaptiveRun adaptive_sample(const LogHolderTarget& target, std::uint64_t n_samples,
                            const RefinementSchedule& schedule, RngStream& rng);

// (1 - exp(-2 r)) / (1 - exp(-r)): rejection-probability ratio of the
// privacy-aware sampler against a plain sampler with the same proposal;
// approaches 2 as r -> 0.
double relative_runtime_ratio(double r_hat);

}  // namespace pars
