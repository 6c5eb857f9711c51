#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <limits>
#include <vector>

#include "doctest.h"
#include "pars/adaptive.hpp"
#include "pars/error.hpp"
#include "pars/numeric.hpp"
#include "pars/problems.hpp"
#include "pars/stats.hpp"

using namespace pars;

namespace {

LogHolderTarget flat_target(double h = 1.0) {
  return LogHolderTarget([](std::span<const double>) { return 0.0; }, {0.0}, {1.0}, 1.0, h);
}

}  // namespace

TEST_CASE("log-Holder construction validates the declared constants") {
  CHECK_NOTHROW(example4_lipschitz());
  // A 10-Lipschitz kink declared as 1-Lipschitz fails the probe.
  CHECK_THROWS_AS(LogHolderTarget(
                      [](std::span<const double> x) { return -10.0 * std::abs(x[0] - 0.5); },
                      {0.0}, {1.0}, 1.0, 1.0),
                  InvalidStructureError);
  CHECK_THROWS_AS(flat_target(-1.0), DomainError);
  CHECK_THROWS_AS(LogHolderTarget([](std::span<const double>) { return 0.0; }, {0.0}, {1.0},
                                  1.5, 1.0),
                  DomainError);
}

TEST_CASE("general boxes rescale the Holder constant by the longest edge") {
  // g(x) = x on [0, 4]: 1-Lipschitz on the box, 4-Lipschitz on the unit cube.
  const LogHolderTarget t([](std::span<const double> x) { return x[0]; }, {0.0}, {4.0}, 1.0,
                          1.0);
  CHECK(t.holder_h_unit() == doctest::Approx(4.0));
  const double u[] = {0.25};
  CHECK(t.log_density_unit(u) == doctest::Approx(1.0));
  double out[1];
  t.to_box(u, out);
  CHECK(out[0] == doctest::Approx(1.0));
}

TEST_CASE("grid slack r_hat formulas") {
  const LogHolderTarget ex4 = example4_lipschitz();
  CHECK(GridApproximation(ex4, 5).r_hat() == doctest::Approx(0.7).epsilon(1e-12));
  CHECK(GridApproximation(ex4, 15).r_hat() == doctest::Approx(7.0 / 30.0).epsilon(1e-12));
  // Single cell: r_hat = H * 2^-s.
  CHECK(GridApproximation(ex4, 1).r_hat() == doctest::Approx(3.5).epsilon(1e-12));

  // d=2, m=4, H=1, s=0.5 -> (1/8)^0.5.
  const LogHolderTarget flat2([](std::span<const double>) { return 0.0; }, {0.0, 0.0},
                              {1.0, 1.0}, 0.5, 1.0);
  CHECK(GridApproximation(flat2, 4).r_hat() ==
        doctest::Approx(std::sqrt(1.0 / 8.0)).epsilon(1e-12));
}

TEST_CASE("endpoint compatibility grids reproduce the worked-example constants") {
  const LogHolderTarget ex4 = example4_lipschitz();
  const GridApproximation five(ex4, 5, GridMode::endpoint);
  CHECK(five.r_hat() == doctest::Approx(0.875).epsilon(1e-12));
  CHECK(std::exp(five.log_publish_threshold()) ==
        doctest::Approx(std::exp(-1.75)).epsilon(1e-12));
  const GridApproximation fifteen(ex4, 15, GridMode::endpoint);
  CHECK(fifteen.r_hat() == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(std::exp(fifteen.log_publish_threshold()) ==
        doctest::Approx(std::exp(-0.5)).epsilon(1e-12));
  CHECK_THROWS_AS(GridApproximation(ex4, 1, GridMode::endpoint), DomainError);
}

TEST_CASE("grid construction respects the evaluation budget") {
  const LogHolderTarget flat2([](std::span<const double>) { return 0.0; }, {0.0, 0.0},
                              {1.0, 1.0}, 1.0, 1.0);
  CHECK_THROWS_AS(GridApproximation(flat2, 200, GridMode::cell_center, 30000), BudgetError);
  CHECK_NOTHROW(GridApproximation(flat2, 170, GridMode::cell_center, 30000));
}

TEST_CASE("sampling from a flat grid is uniform") {
  const LogHolderTarget flat = flat_target();
  const GridApproximation grid(flat, 8);
  RngStream rng(7);
  std::vector<double> xs(100000);
  std::vector<double> point(1);
  for (auto& x : xs) {
    grid.sample_unit(rng, point);
    x = point[0];
  }
  CHECK(ks_statistic(std::move(xs), [](double x) { return x; }) < 0.01);
}

TEST_CASE("two-cell grid draws cells proportional to exp(g_hat)") {
  // A Lipschitz ramp hitting 0 and log 3 at the two cell centers, so the
  // cells get masses 1/4 and 3/4.
  const LogHolderTarget ramp(
      [](std::span<const double> x) { return std::log(3.0) * (2.0 * x[0] - 0.5); }, {0.0},
      {1.0}, 1.0, 3.0);
  const GridApproximation grid(ramp, 2);
  RngStream rng(11);
  const int n = 100000;
  int high = 0;
  std::vector<double> point(1);
  for (int i = 0; i < n; ++i) {
    grid.sample_unit(rng, point);
    if (point[0] >= 0.5) ++high;
  }
  const double freq = static_cast<double>(high) / n;
  CHECK(std::abs(freq - 0.75) < 0.01);  // two cells: TV is this single gap
}

TEST_CASE("g_hat is the evaluation at the containing cell") {
  const LogHolderTarget ex4 = example4_lipschitz();
  const GridApproximation grid(ex4, 5);
  // Cell centers at 0.1, 0.3, 0.5, 0.7, 0.9.
  for (int c = 0; c < 5; ++c) {
    const double center[] = {0.1 + 0.2 * c};
    const double inside[] = {0.1 + 0.2 * c + 0.07};
    CHECK(grid.g_hat_unit(inside) == doctest::Approx(ex4.log_density_unit(center)));
  }
}

TEST_CASE("sandwich probe accepts valid grids") {
  const LogHolderTarget ex4 = example4_lipschitz();
  const GridApproximation grid(ex4, 5);
  RngStream rng(13);
  CHECK_NOTHROW(grid.probe_sandwich(ex4, rng, 10000));
}

TEST_CASE("refinement schedule is deterministic and budget-capped") {
  RefinementSchedule s;
  s.initial_m = 5;
  s.doubling_interval = 64;
  s.max_evals = 50;
  CHECK(s.resolution_at(0, 1) == 5);
  CHECK(s.resolution_at(63, 1) == 5);
  CHECK(s.resolution_at(64, 1) == 10);
  CHECK(s.resolution_at(128, 1) == 20);
  CHECK(s.resolution_at(192, 1) == 40);
  CHECK(s.resolution_at(256, 1) == 40);  // 80 would exceed 50 evaluations
  CHECK(s.resolution_at(100000, 1) == 40);
  // In d=2 the cap binds at m^2 <= 50.
  CHECK(s.resolution_at(64, 2) == 5);
}

TEST_CASE("adaptive sampler on a flat target publishes uniforms") {
  const LogHolderTarget flat = flat_target();
  RefinementSchedule s;
  s.initial_m = 4;
  s.doubling_interval = 1000;
  RngStream rng(17);
  const AdaptiveRun run = adaptive_sample(flat, 100000, s, rng);
  std::vector<double> xs(run.samples.size());
  for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = run.samples[i][0];
  CHECK(ks_statistic(std::move(xs), [](double x) { return x; }) < 0.01);
  CHECK(run.samples.size() == 100000);
  CHECK(run.runtimes.size() == 100000);
  for (std::uint64_t r : run.runtimes) CHECK(r >= 1);
}

TEST_CASE("adaptive sampling in d=2: uniform marginals on a flat target") {
  const LogHolderTarget flat2([](std::span<const double>) { return 0.0; }, {0.0, 0.0},
                              {1.0, 1.0}, 1.0, 1.0);
  RefinementSchedule s;
  s.initial_m = 4;
  s.doubling_interval = 5000;
  s.max_evals = 4096;
  RngStream rng(43);
  const AdaptiveRun run = adaptive_sample(flat2, 30000, s, rng);
  for (int axis = 0; axis < 2; ++axis) {
    std::vector<double> xs(run.samples.size());
    for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = run.samples[i][axis];
    CHECK(ks_statistic(std::move(xs), [](double x) { return x; }) < 0.015);
  }
}

TEST_CASE("publish frequency tracks exp(-2 r_hat) at a fixed level") {
  const LogHolderTarget ex4 = example4_lipschitz();
  RefinementSchedule s;
  s.initial_m = 5;
  s.doubling_interval = std::numeric_limits<std::uint64_t>::max();
  RngStream rng(19);
  const AdaptiveRun run = adaptive_sample(ex4, 8000, s, rng);
  const LevelStats& level = run.levels.front();
  const double freq =
      static_cast<double>(level.publishes) / static_cast<double>(level.iterations);
  CHECK(level.r_hat == doctest::Approx(0.7));
  CHECK(std::abs(freq - std::exp(-1.4)) < 0.012);
}

TEST_CASE("r_hat shrinks and the publish probability climbs across levels") {
  const LogHolderTarget ex4 = example4_lipschitz();
  RefinementSchedule s;
  s.initial_m = 5;
  s.doubling_interval = 512;
  s.max_evals = 1 << 12;
  RngStream rng(23);
  const AdaptiveRun run = adaptive_sample(ex4, 5000, s, rng);
  REQUIRE(run.levels.size() > 2);
  for (std::size_t i = 1; i < run.levels.size(); ++i) {
    CHECK(run.levels[i].r_hat < run.levels[i - 1].r_hat);
    CHECK(std::exp(-2.0 * run.levels[i].r_hat) > std::exp(-2.0 * run.levels[i - 1].r_hat));
  }
  CHECK(run.levels.back().r_hat < 0.01);
}

TEST_CASE("published samples match the trapezoid-normalized target") {
  const LogHolderTarget ex4 = example4_lipschitz();
  RefinementSchedule s;
  RngStream rng(29);
  const AdaptiveRun run = adaptive_sample(ex4, 50000, s, rng);
  const NumericCdf1D oracle(
      [](double x) { return -3.0 * std::abs(x - 0.5) + 0.2 * std::sin(20.0 * x); }, 0.0, 1.0,
      100000);
  std::vector<double> xs(run.samples.size());
  for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = run.samples[i][0];
  CHECK(ks_statistic(std::move(xs), [&](double x) { return oracle(x); }) < 0.012);
}

TEST_CASE("same schedule, different targets: exchangeable inter-publish runtimes") {
  RefinementSchedule s;
  s.initial_m = 5;
  s.doubling_interval = 500;
  RngStream rng_a(31), rng_b(37);
  const AdaptiveRun a = adaptive_sample(example4_lipschitz(), 6000, s, rng_a);
  const AdaptiveRun b = adaptive_sample(example4_lipschitz_alt(), 6000, s, rng_b);
  CHECK(chi_square_two_sample(a.runtimes, b.runtimes).pvalue > 1e-3);
}

TEST_CASE("relative runtime ratio") {
  CHECK(std::abs(relative_runtime_ratio(1e-6) - 2.0) < 1e-5);
  CHECK(relative_runtime_ratio(std::log(2.0)) == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(relative_runtime_ratio(50.0) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK_THROWS_AS(relative_runtime_ratio(0.0), DomainError);
}

TEST_CASE("adaptive runs are reproducible") {
  const LogHolderTarget ex4 = example4_lipschitz();
  RefinementSchedule s;
  RngStream a(41), b(41);
  const AdaptiveRun ra = adaptive_sample(ex4, 500, s, a);
  const AdaptiveRun rb = adaptive_sample(ex4, 500, s, b);
  CHECK(ra.total_iterations == rb.total_iterations);
  for (std::size_t i = 0; i < ra.samples.size(); ++i) {
    CHECK(ra.samples[i][0] == rb.samples[i][0]);
    CHECK(ra.runtimes[i] == rb.runtimes[i]);
  }
  CHECK_THROWS_AS(adaptive_sample(ex4, 0, s, a), DomainError);
}
