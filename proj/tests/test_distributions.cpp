#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "pars/distributions.hpp"
#include "pars/error.hpp"
#include "pars/stats.hpp"

using namespace pars;

TEST_CASE("geometric pmf matches direct products") {
  CHECK(geometric_pmf({0.5}, 3) == doctest::Approx(0.125).epsilon(1e-14));
  CHECK(geometric_pmf({1.0}, 1) == 1.0);
  CHECK(geometric_pmf({1.0}, 2) == 0.0);

  // Direct product evaluation, no logs.
  double expected = 0.2;
  for (int i = 0; i < 9; ++i) expected *= 0.8;
  CHECK(geometric_pmf({0.2}, 10) == doctest::Approx(expected).epsilon(1e-13));
}

TEST_CASE("geometric pmf partial sums telescope to 1 - (1-p)^K") {
  for (double p : {0.05, 0.2, 0.5, 0.9}) {
    double sum = 0.0;
    for (std::int64_t k = 1; k <= 1000; ++k) sum += geometric_pmf({p}, k);
    const double expected = 1.0 - std::pow(1.0 - p, 1000.0);
    CHECK(std::abs(sum - expected) < 1e-12);
  }
}

TEST_CASE("geometric pmf domain errors") {
  CHECK_THROWS_AS(geometric_pmf({0.5}, 0), DomainError);
  CHECK_THROWS_AS(geometric_pmf({0.0}, 1), DomainError);
  CHECK_THROWS_AS(geometric_pmf({1.5}, 1), DomainError);
}

TEST_CASE("geometric sampling: certain acceptance and mean") {
  RngStream rng(123);
  for (int i = 0; i < 100; ++i) CHECK(geometric_sample({1.0}, rng) == 1);

  double mean = 0.0;
  const int n = 1'000'000;
  for (int i = 0; i < n; ++i) mean += static_cast<double>(geometric_sample({0.5}, rng));
  mean /= n;
  CHECK(std::abs(mean - 2.0) < 5.0 / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("geometric sampler passes chi-square against the exact pmf") {
  RngStream rng(7);
  std::vector<std::uint64_t> draws(100000);
  for (auto& d : draws) d = static_cast<std::uint64_t>(geometric_sample({0.2}, rng));
  const ChiSquareResult chi = chi_square_geometric_gof(draws, 0.2);
  CHECK(chi.pvalue > 1e-3);

  // Empirical law close in total variation over the head of the support.
  CHECK(tv_distance_geometric(draws, 0.2, 1, 50) < 0.01);
}

TEST_CASE("loop-based geometric simulation draws the same law") {
  RngStream rng(11);
  std::vector<std::uint64_t> draws(50000);
  for (auto& d : draws) d = static_cast<std::uint64_t>(geometric_sample_loop({0.3}, rng));
  CHECK(chi_square_geometric_gof(draws, 0.3).pvalue > 1e-3);
}

TEST_CASE("geometric quantile brackets the target probability") {
  for (double p : {0.1, 0.25, 0.7}) {
    const std::int64_t k = geometric_quantile({p}, 0.999);
    CHECK(1.0 - std::pow(1.0 - p, static_cast<double>(k)) >= 0.999);
    CHECK(1.0 - std::pow(1.0 - p, static_cast<double>(k - 1)) < 0.999);
  }
}

TEST_CASE("unit ball volumes") {
  CHECK(unit_ball_volume(1) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(unit_ball_volume(2) == doctest::Approx(std::numbers::pi).epsilon(1e-12));
  CHECK(unit_ball_volume(3) == doctest::Approx(4.0 * std::numbers::pi / 3.0).epsilon(1e-12));
  CHECK_THROWS_AS(unit_ball_volume(0), DomainError);
}

TEST_CASE("knorm density in d=1 is the Laplace density") {
  const KNormLaw law{{0.0}, 1.0};
  const double x0[] = {0.0};
  CHECK(std::exp(knorm_logpdf(law, x0)) == doctest::Approx(0.5).epsilon(1e-13));
  for (double x = -4.0; x <= 4.0; x += 0.25) {
    const double xv[] = {x};
    const double laplace = std::log(0.5) - std::abs(x);
    CHECK(std::abs(knorm_logpdf(law, xv) - laplace) < 1e-12);
  }
}

TEST_CASE("knorm sampling: radial mean and location symmetry") {
  RngStream rng(17);
  const int n = 100000;

  const KNormLaw origin{{0.0, 0.0}, 1.0};
  double mean_radius = 0.0;
  std::vector<double> x(2);
  for (int i = 0; i < n; ++i) {
    knorm_sample(origin, rng, x);
    mean_radius += std::sqrt(x[0] * x[0] + x[1] * x[1]);
  }
  mean_radius /= n;
  CHECK(std::abs(mean_radius - 2.0) < 0.02);  // Gamma(d, s) radial mean d*s

  const KNormLaw shifted{{3.0, 3.0}, 0.5};
  double m0 = 0.0, m1 = 0.0;
  for (int i = 0; i < n; ++i) {
    knorm_sample(shifted, rng, x);
    m0 += x[0];
    m1 += x[1];
  }
  CHECK(std::abs(m0 / n - 3.0) < 0.02);
  CHECK(std::abs(m1 / n - 3.0) < 0.02);
}

TEST_CASE("knorm sampling in d=1 draws the Laplace law") {
  RngStream rng(29);
  const KNormLaw law{{0.0}, 1.0};
  std::vector<double> xs(100000);
  std::vector<double> point(1);
  for (auto& x : xs) {
    knorm_sample(law, rng, point);
    x = point[0];
  }
  const auto laplace_cdf = [](double x) {
    return x < 0.0 ? 0.5 * std::exp(x) : 1.0 - 0.5 * std::exp(-x);
  };
  CHECK(ks_statistic(std::move(xs), laplace_cdf) < 0.01);
}

TEST_CASE("gaussian logpdf closed forms") {
  const GaussianLaw std1{{0.0}, 1.0};
  const double at_mean[] = {0.0};
  const double at_one[] = {1.0};
  const double half_log_2pi = 0.5 * std::log(2.0 * std::numbers::pi);
  CHECK(gaussian_logpdf(std1, at_mean) == doctest::Approx(-half_log_2pi).epsilon(1e-13));
  CHECK(gaussian_logpdf(std1, at_one) == doctest::Approx(-0.5 - half_log_2pi).epsilon(1e-13));
}

TEST_CASE("gaussian sampling variance tracks the precision") {
  RngStream rng(23);
  const GaussianLaw law{{0.0, 0.0}, 4.0};
  const int n = 100000;
  std::vector<double> x(2);
  double v0 = 0.0, v1 = 0.0;
  for (int i = 0; i < n; ++i) {
    gaussian_sample(law, rng, x);
    v0 += x[0] * x[0];
    v1 += x[1] * x[1];
  }
  CHECK(std::abs(v0 / n - 0.25) < 0.005);
  CHECK(std::abs(v1 / n - 0.25) < 0.005);
}

TEST_CASE("streams are reproducible and distinct") {
  RngStream a(42, 3), b(42, 3), c(42, 4);
  bool all_equal = true;
  bool any_diff_stream = false;
  for (int i = 0; i < 1000; ++i) {
    const std::uint64_t va = a.next_u64();
    all_equal = all_equal && (va == b.next_u64());
    any_diff_stream = any_diff_stream || (va != c.next_u64());
  }
  CHECK(all_equal);
  CHECK(any_diff_stream);

  RngStream d(42, 3), e(42, 3);
  for (int i = 0; i < 100; ++i) {
    CHECK(geometric_sample({0.3}, d) == geometric_sample({0.3}, e));
  }
}

TEST_CASE("uniform draws stay inside the open interval") {
  RngStream rng(99);
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.uniform();
    CHECK(u > 0.0);
    CHECK(u < 1.0);
  }
}
