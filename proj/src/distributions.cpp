#include "pars/distributions.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "pars/error.hpp"

namespace pars {
namespace {

void check_geometric(const GeometricLaw& law) {
  if (!(law.p > 0.0) || !(law.p <= 1.0)) {
    throw DomainError("geometric law requires p in (0, 1]");
  }
}

double norm2(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

}  // namespace

double geometric_log_pmf(const GeometricLaw& law, std::int64_t k) {
  check_geometric(law);
  if (k < 1) throw DomainError("geometric pmf support starts at k = 1");
  if (law.p == 1.0) {
    return k == 1 ? 0.0 : -std::numeric_limits<double>::infinity();
  }
  return std::log(law.p) + static_cast<double>(k - 1) * std::log1p(-law.p);
}

double geometric_pmf(const GeometricLaw& law, std::int64_t k) {
  return std::exp(geometric_log_pmf(law, k));
}

std::int64_t geometric_sample(const GeometricLaw& law, RngStream& rng) {
  check_geometric(law);
  if (law.p == 1.0) return 1;
  const double u = rng.uniform();
  const double k = std::ceil(std::log(u) / std::log1p(-law.p));
  return k < 1.0 ? 1 : static_cast<std::int64_t>(k);
}

std::int64_t geometric_sample_loop(const GeometricLaw& law, RngStream& rng) {
  check_geometric(law);
  std::int64_t k = 1;
  while (rng.uniform() > law.p) ++k;
  return k;
}

std::int64_t geometric_quantile(const GeometricLaw& law, double prob) {
  check_geometric(law);
  if (!(prob > 0.0) || !(prob < 1.0)) {
    throw DomainError("geometric_quantile: prob must be in (0, 1)");
  }
  if (law.p == 1.0) return 1;
  // Smallest k with (1-p)^k <= 1 - prob.
  const double k = std::ceil(std::log1p(-prob) / std::log1p(-law.p));
  return k < 1.0 ? 1 : static_cast<std::int64_t>(k);
}

double gaussian_logpdf(const GaussianLaw& law, std::span<const double> x) {
  if (!(law.precision_scale > 0.0)) {
    throw DomainError("gaussian law requires precision_scale > 0");
  }
  const int d = law.dimension();
  if (static_cast<int>(x.size()) != d) {
    throw DomainError("gaussian_logpdf: dimension mismatch");
  }
  double q = 0.0;
  for (int i = 0; i < d; ++i) {
    const double z = x[i] - law.mean[i];
    q += z * z;
  }
  return 0.5 * d * (std::log(law.precision_scale) - std::log(2.0 * std::numbers::pi)) -
         0.5 * law.precision_scale * q;
}

double standard_normal(RngStream& rng) {
  const double u1 = rng.uniform();
  const double u2 = rng.uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

void gaussian_sample(const GaussianLaw& law, RngStream& rng, std::span<double> out) {
  if (!(law.precision_scale > 0.0)) {
    throw DomainError("gaussian law requires precision_scale > 0");
  }
  const int d = law.dimension();
  if (static_cast<int>(out.size()) != d) {
    throw DomainError("gaussian_sample: dimension mismatch");
  }
  const double sd = 1.0 / std::sqrt(law.precision_scale);
  for (int i = 0; i < d; ++i) out[i] = law.mean[i] + sd * standard_normal(rng);
}

double log_unit_ball_volume(int d) {
  if (d < 1) throw DomainError("unit_ball_volume: dimension must be >= 1");
  return d * std::log(2.0) + d * std::lgamma(1.5) - std::lgamma(1.0 + 0.5 * d);
}

double unit_ball_volume(int d) { return std::exp(log_unit_ball_volume(d)); }

double knorm_logpdf(const KNormLaw& law, std::span<const double> x) {
  if (law.norm != NormKind::l2) {
    throw UnsupportedFeatureError("knorm law: only the l2 norm is supported");
  }
  if (!(law.scale > 0.0)) throw DomainError("knorm law requires scale > 0");
  const int d = law.dimension();
  if (static_cast<int>(x.size()) != d) {
    throw DomainError("knorm_logpdf: dimension mismatch");
  }
  double q = 0.0;
  for (int i = 0; i < d; ++i) {
    const double z = x[i] - law.location[i];
    q += z * z;
  }
  const double log_c = std::lgamma(d + 1.0) + d * std::log(law.scale) + log_unit_ball_volume(d);
  return -log_c - std::sqrt(q) / law.scale;
}

double gamma_sample_integer_shape(int shape, double scale, RngStream& rng) {
  if (shape < 1) throw DomainError("gamma_sample_integer_shape: shape must be >= 1");
  if (!(scale > 0.0)) throw DomainError("gamma_sample_integer_shape: scale must be > 0");
  double log_prod = 0.0;
  for (int i = 0; i < shape; ++i) log_prod += std::log(rng.uniform());
  return -scale * log_prod;
}

void knorm_sample(const KNormLaw& law, RngStream& rng, std::span<double> out) {
  if (law.norm != NormKind::l2) {
    throw UnsupportedFeatureError("knorm law: only the l2 norm is supported");
  }
  if (!(law.scale > 0.0)) throw DomainError("knorm law requires scale > 0");
  const int d = law.dimension();
  if (static_cast<int>(out.size()) != d) {
    throw DomainError("knorm_sample: dimension mismatch");
  }
  const double radius = gamma_sample_integer_shape(d, law.scale, rng);
  // Uniform direction from normalized Gaussian coordinates.
  double n = 0.0;
  do {
    for (int i = 0; i < d; ++i) out[i] = standard_normal(rng);
    n = norm2(out);
  } while (n == 0.0);
  for (int i = 0; i < d; ++i) out[i] = law.location[i] + radius * out[i] / n;
}

}  // namespace pars
