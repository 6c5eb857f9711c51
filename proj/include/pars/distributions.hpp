#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pars/rng.hpp"

namespace pars {

// Geometric law on {1, 2, ...}: pmf(k) = (1-p)^(k-1) * p.
struct GeometricLaw {
  double p = 0.5;  // success probability in (0, 1]
};

double geometric_pmf(const GeometricLaw& law, std::int64_t k);
double geometric_log_pmf(const GeometricLaw& law, std::int64_t k);

// Inversion sampler: k = ceil(log(u) / log(1-p)). Exact, O(1), and its
// work per draw does not depend on p.
std::int64_t geometric_sample(const GeometricLaw& law, RngStream& rng);

// Bernoulli-loop simulation of the same law. Consumes one uniform per trial,
// so its work scales with 1/p; kept only for side-channel demonstrations.
std::int64_t geometric_sample_loop(const GeometricLaw& law, RngStream& rng);

// Smallest k with P(T <= k) >= prob.
std::int64_t geometric_quantile(const GeometricLaw& law, double prob);

// Isotropic Gaussian N(mean, precision_scale^{-1} I).
struct GaussianLaw {
  std::vector<double> mean;
  double precision_scale = 1.0;

  int dimension() const { return static_cast<int>(mean.size()); }
};

double gaussian_logpdf(const GaussianLaw& law, std::span<const double> x);
void gaussian_sample(const GaussianLaw& law, RngStream& rng, std::span<double> out);

enum class NormKind { l2 };

// Norm-ball law with density c^{-1} exp(-||x - m|| / s) where the
// normalizer is c = d! * s^d * Vol(unit ball). Only the l2 norm is built.
struct KNormLaw {
  std::vector<double> location;
  double scale = 1.0;
  NormKind norm = NormKind::l2;

  int dimension() const { return static_cast<int>(location.size()); }
};

// Volume of the unit l2 ball in dimension d: 2^d Gamma(3/2)^d / Gamma(1 + d/2).
double unit_ball_volume(int d);
double log_unit_ball_volume(int d);

double knorm_logpdf(const KNormLaw& law, std::span<const double> x);

// Direction uniform on the sphere, radius from the Gamma(shape d, scale s)
// radial law (density proportional to r^(d-1) exp(-r/s)).
void knorm_sample(const KNormLaw& law, RngStream& rng, std::span<double> out);

// One standard normal draw via Box-Muller (two uniforms consumed).
double standard_normal(RngStream& rng);

// Gamma(shape, scale) draw for integer shape >= 1, as a sum of exponentials.
double gamma_sample_integer_shape(int shape, double scale, RngStream& rng);

}  // namespace pars
