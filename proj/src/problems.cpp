#include "pars/problems.hpp"

#include <cmath>
#include <numbers>

#include "pars/error.hpp"
#include "pars/special.hpp"

namespace pars {
namespace {

double sqr(double x) { return x * x; }

}  // namespace

SamplingProblem gaussian_demo() {
  auto g = [](std::span<const double> x) { return -x[0] * x[0]; };
  StronglyConcaveTarget t = make_strongly_concave(g, 1, /*alpha=*/1.0, /*l_smooth=*/4.0, {0.0});

  SamplingProblem p;
  p.name = "gaussian-demo";
  p.dimension = 1;
  p.target = as_target(t);
  p.envelope = gaussian_envelope(t);
  p.squeeze_rate = std::sqrt(1.0 / 4.0);           // (alpha/L)^(d/2)
  p.simple_accept_rate = 1.0 / std::sqrt(2.0);     // sqrt(pi) / sqrt(2 pi)
  // exp(-x^2) normalized is N(0, 1/2).
  p.output_cdf = [](double x) { return normal_cdf(x / std::sqrt(0.5)); };

  // Normalized target against the N(0,1) proposal: pi(x) <= sqrt(2) U(x).
  const double c_current = std::sqrt(2.0);
  UnnormalizedTarget normalized{
      [](std::span<const double> x) {
        return -x[0] * x[0] - 0.5 * std::log(std::numbers::pi);
      },
      1, Support{}};
  Envelope wait_env;
  wait_env.proposal = make_proposal(GaussianLaw{{0.0}, 1.0});
  wait_env.log_cU = std::log(c_current);
  p.wait = WaitSetup{std::move(normalized), std::move(wait_env), c_current};
  return p;
}

SamplingProblem kng_demo() {
  KNGTarget t;
  t.gradient = [](std::span<const double> x, std::span<double> out) {
    out[0] = x[0];
    out[1] = 3.0 * x[1];
  };
  t.dimension = 2;
  t.alpha = 1.0;
  t.l_smooth = 3.0;
  t.minimizer = {0.0, 0.0};

  SamplingProblem p;
  p.name = "kng-demo";
  p.dimension = 2;
  p.target = as_target(t);
  p.envelope = knorm_envelope(t);
  p.squeeze_rate = sqr(1.0 / 3.0);  // (alpha/L)^d
  return p;
}

ERMSpec ridge_erm_demo_spec(bool swap_record) {
  std::vector<std::vector<double>> records = {{1.0, 0.5}, {0.8, -0.2}, {1.2, 0.3}};
  if (swap_record) records[1] = {0.8, 0.4};  // adjacent database: one record replaced
  return make_ridge_erm_spec(std::move(records), /*alpha_reg=*/1.0, /*l_loss=*/1.44,
                             /*delta_sens=*/1.0, /*eps=*/1.0);
}

SamplingProblem ridge_erm_demo(bool swap_record) {
  const ERMSpec spec = ridge_erm_demo_spec(swap_record);
  StronglyConcaveTarget t = build_erm_target(spec);

  SamplingProblem p;
  p.name = "ridge-erm";
  p.dimension = spec.dim();
  p.target = as_target(t);
  p.envelope = gaussian_envelope(t);
  p.squeeze_rate = std::pow(t.alpha / t.l_smooth, 0.5 * p.dimension);

  // Ridge utility is exactly quadratic, so the output law is Gaussian with
  // precision (eps / 2 delta) (sum a_i^2 + alpha_reg) around the ridge mode.
  double sum_aa = 0.0;
  for (const auto& rec : spec.records) sum_aa += rec[0] * rec[0];
  const double scale = spec.eps / (2.0 * spec.delta_sens);
  const double precision = scale * (sum_aa + spec.alpha_reg);
  const double mean = t.mode[0];
  p.output_cdf = [mean, precision](double x) {
    return normal_cdf((x - mean) * std::sqrt(precision));
  };
  return p;
}

SamplingProblem coin_demo(double c) {
  if (!(c >= 1.0)) throw DomainError("coin_demo: c must be >= 1");
  const GaussianLaw law{{0.0}, 1.0};
  SamplingProblem p;
  p.name = "coin-demo";
  p.dimension = 1;
  p.target = UnnormalizedTarget{
      [law](std::span<const double> x) { return gaussian_logpdf(law, x); }, 1, Support{}};
  p.envelope.proposal = make_proposal(law);
  p.envelope.log_cU = std::log(c);
  p.simple_accept_rate = 1.0 / c;
  p.output_cdf = [](double x) { return normal_cdf(x); };
  p.wait = WaitSetup{p.target, p.envelope, c};
  return p;
}

LogHolderTarget example4_lipschitz() {
  return LogHolderTarget(
      [](std::span<const double> x) {
        return -3.0 * std::abs(x[0] - 0.5) + 0.2 * std::sin(20.0 * x[0]);
      },
      {0.0}, {1.0}, /*holder_s=*/1.0, /*holder_h=*/7.0);
}

LogHolderTarget example4_lipschitz_alt() {
  return LogHolderTarget(
      [](std::span<const double> x) {
        return -2.0 * std::abs(x[0] - 0.3) + 0.3 * std::cos(10.0 * x[0]);
      },
      {0.0}, {1.0}, /*holder_s=*/1.0, /*holder_h=*/7.0);
}

SamplingProblem problem_by_name(const std::string& name) {
  if (name == "gaussian-demo") return gaussian_demo();
  if (name == "kng-demo") return kng_demo();
  if (name == "ridge-erm") return ridge_erm_demo();
  throw ConfigError("unknown target '" + name +
                    "' (expected gaussian-demo, kng-demo, ridge-erm, or example4-lipschitz)");
}

}  // namespace pars
