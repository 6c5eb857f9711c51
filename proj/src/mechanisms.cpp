#include "pars/mechanisms.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "json.hpp"
#include "pars/error.hpp"

namespace pars {
namespace {

constexpr double kGradTolerance = 1e-4;   // finite-difference mode check
constexpr double kModeTolerance = 1e-8;   // optimizer exit requirement
constexpr int kOptimizerBudget = 512;     // fixed, data-independent

double norm2(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

RngStream probe_stream() { return RngStream(0x70726f6265ull); }

Envelope validated(const UnnormalizedTarget& target, Envelope env, const char* who) {
  RngStream rng = probe_stream();
  try {
    validate_envelope(target, env, rng, 10000);
  } catch (const EnvelopeViolation& e) {
    throw InvalidStructureError(std::string(who) +
                                ": declared curvature constants fail the sandwich probe (" +
                                e.what() + ")");
  }
  return env;
}

}  // namespace

StronglyConcaveTarget make_strongly_concave(
    std::function<double(std::span<const double>)> log_density, int dimension,
    double alpha, double l_smooth, std::vector<double> mode) {
  if (dimension < 1) throw DomainError("make_strongly_concave: dimension must be >= 1");
  if (!(alpha > 0.0)) throw DomainError("make_strongly_concave: alpha must be positive");
  if (!(l_smooth >= alpha)) {
    throw DomainError("make_strongly_concave: L must be at least alpha");
  }
  if (static_cast<int>(mode.size()) != dimension) {
    throw DomainError("make_strongly_concave: mode dimension mismatch");
  }
  StronglyConcaveTarget t;
  t.log_density = std::move(log_density);
  t.dimension = dimension;
  t.alpha = alpha;
  t.l_smooth = l_smooth;
  t.g_at_mode = t.log_density(mode);
  t.mode = std::move(mode);

  // The gradient must vanish at the declared mode.
  const double h = 1e-5;
  std::vector<double> x = t.mode;
  for (int i = 0; i < dimension; ++i) {
    x[i] = t.mode[i] + h;
    const double up = t.log_density(x);
    x[i] = t.mode[i] - h;
    const double down = t.log_density(x);
    x[i] = t.mode[i];
    if (std::abs(up - down) / (2.0 * h) > kGradTolerance) {
      throw InvalidStructureError("make_strongly_concave: gradient does not vanish at mode");
    }
  }
  return t;
}

UnnormalizedTarget as_target(const StronglyConcaveTarget& t) {
  return UnnormalizedTarget{t.log_density, t.dimension, Support{}};
}

Envelope gaussian_envelope(const StronglyConcaveTarget& t) {
  const double d = t.dimension;
  Envelope env;
  env.proposal = make_proposal(GaussianLaw{t.mode, t.alpha});
  env.log_cU = t.g_at_mode + 0.5 * d * std::log(2.0 * std::numbers::pi / t.alpha);
  env.squeeze = make_proposal(GaussianLaw{t.mode, t.l_smooth});
  env.log_cL = t.g_at_mode + 0.5 * d * std::log(2.0 * std::numbers::pi / t.l_smooth);
  return validated(as_target(t), std::move(env), "gaussian_envelope");
}

UnnormalizedTarget as_target(const KNGTarget& t) {
  const auto grad = t.gradient;
  const int d = t.dimension;
  return UnnormalizedTarget{
      [grad, d](std::span<const double> x) {
        std::vector<double> g(d);
        grad(x, g);
        return -norm2(g);
      },
      d, Support{}};
}

Envelope knorm_envelope(const KNGTarget& t) {
  if (!(t.alpha > 0.0) || !(t.l_smooth >= t.alpha)) {
    throw DomainError("knorm_envelope: need 0 < alpha <= L");
  }
  const int d = t.dimension;
  const double log_vol = log_unit_ball_volume(d);
  const double log_fact = std::lgamma(d + 1.0);
  Envelope env;
  env.proposal = make_proposal(KNormLaw{t.minimizer, 1.0 / t.alpha});
  env.log_cU = log_fact - d * std::log(t.alpha) + log_vol;
  env.squeeze = make_proposal(KNormLaw{t.minimizer, 1.0 / t.l_smooth});
  env.log_cL = log_fact - d * std::log(t.l_smooth) + log_vol;
  return validated(as_target(t), std::move(env), "knorm_envelope");
}

int ERMSpec::dim() const {
  if (dimension > 0) return dimension;
  if (records.empty()) {
    throw DomainError("ERMSpec: zero records need an explicit dimension");
  }
  const int d = static_cast<int>(records.front().size()) - 1;
  if (d < 1) throw DomainError("ERMSpec: ridge records need at least [a, b]");
  return d;
}

ERMSpec make_ridge_erm_spec(std::vector<std::vector<double>> records, double alpha_reg,
                            double l_loss, double delta_sens, double eps) {
  ERMSpec spec;
  spec.records = std::move(records);
  spec.alpha_reg = alpha_reg;
  spec.l_loss = l_loss;
  spec.delta_sens = delta_sens;
  spec.eps = eps;
  // Ridge loss 0.5 (a'x - b)^2 over a record laid out as [a..., b].
  spec.loss = [](std::span<const double> x, std::span<const double> rec) {
    double r = -rec.back();
    for (std::size_t i = 0; i < x.size(); ++i) r += rec[i] * x[i];
    return 0.5 * r * r;
  };
  spec.loss_grad = [](std::span<const double> x, std::span<const double> rec,
                      std::span<double> out) {
    double r = -rec.back();
    for (std::size_t i = 0; i < x.size(); ++i) r += rec[i] * x[i];
    for (std::size_t i = 0; i < x.size(); ++i) out[i] += r * rec[i];
  };
  return spec;
}

ERMSpec erm_spec_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("ERM spec: invalid JSON: ") + e.what());
  }
  try {
    std::vector<std::vector<double>> records =
        j.at("records").get<std::vector<std::vector<double>>>();
    ERMSpec spec = make_ridge_erm_spec(std::move(records), j.at("alpha_reg").get<double>(),
                                       j.at("L_loss").get<double>(),
                                       j.at("delta_sens").get<double>(), j.at("eps").get<double>());
    if (j.contains("dimension")) spec.dimension = j.at("dimension").get<int>();
    for (const auto& rec : spec.records) {
      if (static_cast<int>(rec.size()) != spec.dim() + 1) {
        throw ConfigError("ERM spec: every record must have d + 1 entries [a..., b]");
      }
    }
    return spec;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("ERM spec: missing or malformed field: ") + e.what());
  } catch (const DomainError& e) {
    throw ConfigError(std::string("ERM spec: ") + e.what());
  }
}

ERMSpec erm_spec_from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("ERM spec: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return erm_spec_from_json_text(buf.str());
}

namespace {

void erm_check(const ERMSpec& spec) {
  if (!(spec.alpha_reg > 0.0)) throw DomainError("ERMSpec: alpha_reg must be positive");
  if (!(spec.l_loss >= 0.0)) throw DomainError("ERMSpec: L_loss must be non-negative");
  if (!(spec.delta_sens > 0.0)) throw DomainError("ERMSpec: delta_sens must be positive");
  if (!(spec.eps > 0.0)) throw DomainError("ERMSpec: eps must be positive");
  if (!spec.loss || !spec.loss_grad) throw DomainError("ERMSpec: loss callables unset");
}

// f(x) = sum_i loss(x; rec_i) + (alpha_reg / 2) ||x||^2 and its gradient.
double erm_objective(const ERMSpec& spec, std::span<const double> x) {
  double f = 0.0;
  for (const auto& rec : spec.records) f += spec.loss(x, rec);
  for (double xi : x) f += 0.5 * spec.alpha_reg * xi * xi;
  return f;
}

void erm_gradient(const ERMSpec& spec, std::span<const double> x, std::span<double> out) {
  for (double& o : out) o = 0.0;
  for (const auto& rec : spec.records) spec.loss_grad(x, rec, out);
  for (std::size_t i = 0; i < x.size(); ++i) out[i] += spec.alpha_reg * x[i];
}

// Gradient descent with backtracking, run for a fixed iteration budget that
// does not depend on the data values.
std::vector<double> erm_mode(const ERMSpec& spec) {
  const int d = spec.dim();
  std::vector<double> x(d, 0.0), grad(d), trial(d);
  double fx = erm_objective(spec, x);
  for (int it = 0; it < kOptimizerBudget; ++it) {
    erm_gradient(spec, x, grad);
    double grad_sq = 0.0;
    for (double g : grad) grad_sq += g * g;
    double step = 1.0;
    for (int bt = 0; bt < 60; ++bt) {
      for (int i = 0; i < d; ++i) trial[i] = x[i] - step * grad[i];
      const double ft = erm_objective(spec, trial);
      if (ft <= fx - 1e-4 * step * grad_sq) {  // Armijo
        x = trial;
        fx = ft;
        break;
      }
      step *= 0.5;
    }
  }
  erm_gradient(spec, x, grad);
  if (norm2(grad) >= kModeTolerance) {
    throw NoModeError("build_erm_target: optimizer did not reach gradient norm < 1e-8");
  }
  return x;
}

}  // namespace

StronglyConcaveTarget build_erm_target(const ERMSpec& spec,
                                       std::optional<std::vector<double>> mode_hint) {
  erm_check(spec);
  const int d = spec.dim();
  const double n = static_cast<double>(spec.records.size());
  const double scale = spec.eps / (2.0 * spec.delta_sens);
  std::vector<double> mode = mode_hint ? std::move(*mode_hint) : erm_mode(spec);
  if (static_cast<int>(mode.size()) != d) {
    throw DomainError("build_erm_target: mode dimension mismatch");
  }
  ERMSpec captured = spec;
  auto utility = [captured, scale](std::span<const double> x) {
    return -scale * erm_objective(captured, x);
  };
  return make_strongly_concave(std::move(utility), d, scale * spec.alpha_reg,
                               scale * (n * spec.l_loss + spec.alpha_reg), std::move(mode));
}

KNGTarget kng_target_from_erm(const ERMSpec& spec,
                              std::optional<std::vector<double>> mode_hint) {
  erm_check(spec);
  const int d = spec.dim();
  KNGTarget t;
  ERMSpec captured = spec;
  t.gradient = [captured](std::span<const double> x, std::span<double> out) {
    erm_gradient(captured, x, out);
  };
  t.dimension = d;
  t.alpha = spec.alpha_reg;
  t.l_smooth = static_cast<double>(spec.records.size()) * spec.l_loss + spec.alpha_reg;
  t.minimizer = mode_hint ? std::move(*mode_hint) : erm_mode(spec);
  if (static_cast<int>(t.minimizer.size()) != d) {
    throw DomainError("kng_target_from_erm: mode dimension mismatch");
  }
  return t;
}

}  // namespace pars
