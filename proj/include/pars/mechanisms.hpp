#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pars/envelope.hpp"

namespace pars {

// Log-density g that is alpha-strongly concave and L-smooth with its peak at
// `mode`. The curvature bounds pin a Gaussian sandwich whose constant ratio
// (alpha/L)^(d/2) is the same for every database.
struct StronglyConcaveTarget {
  std::function<double(std::span<const double>)> log_density;
  int dimension = 1;
  double alpha = 1.0;
  double l_smooth = 1.0;
  std::vector<double> mode;
  double g_at_mode = 0.0;
};

// Validates alpha <= L and that the gradient vanishes at the mode (central
// finite differences, tolerance 1e-4); throws InvalidStructureError.
StronglyConcaveTarget make_strongly_concave(
    std::function<double(std::span<const double>)> log_density, int dimension,
    double alpha, double l_smooth, std::vector<double> mode);

UnnormalizedTarget as_target(const StronglyConcaveTarget& t);

// proposal N(mode, alpha^-1 I) with log c_U = g(mode) + (d/2) log(2 pi / alpha),
// squeeze  N(mode, L^-1 I)     with log c_L = g(mode) + (d/2) log(2 pi / L).
// The sandwich is probed at construction; failure means the declared (alpha, L)
// are wrong and raises InvalidStructureError.
Envelope gaussian_envelope(const StronglyConcaveTarget& t);

// Gradient-norm target exp(-||grad g(x)||_2) for an alpha-strongly convex,
// L-smooth objective with minimizer x*. Any utility scaling folds into the
// objective's gradient. Sandwiched by K-norm laws with ratio (alpha/L)^d.
struct KNGTarget {
  std::function<void(std::span<const double>, std::span<double>)> gradient;
  int dimension = 1;
  double alpha = 1.0;
  double l_smooth = 1.0;
  std::vector<double> minimizer;
};

UnnormalizedTarget as_target(const KNGTarget& t);

// proposal KNorm(x*, 1/alpha) with log c_U = log d! - d log alpha + log Vol_d,
// squeeze  KNorm(x*, 1/L)     with log c_L = log d! - d log L + log Vol_d.
Envelope knorm_envelope(const KNGTarget& t);

// Empirical-risk specification: per-record loss plus an (alpha_reg/2)||x||^2
// regularizer, utility scaled by eps / (2 delta_sens). The default loss is
// ridge regression on records laid out as [a_0..a_{d-1}, b].
struct ERMSpec {
  std::vector<std::vector<double>> records;
  double alpha_reg = 1.0;
  double l_loss = 1.0;
  double delta_sens = 1.0;
  double eps = 1.0;
  int dimension = 0;  // inferred from records when 0

  std::function<double(std::span<const double>, std::span<const double>)> loss;
  std::function<void(std::span<const double>, std::span<const double>, std::span<double>)>
      loss_grad;

  int dim() const;
};

ERMSpec make_ridge_erm_spec(std::vector<std::vector<double>> records, double alpha_reg,
                            double l_loss, double delta_sens, double eps);

// JSON schema: {records: [[...], ...], alpha_reg, L_loss, delta_sens, eps}
// with ridge losses; an optional "dimension" covers the zero-record case.
ERMSpec erm_spec_from_json_file(const std::string& path);
ERMSpec erm_spec_from_json_text(const std::string& text);

// Assembles the scaled utility (eps / 2 delta_sens) * g_D with constants
// alpha' = eps alpha_reg / (2 delta_sens) and
// L'     = eps (n L_loss + alpha_reg) / (2 delta_sens).
// The mode is taken from `mode_hint` or found by a deterministic
// fixed-iteration-budget descent (budget independent of the data values; this
// sidesteps a data-dependent optimizer runtime, a channel the runtime model
// does not otherwise cover). Raises NoModeError if the final gradient norm
// is not below 1e-8.
StronglyConcaveTarget build_erm_target(const ERMSpec& spec,
                                       std::optional<std::vector<double>> mode_hint = {});

// The same objective viewed through the gradient-norm mechanism:
// alpha = alpha_reg, L = n L_loss + alpha_reg, minimizer shared with
// build_erm_target.
KNGTarget kng_target_from_erm(const ERMSpec& spec,
                              std::optional<std::vector<double>> mode_hint = {});

}  // namespace pars
