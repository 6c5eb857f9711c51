#include "pars/numeric.hpp"

#include <algorithm>
#include <cmath>

#include "pars/error.hpp"

namespace pars {

NumericCdf1D::NumericCdf1D(const std::function<double(double)>& log_density, double lo,
                           double hi, int grid_points)
    : lo_(lo), hi_(hi) {
  if (!(lo < hi)) throw DomainError("NumericCdf1D: need lo < hi");
  if (grid_points < 3) throw DomainError("NumericCdf1D: need at least 3 grid points");
  dx_ = (hi - lo) / (grid_points - 1);
  std::vector<double> logf(grid_points);
  double log_max = -1e308;
  for (int i = 0; i < grid_points; ++i) {
    logf[i] = log_density(lo + i * dx_);
    log_max = std::max(log_max, logf[i]);
  }
  cdf_.resize(grid_points);
  cdf_[0] = 0.0;
  for (int i = 1; i < grid_points; ++i) {
    const double f0 = std::exp(logf[i - 1] - log_max);
    const double f1 = std::exp(logf[i] - log_max);
    cdf_[i] = cdf_[i - 1] + 0.5 * (f0 + f1) * dx_;
  }
  const double total = cdf_.back();
  z_ = total * std::exp(log_max);
  for (double& c : cdf_) c /= total;
  cdf_.back() = 1.0;
}

double NumericCdf1D::operator()(double x) const {
  if (x <= lo_) return 0.0;
  if (x >= hi_) return 1.0;
  const double t = (x - lo_) / dx_;
  const auto i = static_cast<std::size_t>(t);
  const double frac = t - static_cast<double>(i);
  if (i + 1 >= cdf_.size()) return 1.0;
  return cdf_[i] + frac * (cdf_[i + 1] - cdf_[i]);
}

}  // namespace pars
