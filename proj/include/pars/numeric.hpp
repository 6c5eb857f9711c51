#pragma once

#include <functional>
#include <vector>

namespace pars {

// Trapezoid-rule normalization of a 1-d log-density on [lo, hi]: a test
// oracle for published-sample distribution checks, independent of any
// sampler code path.
class NumericCdf1D {
 public:
  NumericCdf1D(const std::function<double(double)>& log_density, double lo, double hi,
               int grid_points);

  double operator()(double x) const;

  // integral of exp(log_density) over [lo, hi]
  double normalizing_constant() const { return z_; }

 private:
  double lo_, hi_, dx_, z_;
  std::vector<double> cdf_;  // cumulative mass at grid nodes, last = 1
};

}  // namespace pars
