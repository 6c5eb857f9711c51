#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace pars {

// Outcome of a single harness check. `pvalue` is NaN for checks that compare
// a statistic against a fixed threshold instead of a significance level.
// Invariant kept by the constructors in harness.cpp: `pass` is consistent
// with the statistic/pvalue against the threshold.
struct TestReport {
  std::string test;
  double statistic = 0.0;
  double threshold = 0.0;
  double pvalue = 0.0;
  bool pass = false;
  std::uint64_t n = 0;
  std::uint64_t seed = 0;
};

struct ChiSquareResult {
  double statistic = 0.0;
  int dof = 0;
  double pvalue = 1.0;
};

// Goodness of fit of integer data on {1, 2, ...} against an exact geometric
// pmf. Buckets are the single values 1..K with a tail bucket at the 99.9%
// quantile of Geom(p); buckets whose expected count falls below 5 are merged
// right into the tail, a rule that depends only on (p, n). One degree of
// freedom is dropped when p was estimated from the data.
ChiSquareResult chi_square_geometric_gof(std::span<const std::uint64_t> data, double p,
                                         bool p_estimated = false);

// Two-sample chi-square over the pooled support, single-value buckets merged
// from the right until every pooled expected count reaches 5.
ChiSquareResult chi_square_two_sample(std::span<const std::uint64_t> a,
                                      std::span<const std::uint64_t> b);

// One-sample Kolmogorov-Smirnov statistic against an exact CDF.
double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf);

struct KsTwoSampleResult {
  double statistic = 0.0;
  double pvalue = 1.0;
};

KsTwoSampleResult ks_two_sample(std::vector<double> a, std::vector<double> b);

// (1/2) sum_{k in [lo, hi]} |empirical(k) - pmf(k)| for integer data.
double tv_distance_geometric(std::span<const std::uint64_t> data, double p,
                             std::int64_t lo, std::int64_t hi);

}  // namespace pars
