#include "pars/stats.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "pars/distributions.hpp"
#include "pars/error.hpp"
#include "pars/special.hpp"

namespace pars {
namespace {

constexpr double kMinExpected = 5.0;

ChiSquareResult finish(double statistic, int dof) {
  ChiSquareResult r;
  r.statistic = statistic;
  r.dof = dof;
  r.pvalue = dof >= 1 ? chi_square_pvalue(statistic, dof) : 1.0;
  return r;
}

}  // namespace

ChiSquareResult chi_square_geometric_gof(std::span<const std::uint64_t> data, double p,
                                         bool p_estimated) {
  if (data.size() < 1000) {
    throw InsufficientDataError("chi_square_geometric_gof: need at least 1000 observations");
  }
  const GeometricLaw law{p};
  const double n = static_cast<double>(data.size());
  const std::int64_t quantile_999 = geometric_quantile(law, 0.999);

  // Expected-count bucket layout from (p, n) alone: single values 1..K, then
  // one tail; shrink K until the last single bucket and the tail both hold
  // at least kMinExpected expected observations.
  std::int64_t k_max = quantile_999;
  auto tail_expected = [&](std::int64_t k) {
    // P(T > k) = (1-p)^k
    return n * std::exp(static_cast<double>(k) * std::log1p(-p));
  };
  while (k_max > 1 && (n * geometric_pmf(law, k_max) < kMinExpected ||
                       tail_expected(k_max) < kMinExpected)) {
    --k_max;
  }
  if (k_max < 2) {
    throw InsufficientDataError("chi_square_geometric_gof: too few usable buckets");
  }

  std::vector<double> observed(static_cast<std::size_t>(k_max) + 1, 0.0);  // [1..k_max] + tail
  for (std::uint64_t v : data) {
    if (v < 1) throw DomainError("chi_square_geometric_gof: runtimes start at 1");
    const std::int64_t idx = std::min<std::int64_t>(static_cast<std::int64_t>(v), k_max + 1);
    observed[static_cast<std::size_t>(idx - 1)] += 1.0;
  }
  double statistic = 0.0;
  for (std::int64_t k = 1; k <= k_max; ++k) {
    const double e = n * geometric_pmf(law, k);
    const double o = observed[static_cast<std::size_t>(k - 1)];
    statistic += (o - e) * (o - e) / e;
  }
  const double e_tail = tail_expected(k_max);
  const double o_tail = observed.back();
  statistic += (o_tail - e_tail) * (o_tail - e_tail) / e_tail;

  const int buckets = static_cast<int>(k_max) + 1;
  return finish(statistic, buckets - 1 - (p_estimated ? 1 : 0));
}

ChiSquareResult chi_square_two_sample(std::span<const std::uint64_t> a,
                                      std::span<const std::uint64_t> b) {
  if (a.size() < 1000 || b.size() < 1000) {
    throw InsufficientDataError("chi_square_two_sample: need at least 1000 per sample");
  }
  std::map<std::uint64_t, std::pair<double, double>> counts;
  for (std::uint64_t v : a) counts[v].first += 1.0;
  for (std::uint64_t v : b) counts[v].second += 1.0;

  // Merge adjacent value buckets (ascending) until the pooled count carries
  // at least kMinExpected per group; the remainder folds into the final one.
  std::vector<std::pair<double, double>> buckets;
  double ca = 0.0, cb = 0.0;
  for (const auto& [value, c] : counts) {
    ca += c.first;
    cb += c.second;
    if (ca + cb >= 2.0 * kMinExpected) {
      buckets.emplace_back(ca, cb);
      ca = cb = 0.0;
    }
  }
  if (ca + cb > 0.0) {
    if (buckets.empty()) {
      buckets.emplace_back(ca, cb);
    } else {
      buckets.back().first += ca;
      buckets.back().second += cb;
    }
  }
  if (buckets.size() < 2) {
    throw InsufficientDataError("chi_square_two_sample: pooled support too small");
  }

  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  double statistic = 0.0;
  for (const auto& [oa, ob] : buckets) {
    const double pooled = (oa + ob) / (na + nb);
    const double ea = na * pooled;
    const double eb = nb * pooled;
    statistic += (oa - ea) * (oa - ea) / ea + (ob - eb) * (ob - eb) / eb;
  }
  return finish(statistic, static_cast<int>(buckets.size()) - 1);
}

double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf) {
  if (samples.empty()) throw InsufficientDataError("ks_statistic: empty sample");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max(d, std::abs(f - static_cast<double>(i) / n));
    d = std::max(d, std::abs(static_cast<double>(i + 1) / n - f));
  }
  return d;
}

KsTwoSampleResult ks_two_sample(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw InsufficientDataError("ks_two_sample: empty sample");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  double d = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const double v = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= v) ++i;
    while (j < b.size() && b[j] <= v) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  const double ne = na * nb / (na + nb);
  const double lambda = (std::sqrt(ne) + 0.12 + 0.11 / std::sqrt(ne)) * d;
  return KsTwoSampleResult{d, kolmogorov_tail(lambda)};
}

double tv_distance_geometric(std::span<const std::uint64_t> data, double p,
                             std::int64_t lo, std::int64_t hi) {
  if (data.empty()) throw InsufficientDataError("tv_distance_geometric: empty sample");
  if (lo < 1 || hi < lo) throw DomainError("tv_distance_geometric: bad range");
  const GeometricLaw law{p};
  const double n = static_cast<double>(data.size());
  std::vector<double> counts(static_cast<std::size_t>(hi - lo + 1), 0.0);
  for (std::uint64_t v : data) {
    const std::int64_t k = static_cast<std::int64_t>(v);
    if (k >= lo && k <= hi) counts[static_cast<std::size_t>(k - lo)] += 1.0;
  }
  double tv = 0.0;
  for (std::int64_t k = lo; k <= hi; ++k) {
    tv += std::abs(counts[static_cast<std::size_t>(k - lo)] / n - geometric_pmf(law, k));
  }
  return 0.5 * tv;
}

}  // namespace pars
