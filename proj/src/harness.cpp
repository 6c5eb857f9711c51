#include "pars/harness.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "pars/csv.hpp"
#include "pars/distributions.hpp"
#include "pars/error.hpp"
#include "pars/numeric.hpp"
#include "pars/problems.hpp"
#include "pars/samplers.hpp"

namespace pars {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

TestReport pvalue_report(std::string name, const ChiSquareResult& chi, double significance,
                         std::uint64_t n, std::uint64_t seed) {
  TestReport r;
  r.test = std::move(name);
  r.statistic = chi.statistic;
  r.threshold = significance;
  r.pvalue = chi.pvalue;
  r.pass = chi.pvalue > significance;
  r.n = n;
  r.seed = seed;
  return r;
}

TestReport statistic_report(std::string name, double statistic, double threshold,
                            std::uint64_t n, std::uint64_t seed) {
  TestReport r;
  r.test = std::move(name);
  r.statistic = statistic;
  r.threshold = threshold;
  r.pvalue = kNaN;
  r.pass = statistic <= threshold;
  r.n = n;
  r.seed = seed;
  return r;
}

// Piecewise-linear evaluation of an (alpha desc) polyline.
double polyline_at(std::span<const std::pair<double, double>> v, double alpha) {
  if (alpha >= v.front().first) return v.front().second;
  if (alpha <= v.back().first) return v.back().second;
  const auto it = std::lower_bound(
      v.begin(), v.end(), alpha,
      [](const std::pair<double, double>& p, double a) { return p.first > a; });
  const auto& [a0, b0] = *it;
  const auto& [a1, b1] = *(it - 1);
  if (a1 == a0) return b0;
  const double t = (alpha - a0) / (a1 - a0);
  return b0 + t * (b1 - b0);
}

}  // namespace

TestReport certify_runtime_law(std::span<const std::uint64_t> runtimes, double p,
                               const CertifyOptions& opt) {
  const ChiSquareResult chi = chi_square_geometric_gof(runtimes, p, opt.p_estimated);
  return pvalue_report("runtime_law_gof", chi, opt.significance, runtimes.size(), opt.seed);
}

TestReport certify_independence(std::span<const std::uint64_t> runtimes_a,
                                std::span<const std::uint64_t> runtimes_b,
                                const CertifyOptions& opt) {
  const ChiSquareResult chi = chi_square_two_sample(runtimes_a, runtimes_b);
  return pvalue_report("runtime_independence", chi, opt.significance,
                       runtimes_a.size() + runtimes_b.size(), opt.seed);
}

AttackReport attack_tradeoff(std::span<const std::uint64_t> runtimes_a,
                             std::span<const std::uint64_t> runtimes_b, double p, double q) {
  if (!(p > 0.0) || !(p < 1.0) || !(q > 0.0) || !(q < 1.0)) {
    throw DomainError("attack_tradeoff: p, q must lie in (0, 1)");
  }
  if (runtimes_a.empty() || runtimes_b.empty()) {
    throw InsufficientDataError("attack_tradeoff: empty runtime sample");
  }
  // Normalize to p >= q; the report is oriented that way.
  std::vector<std::uint64_t> a(runtimes_a.begin(), runtimes_a.end());
  std::vector<std::uint64_t> b(runtimes_b.begin(), runtimes_b.end());
  if (p < q) {
    std::swap(p, q);
    std::swap(a, b);
  }

  AttackReport report;
  report.exact = exact_geometric_tradeoff(p, q);
  report.r_value = p == q ? 1.0 : std::log1p(-p) / std::log1p(-q);

  // Plug-in threshold tests: reject the p-sample when T >= t.
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  const std::uint64_t t_max = std::max(a.back(), b.back()) + 1;
  report.empirical.reserve(t_max + 1);
  for (std::uint64_t t = 1; t <= t_max; ++t) {
    const double alpha =
        static_cast<double>(a.end() - std::lower_bound(a.begin(), a.end(), t)) / na;
    const double beta =
        static_cast<double>(std::lower_bound(b.begin(), b.end(), t) - b.begin()) / nb;
    report.empirical.emplace_back(alpha, beta);
  }
  report.empirical.emplace_back(0.0, 1.0);

  // Gaps on a grid extended by the exact curve's vertices.
  const RBound r_bound(std::max(1.0, report.r_value));
  std::vector<double> grid;
  for (int i = 0; i <= 1000; ++i) grid.push_back(i / 1000.0);
  for (const auto& [alpha, beta] : report.exact.vertices()) grid.push_back(alpha);
  double max_gap = -std::numeric_limits<double>::infinity();
  double min_slack = std::numeric_limits<double>::infinity();
  double sup_emp = 0.0;
  for (double alpha : grid) {
    const double exact_beta = report.exact(alpha);
    const double slack = exact_beta - f_R(r_bound, alpha);
    max_gap = std::max(max_gap, slack);
    min_slack = std::min(min_slack, slack);
    sup_emp = std::max(sup_emp, std::abs(polyline_at(report.empirical, alpha) - exact_beta));
  }
  report.max_gap_exact_vs_f_r = max_gap;
  report.min_slack_exact_vs_f_r = min_slack;
  report.sup_gap_empirical = sup_emp;

  // Empirical log pmf ratio per runtime value, where both samples have mass.
  std::map<std::uint64_t, std::pair<double, double>> counts;
  for (std::uint64_t v : a) counts[v].first += 1.0;
  for (std::uint64_t v : b) counts[v].second += 1.0;
  for (const auto& [k, c] : counts) {
    if (c.first > 0.0 && c.second > 0.0) {
      report.log_pmf_ratio.emplace_back(static_cast<std::int64_t>(k),
                                        std::log((c.first / na) / (c.second / nb)));
    }
  }
  return report;
}

std::vector<ConversionRow> conversion_table() {
  std::vector<ConversionRow> rows;
  for (double r : {2.0, 1.1}) {
    const RBound bound(r);
    for (int k = 1; k <= 6; ++k) {
      const double delta = std::pow(10.0, -k);
      rows.push_back({r, delta, eps_of_delta(bound, delta)});
    }
  }
  return rows;
}

std::string reports_to_json(std::span<const TestReport> reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const TestReport& r : reports) {
    nlohmann::json j;
    j["test"] = r.test;
    j["statistic"] = r.statistic;
    j["pvalue"] = r.pvalue;  // serialized as null when NaN
    j["pass"] = r.pass;
    j["n"] = r.n;
    j["seed"] = r.seed;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

namespace {

struct RunBatch {
  std::vector<double> values;  // first coordinate only, for 1-d KS checks
  std::vector<std::uint64_t> runtimes;
};

template <typename RunOne>
RunBatch collect(std::uint64_t n, std::uint64_t seed, std::uint64_t stream_base,
                 const RunOne& run_one) {
  RunBatch batch;
  batch.values.resize(n);
  batch.runtimes.resize(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    RngStream rng(seed, stream_base + i);
    const SampleTrace trace = run_one(rng);
    batch.values[i] = trace.value.empty() ? 0.0 : trace.value[0];
    batch.runtimes[i] = trace.runtime;
  }
  return batch;
}

// Exact pmf of the additive-wait construction: keep a Geom(q) draw with
// probability p/q, else add an independent Geom(p) wait. Evaluated by direct
// convolution; equals the Geom(p) pmf identically.
double memoryless_mixture_pmf(double p, double q, std::int64_t t) {
  const GeometricLaw gp{p}, gq{q};
  double v = (p / q) * geometric_pmf(gq, t);
  double conv = 0.0;
  for (std::int64_t x = 1; x < t; ++x) {
    conv += geometric_pmf(gq, x) * geometric_pmf(gp, t - x);
  }
  return v + (1.0 - p / q) * conv;
}

}  // namespace

std::vector<TestReport> run_verification_suite(const SuiteOptions& opt) {
  std::vector<TestReport> reports;
  const std::uint64_t seed = opt.seed;
  const std::uint64_t n_big = opt.fast ? 20000 : 100000;
  CertifyOptions certify;
  certify.seed = seed;

  // 1. Inversion sampler obeys the exact geometric pmf (p-value test).
  {
    RngStream rng(seed, 1);
    std::vector<std::uint64_t> draws(n_big);
    for (auto& v : draws) {
      v = static_cast<std::uint64_t>(geometric_sample(GeometricLaw{0.25}, rng));
    }
    TestReport r = certify_runtime_law(draws, 0.25, certify);
    r.test = "geometric_sampler_gof";
    reports.push_back(r);
  }

  // 2/3. Squeeze sampler: runtime law Geom(c_L/c_U) and exact output.
  {
    const SamplingProblem prob = gaussian_demo();
    const RunBatch batch = collect(n_big, seed, 1ull << 20, [&](RngStream& rng) {
      return squeeze_reject(prob.target, prob.envelope, rng);
    });
    TestReport r = certify_runtime_law(batch.runtimes, prob.squeeze_rate, certify);
    r.test = "squeeze_runtime_law";
    reports.push_back(r);
    if (!opt.fast) {
      const double d = ks_statistic(batch.values, prob.output_cdf);
      reports.push_back(statistic_report("squeeze_output_ks", d, 0.01, n_big, seed));
    }
  }

  // 4. Simple rejection runtime is geometric (parameter estimated).
  {
    const SamplingProblem prob = gaussian_demo();
    const std::uint64_t n = opt.fast ? 10000 : 30000;
    const RunBatch batch = collect(n, seed, 2ull << 20, [&](RngStream& rng) {
      return simple_reject(prob.target, prob.envelope, rng);
    });
    double mean = 0.0;
    for (std::uint64_t v : batch.runtimes) mean += static_cast<double>(v);
    mean /= static_cast<double>(n);
    CertifyOptions est = certify;
    est.p_estimated = true;
    TestReport r = certify_runtime_law(batch.runtimes, 1.0 / mean, est);
    r.test = "simple_runtime_geometric";
    reports.push_back(r);
  }

  // 5. Additive wait: Geom(1/2) loop with c_worst = 5 composes to Geom(1/5).
  {
    const SamplingProblem prob = coin_demo(2.0);
    const RunBatch batch = collect(n_big, seed, 3ull << 20, [&](RngStream& rng) {
      return additive_wait_reject(prob.wait->normalized_target, prob.wait->envelope,
                                  prob.wait->c_current, 5.0, rng);
    });
    TestReport r = certify_runtime_law(batch.runtimes, 0.2, certify);
    r.test = "wait_runtime_law";
    reports.push_back(r);
  }

  // 6. Memoryless identity, checked by direct convolution (deterministic).
  {
    double worst = 0.0;
    for (std::int64_t t = 1; t <= 100; ++t) {
      worst = std::max(worst, std::abs(memoryless_mixture_pmf(0.2, 0.5, t) -
                                       geometric_pmf(GeometricLaw{0.2}, t)));
    }
    reports.push_back(statistic_report("memoryless_identity", worst, 1e-12, 100, seed));
  }

  // 7. Truncated sampler: constant runtime and bounded none-accepted rate.
  {
    const SamplingProblem prob = coin_demo(10.0);  // true acceptance exactly 0.1
    const double alpha0 = 0.1, delta = 1e-3;
    const std::uint64_t want = truncated_iteration_count(alpha0, delta);
    std::uint64_t runtime_mismatches = 0, none_accepted = 0;
    for (std::uint64_t i = 0; i < n_big; ++i) {
      RngStream rng(seed, (4ull << 20) + i);
      const SampleTrace trace =
          truncated_reject(prob.target, prob.envelope, alpha0, delta, rng);
      if (trace.runtime != want) ++runtime_mismatches;
      if (!trace.accepted) ++none_accepted;
    }
    reports.push_back(statistic_report("truncated_constant_runtime",
                                       static_cast<double>(runtime_mismatches), 0.0, n_big,
                                       seed));
    const double freq = static_cast<double>(none_accepted) / static_cast<double>(n_big);
    const double margin =
        3.0 * std::sqrt(delta * (1.0 - delta) / static_cast<double>(n_big));
    reports.push_back(
        statistic_report("truncated_none_accepted_rate", freq, delta + margin, n_big, seed));
  }

  // 8. Adjacent ridge-ERM databases share the squeeze runtime law.
  {
    const SamplingProblem base = ridge_erm_demo(false);
    const SamplingProblem adj = ridge_erm_demo(true);
    const RunBatch run_a = collect(n_big, seed, 5ull << 20, [&](RngStream& rng) {
      return squeeze_reject(base.target, base.envelope, rng);
    });
    const RunBatch run_b = collect(n_big, seed, 6ull << 20, [&](RngStream& rng) {
      return squeeze_reject(adj.target, adj.envelope, rng);
    });
    TestReport r = certify_independence(run_a.runtimes, run_b.runtimes, certify);
    r.test = "erm_adjacent_runtime_independence";
    reports.push_back(r);
  }

  // 8b. Endpoint-grid compatibility constants for the Lipschitz benchmark:
  // five points including the endpoints give slack 7/8 (publish e^-1.75),
  // fifteen give 1/4 (publish e^-0.5).
  {
    const LogHolderTarget target = example4_lipschitz();
    const GridApproximation five(target, 5, GridMode::endpoint);
    const GridApproximation fifteen(target, 15, GridMode::endpoint);
    const double worst = std::max(std::abs(five.r_hat() - 0.875),
                                  std::abs(fifteen.r_hat() - 0.25));
    reports.push_back(statistic_report("adaptive_endpoint_grid_slack", worst, 1e-12, 2,
                                       seed));
  }

  if (opt.fast) return reports;

  // 9. Adaptive sampler: per-iteration publish frequency is exp(-2 r_hat).
  {
    const LogHolderTarget target = example4_lipschitz();
    RefinementSchedule fixed;
    fixed.initial_m = 5;
    fixed.doubling_interval = std::numeric_limits<std::uint64_t>::max();
    RngStream rng(seed, 7ull << 20);
    const AdaptiveRun run = adaptive_sample(target, 26000, fixed, rng);
    const LevelStats& level = run.levels.front();
    const double freq =
        static_cast<double>(level.publishes) / static_cast<double>(level.iterations);
    const double expected = std::exp(-2.0 * level.r_hat);
    reports.push_back(statistic_report("adaptive_publish_frequency",
                                       std::abs(freq - expected), 0.01, level.iterations,
                                       seed));
  }

  // 10. Two log-Holder targets with the same declared (s, H) and schedule
  // give exchangeable inter-publish runtimes.
  {
    RefinementSchedule schedule;
    schedule.initial_m = 5;
    schedule.doubling_interval = 2000;
    RngStream rng_a(seed, 8ull << 20);
    RngStream rng_b(seed, 9ull << 20);
    const AdaptiveRun run_a = adaptive_sample(example4_lipschitz(), 10000, schedule, rng_a);
    const AdaptiveRun run_b =
        adaptive_sample(example4_lipschitz_alt(), 10000, schedule, rng_b);
    TestReport r = certify_independence(run_a.runtimes, run_b.runtimes, certify);
    r.test = "adaptive_runtime_independence";
    reports.push_back(r);
  }

  // 11. Adaptive published samples match the trapezoid-normalized target.
  {
    const LogHolderTarget target = example4_lipschitz();
    RefinementSchedule schedule;
    schedule.initial_m = 5;
    schedule.doubling_interval = 64;
    RngStream rng(seed, 10ull << 20);
    const AdaptiveRun run = adaptive_sample(target, n_big, schedule, rng);
    const NumericCdf1D oracle(
        [](double x) { return -3.0 * std::abs(x - 0.5) + 0.2 * std::sin(20.0 * x); }, 0.0,
        1.0, 100000);
    std::vector<double> xs(run.samples.size());
    for (std::size_t i = 0; i < run.samples.size(); ++i) xs[i] = run.samples[i][0];
    const double d = ks_statistic(std::move(xs), [&oracle](double x) { return oracle(x); });
    reports.push_back(statistic_report("adaptive_output_ks", d, 0.01, n_big, seed));
  }

  // 12. The empirical attack curve converges to the exact one.
  {
    RngStream rng(seed, 11ull << 20);
    std::vector<std::uint64_t> a(n_big), b(n_big);
    for (auto& v : a) v = static_cast<std::uint64_t>(geometric_sample(GeometricLaw{0.19}, rng));
    for (auto& v : b) v = static_cast<std::uint64_t>(geometric_sample(GeometricLaw{0.1}, rng));
    const AttackReport attack = attack_tradeoff(a, b, 0.19, 0.1);
    reports.push_back(
        statistic_report("attack_curve_convergence", attack.sup_gap_empirical, 0.02,
                         2 * n_big, seed));
  }

  return reports;
}

ExperimentConfig experiment_config_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config: invalid JSON: ") + e.what());
  }
  ExperimentConfig cfg;
  try {
    if (j.contains("id")) cfg.id = j.at("id").get<std::string>();
    if (j.contains("sampler")) cfg.sampler = j.at("sampler").get<std::string>();
    if (j.contains("target")) cfg.target = j.at("target").get<std::string>();
    if (j.contains("erm_spec")) cfg.erm_spec_path = j.at("erm_spec").get<std::string>();
    if (j.contains("n")) cfg.replicates = j.at("n").get<std::uint64_t>();
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("out")) cfg.out_dir = j.at("out").get<std::string>();
    if (j.contains("truncated")) {
      const auto& t = j.at("truncated");
      if (t.contains("alpha0")) cfg.trunc_alpha0 = t.at("alpha0").get<double>();
      if (t.contains("delta")) cfg.trunc_delta = t.at("delta").get<double>();
    }
    if (j.contains("wait") && j.at("wait").contains("c")) {
      cfg.wait_c = j.at("wait").at("c").get<double>();
    }
    if (j.contains("adaptive")) {
      const auto& a = j.at("adaptive");
      if (a.contains("initial_m")) cfg.schedule.initial_m = a.at("initial_m").get<int>();
      if (a.contains("doubling_interval")) {
        cfg.schedule.doubling_interval = a.at("doubling_interval").get<std::uint64_t>();
      }
      if (a.contains("max_evals")) {
        cfg.schedule.max_evals = a.at("max_evals").get<std::uint64_t>();
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config: malformed field: ") + e.what());
  }
  return cfg;
}

ExperimentConfig experiment_config_from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return experiment_config_from_json_text(buf.str());
}

namespace {

SampleColumns run_adaptive_experiment(const ExperimentConfig& cfg) {
  if (cfg.target != "example4-lipschitz") {
    throw ConfigError("sampler 'adaptive' expects target 'example4-lipschitz'");
  }
  RngStream rng(cfg.seed, 0);
  const LogHolderTarget target = example4_lipschitz();
  const AdaptiveRun run = adaptive_sample(target, cfg.replicates, cfg.schedule, rng);
  SampleColumns cols;
  cols.dimension = target.dimension();
  cols.values.reserve(run.samples.size());
  for (const auto& s : run.samples) {
    cols.values.insert(cols.values.end(), s.begin(), s.end());
  }
  cols.runtimes = run.runtimes;
  cols.accepted.assign(run.samples.size(), 1);
  return cols;
}

}  // namespace

SampleColumns run_experiment(const ExperimentConfig& cfg) {
  if (cfg.replicates == 0) throw ConfigError("config: n must be >= 1");
  if (cfg.sampler == "adaptive") return run_adaptive_experiment(cfg);
  if (cfg.target == "example4-lipschitz") {
    throw ConfigError("target 'example4-lipschitz' is for the adaptive sampler");
  }

  SamplingProblem prob;
  if (cfg.target == "ridge-erm" && !cfg.erm_spec_path.empty()) {
    const ERMSpec spec = erm_spec_from_json_file(cfg.erm_spec_path);
    const StronglyConcaveTarget t = build_erm_target(spec);
    prob.name = "ridge-erm";
    prob.dimension = spec.dim();
    prob.target = as_target(t);
    prob.envelope = gaussian_envelope(t);
    prob.squeeze_rate = std::pow(t.alpha / t.l_smooth, 0.5 * prob.dimension);
  } else {
    prob = problem_by_name(cfg.target);
  }

  enum class Kind { simple, truncated, wait, squeeze };
  Kind kind;
  if (cfg.sampler == "simple") {
    kind = Kind::simple;
  } else if (cfg.sampler == "truncated") {
    kind = Kind::truncated;
  } else if (cfg.sampler == "wait") {
    kind = Kind::wait;
  } else if (cfg.sampler == "squeeze") {
    kind = Kind::squeeze;
  } else {
    throw ConfigError("unknown sampler '" + cfg.sampler +
                      "' (expected simple, truncated, wait, squeeze, adaptive)");
  }
  if (kind == Kind::squeeze && !prob.envelope.squeeze) {
    throw ConfigError("target '" + prob.name + "' has no squeeze density");
  }
  if (kind == Kind::wait && !prob.wait) {
    throw ConfigError("target '" + prob.name + "' has no normalized form for 'wait'");
  }

  const std::uint64_t n = cfg.replicates;
  const int d = prob.dimension;
  SampleColumns cols;
  cols.dimension = d;
  cols.values.resize(n * static_cast<std::uint64_t>(d));
  cols.runtimes.resize(n);
  cols.accepted.resize(n);

  const auto run_one = [&](std::uint64_t i) {
    RngStream rng(cfg.seed, i);
    SampleTrace trace;
    switch (kind) {
      case Kind::simple:
        trace = simple_reject(prob.target, prob.envelope, rng);
        break;
      case Kind::truncated:
        trace = truncated_reject(prob.target, prob.envelope, cfg.trunc_alpha0,
                                 cfg.trunc_delta, rng);
        break;
      case Kind::wait:
        trace = additive_wait_reject(prob.wait->normalized_target, prob.wait->envelope,
                                     prob.wait->c_current, cfg.wait_c, rng);
        break;
      case Kind::squeeze:
        trace = squeeze_reject(prob.target, prob.envelope, rng);
        break;
    }
    for (int k = 0; k < d; ++k) cols.values[i * d + k] = trace.value[k];
    cols.runtimes[i] = trace.runtime;
    cols.accepted[i] = trace.accepted ? 1 : 0;
  };

  const std::uint64_t hw = std::thread::hardware_concurrency();
  const unsigned n_threads = static_cast<unsigned>(
      std::min<std::uint64_t>({std::max<std::uint64_t>(1, hw), 8, n}));
  if (n_threads <= 1) {
    for (std::uint64_t i = 0; i < n; ++i) run_one(i);
    return cols;
  }
  std::vector<std::thread> pool;
  std::exception_ptr first_error;
  std::mutex error_mutex;
  for (unsigned t = 0; t < n_threads; ++t) {
    pool.emplace_back([&, t] {
      const std::uint64_t lo = n * t / n_threads;
      const std::uint64_t hi = n * (t + 1) / n_threads;
      try {
        for (std::uint64_t i = lo; i < hi; ++i) run_one(i);
      } catch (...) {
        std::scoped_lock lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
  return cols;
}

void write_samples_csv(const std::string& path, const SampleColumns& cols) {
  std::vector<std::string> header = {"index"};
  for (int k = 0; k < cols.dimension; ++k) header.push_back("x" + std::to_string(k));
  header.emplace_back("runtime");
  header.emplace_back("accepted");
  CsvWriter csv(path, header);
  const std::uint64_t n = cols.runtimes.size();
  for (std::uint64_t i = 0; i < n; ++i) {
    csv.cell(i);
    for (int k = 0; k < cols.dimension; ++k) {
      csv.cell(cols.values[i * cols.dimension + k]);
    }
    csv.cell(cols.runtimes[i]);
    csv.cell(static_cast<std::uint64_t>(cols.accepted[i]));
    csv.end_row();
  }
}

void write_curve_csv(const std::string& path, std::span<const CurveRow> rows) {
  CsvWriter csv(path, {"alpha", "beta", "source"});
  for (const CurveRow& r : rows) {
    csv.cell(r.alpha).cell(r.beta).cell(r.source);
    csv.end_row();
  }
}

void write_conversion_csv(const std::string& path, std::span<const ConversionRow> rows) {
  CsvWriter csv(path, {"R", "delta", "eps"});
  for (const ConversionRow& r : rows) {
    csv.cell(r.r_value).cell(r.delta).cell(r.eps);
    csv.end_row();
  }
}

}  // namespace pars
