// pars: samplers with data-independent runtime for differentially private
// mechanisms, plus the accounting and certification tooling around them.
//
// Subcommands:
//   account    eps(delta) / delta(eps) for a runtime bound R, f_R curve CSV
//   sample     run a configured sampler, write samples + runtimes CSV
//   verify     run the statistical certification suite, write JSON reports
//   attack     simulate runtime observations and write tradeoff-curve CSVs
//   reproduce  emit the conversion table and the exact-vs-f_R curve data
//
// Exit codes: 0 success, 1 verification failure, 2 bad input.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pars/accounting.hpp"
#include "pars/csv.hpp"
#include "pars/distributions.hpp"
#include "pars/error.hpp"
#include "pars/harness.hpp"

namespace {

namespace fs = std::filesystem;

struct CommonArgs {
  std::string out_dir;
  std::string config_path;
  std::uint64_t seed = 0;
  bool seed_set = false;
};

fs::path ensure_out_dir(const std::string& dir) {
  const fs::path path(dir);
  std::error_code ec;
  fs::create_directories(path, ec);
  if (ec) throw pars::ConfigError("cannot create output directory " + dir);
  return path;
}

void append_curve(std::vector<pars::CurveRow>& rows, const pars::TradeoffCurve& curve,
                  const std::string& source) {
  for (const auto& [alpha, beta] : curve.vertices()) rows.push_back({alpha, beta, source});
}

std::vector<pars::CurveRow> f_r_rows(double r, const std::string& source) {
  const pars::RBound bound(r);
  std::vector<pars::CurveRow> rows;
  for (int i = 0; i <= 400; ++i) {
    const double alpha = i / 400.0;
    rows.push_back({alpha, pars::f_R(bound, alpha), source});
  }
  return rows;
}

int run_account(double r, std::optional<double> eps, std::optional<double> delta,
                const std::string& out_dir) {
  const pars::RBound bound(r);
  if (delta) {
    std::printf("eps(delta=%s) = %s\n", pars::format_double(*delta).c_str(),
                pars::format_double(pars::eps_of_delta(bound, *delta)).c_str());
  }
  if (eps) {
    std::printf("delta(eps=%s) = %s\n", pars::format_double(*eps).c_str(),
                pars::format_double(pars::delta_of_eps(bound, *eps)).c_str());
  }
  if (!eps && !delta) {
    std::printf("delta(eps=0) = %s\n",
                pars::format_double(pars::delta_at_eps_zero(bound)).c_str());
  }
  if (!out_dir.empty()) {
    const fs::path dir = ensure_out_dir(out_dir);
    pars::write_curve_csv((dir / "f_R_curve.csv").string(), f_r_rows(r, "f_R"));
    std::printf("wrote %s\n", (dir / "f_R_curve.csv").string().c_str());
  }
  return 0;
}

int run_sample(pars::ExperimentConfig cfg) {
  const fs::path dir = ensure_out_dir(cfg.out_dir);
  const pars::SampleColumns cols = pars::run_experiment(cfg);
  const fs::path path = dir / (cfg.id + "_samples.csv");
  pars::write_samples_csv(path.string(), cols);
  std::printf("wrote %s (%zu rows)\n", path.string().c_str(), cols.runtimes.size());
  return 0;
}

int run_verify(const std::string& suite, std::uint64_t seed, const std::string& out_dir) {
  pars::SuiteOptions opt;
  opt.seed = seed;
  if (suite == "fast") {
    opt.fast = true;
  } else if (suite != "full") {
    throw pars::ConfigError("--suite must be 'full' or 'fast'");
  }
  const std::vector<pars::TestReport> reports = pars::run_verification_suite(opt);
  bool all_pass = true;
  for (const pars::TestReport& r : reports) {
    all_pass = all_pass && r.pass;
    std::printf("%-36s %s  statistic=%.6g%s\n", r.test.c_str(), r.pass ? "PASS" : "FAIL",
                r.statistic,
                std::isnan(r.pvalue) ? "" : ("  pvalue=" + pars::format_double(r.pvalue)).c_str());
  }
  if (!out_dir.empty()) {
    const fs::path dir = ensure_out_dir(out_dir);
    std::ofstream out(dir / "reports.json", std::ios::binary);
    out << pars::reports_to_json(reports);
    std::printf("wrote %s\n", (dir / "reports.json").string().c_str());
  }
  std::printf("%s (%zu checks)\n", all_pass ? "ALL PASS" : "FAILURES PRESENT",
              reports.size());
  return all_pass ? 0 : 1;
}

int run_attack(double p, double q, std::uint64_t n, std::uint64_t seed,
               const std::string& out_dir) {
  pars::RngStream rng_a(seed, 0), rng_b(seed, 1);
  std::vector<std::uint64_t> a(n), b(n);
  for (auto& v : a) {
    v = static_cast<std::uint64_t>(pars::geometric_sample({p}, rng_a));
  }
  for (auto& v : b) {
    v = static_cast<std::uint64_t>(pars::geometric_sample({q}, rng_b));
  }
  const pars::AttackReport report = pars::attack_tradeoff(a, b, p, q);

  const fs::path dir = ensure_out_dir(out_dir);
  std::vector<pars::CurveRow> rows;
  append_curve(rows, report.exact, "exact");
  for (const auto& [alpha, beta] : report.empirical) rows.push_back({alpha, beta, "empirical"});
  for (const pars::CurveRow& r : f_r_rows(report.r_value, "f_R")) rows.push_back(r);
  pars::write_curve_csv((dir / "tradeoff.csv").string(), rows);

  pars::CsvWriter ratio((dir / "logratio.csv").string(), {"k", "log_ratio"});
  for (const auto& [k, v] : report.log_pmf_ratio) {
    ratio.cell(k).cell(v);
    ratio.end_row();
  }

  std::printf("R = %s\n", pars::format_double(report.r_value).c_str());
  std::printf("min slack exact - f_R  = %s\n",
              pars::format_double(report.min_slack_exact_vs_f_r).c_str());
  std::printf("max gap exact - f_R    = %s\n",
              pars::format_double(report.max_gap_exact_vs_f_r).c_str());
  std::printf("sup gap empirical      = %s\n",
              pars::format_double(report.sup_gap_empirical).c_str());
  std::printf("wrote %s and %s\n", (dir / "tradeoff.csv").string().c_str(),
              (dir / "logratio.csv").string().c_str());
  return 0;
}

int run_reproduce(const std::string& out_dir) {
  const fs::path dir = ensure_out_dir(out_dir);
  const std::vector<pars::ConversionRow> rows = pars::conversion_table();
  pars::write_conversion_csv((dir / "conversion_table.csv").string(), rows);
  for (const pars::ConversionRow& row : rows) {
    std::printf("R=%-4g delta=%-8g eps=%.6g\n", row.r_value, row.delta, row.eps);
  }

  // Exact tradeoff curves against f_R for the two worked (p, q) pairs.
  const struct {
    const char* file;
    double q;
  } cases[] = {{"tradeoff_q01.csv", 0.1}, {"tradeoff_q06.csv", 0.6}};
  for (const auto& c : cases) {
    const double p = 1.0 - (1.0 - c.q) * (1.0 - c.q);  // R = 2 construction
    std::vector<pars::CurveRow> rows2;
    append_curve(rows2, pars::exact_geometric_tradeoff(p, c.q), "exact");
    for (const pars::CurveRow& r : f_r_rows(2.0, "f_R")) rows2.push_back(r);
    pars::write_curve_csv((dir / c.file).string(), rows2);
  }
  std::printf("wrote conversion_table.csv, tradeoff_q01.csv, tradeoff_q06.csv under %s\n",
              dir.string().c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"samplers with data-independent runtime for DP mechanisms"};
  app.require_subcommand(1);

  // account
  auto* account = app.add_subcommand("account", "runtime privacy accounting for a bound R");
  double acc_r = 2.0;
  std::optional<double> acc_eps, acc_delta;
  std::string acc_out;
  account->add_option("--R", acc_r, "runtime bound R >= 1")->required();
  account->add_option("--eps", acc_eps, "query delta(eps)");
  account->add_option("--delta", acc_delta, "query eps(delta)");
  account->add_option("--out", acc_out, "directory for the f_R curve CSV");

  // sample
  auto* sample = app.add_subcommand("sample", "run a sampler and write samples CSV");
  std::string smp_sampler = "squeeze", smp_target = "gaussian-demo", smp_out, smp_config;
  std::uint64_t smp_n = 1000, smp_seed = 0;
  bool smp_seed_set = false;
  sample->add_option("--sampler", smp_sampler, "simple|truncated|wait|squeeze|adaptive");
  sample->add_option("--target", smp_target, "gaussian-demo|kng-demo|ridge-erm|example4-lipschitz");
  sample->add_option("--n", smp_n, "number of replicates / published samples");
  sample->add_option("--seed", smp_seed, "base seed (required)");
  sample->add_option("--out", smp_out, "output directory");
  sample->add_option("--config", smp_config, "JSON config file");

  // verify
  auto* verify = app.add_subcommand("verify", "run the certification suite");
  std::string ver_suite = "full", ver_out;
  std::uint64_t ver_seed = 0;
  bool ver_seed_set = false;
  bool ver_fresh = false;
  verify->add_option("--suite", ver_suite, "full|fast");
  verify->add_option("--seed", ver_seed, "suite seed (required unless --fresh-seed)");
  verify->add_flag("--fresh-seed", ver_fresh,
                   "draw a seed from system entropy and report it (exploration)");
  verify->add_option("--out", ver_out, "directory for reports.json");

  // attack
  auto* attack = app.add_subcommand("attack", "likelihood-ratio attack on runtimes");
  double atk_p = 0.19, atk_q = 0.1;
  std::uint64_t atk_n = 100000, atk_seed = 0;
  bool atk_seed_set = false;
  std::string atk_out = "pars_out";
  attack->add_option("--p", atk_p, "acceptance probability, database A");
  attack->add_option("--q", atk_q, "acceptance probability, database B");
  attack->add_option("--n", atk_n, "runtimes per side");
  attack->add_option("--seed", atk_seed, "simulation seed (required)");
  attack->add_option("--out", atk_out, "output directory");

  // reproduce
  auto* reproduce = app.add_subcommand("reproduce", "emit conversion table and curve data");
  std::string rep_out = "pars_out";
  reproduce->add_option("--out", rep_out, "output directory");

  try {
    app.parse(argc, argv);
    smp_seed_set = sample->count("--seed") > 0;
    ver_seed_set = verify->count("--seed") > 0;
    atk_seed_set = attack->count("--seed") > 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (account->parsed()) return run_account(acc_r, acc_eps, acc_delta, acc_out);
    if (sample->parsed()) {
      pars::ExperimentConfig cfg;
      if (!smp_config.empty()) cfg = pars::experiment_config_from_json_file(smp_config);
      if (sample->count("--sampler") || smp_config.empty()) cfg.sampler = smp_sampler;
      if (sample->count("--target") || smp_config.empty()) cfg.target = smp_target;
      if (sample->count("--n") || smp_config.empty()) cfg.replicates = smp_n;
      if (sample->count("--out")) cfg.out_dir = smp_out;
      if (smp_seed_set) {
        cfg.seed = smp_seed;
      } else if (smp_config.empty()) {
        throw pars::ConfigError("sample: --seed is required (or set seed in --config)");
      }
      return run_sample(std::move(cfg));
    }
    if (verify->parsed()) {
      if (ver_fresh) {
        std::random_device entropy;
        ver_seed = (static_cast<std::uint64_t>(entropy()) << 32) ^ entropy();
        std::printf("fresh seed: %llu\n", static_cast<unsigned long long>(ver_seed));
      } else if (!ver_seed_set) {
        throw pars::ConfigError("verify: --seed is required (or pass --fresh-seed)");
      }
      return run_verify(ver_suite, ver_seed, ver_out);
    }
    if (attack->parsed()) {
      if (!atk_seed_set) throw pars::ConfigError("attack: --seed is required");
      return run_attack(atk_p, atk_q, atk_n, atk_seed, atk_out);
    }
    if (reproduce->parsed()) return run_reproduce(rep_out);
  } catch (const pars::ConfigError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const pars::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
