#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "pars/distributions.hpp"
#include "pars/error.hpp"
#include "pars/problems.hpp"
#include "pars/samplers.hpp"
#include "pars/special.hpp"
#include "pars/stats.hpp"

using namespace pars;

namespace {

// Independent convolution of the keep-or-add-a-wait mixture:
// with probability p/q keep X2 ~ Geom(q), else X2 + Geom(p).
double mixture_pmf_oracle(double p, double q, int t) {
  auto pmf = [](double prob, int k) { return prob * std::pow(1.0 - prob, k - 1); };
  double conv = 0.0;
  for (int x = 1; x < t; ++x) conv += pmf(q, x) * pmf(p, t - x);
  return (p / q) * pmf(q, t) + (1.0 - p / q) * conv;
}

struct Batch {
  std::vector<double> values;
  std::vector<std::uint64_t> runtimes;
};

template <typename RunOne>
Batch run_many(std::uint64_t n, std::uint64_t seed, const RunOne& run_one) {
  Batch batch;
  batch.values.reserve(n);
  batch.runtimes.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    RngStream rng(seed, i);
    const SampleTrace t = run_one(rng);
    batch.values.push_back(t.value[0]);
    batch.runtimes.push_back(t.runtime);
  }
  return batch;
}

}  // namespace

TEST_CASE("simple rejection accepts immediately when target equals envelope") {
  const SamplingProblem coin = coin_demo(1.0);
  RngStream rng(3);
  for (int i = 0; i < 200; ++i) {
    const SampleTrace t = simple_reject(coin.target, coin.envelope, rng);
    CHECK(t.runtime == 1);
    CHECK(t.accepted);
  }
}

TEST_CASE("simple rejection on the gaussian demo: exact output, geometric runtime") {
  const SamplingProblem prob = gaussian_demo();
  const Batch batch = run_many(100000, 21, [&](RngStream& rng) {
    return simple_reject(prob.target, prob.envelope, rng);
  });

  // Acceptance rate is the mass ratio 1/sqrt(2).
  double mean = 0.0;
  for (auto r : batch.runtimes) mean += static_cast<double>(r);
  mean /= static_cast<double>(batch.runtimes.size());
  CHECK(std::abs(1.0 / mean - prob.simple_accept_rate) < 0.01);

  CHECK(ks_statistic(batch.values, prob.output_cdf) < 0.01);

  // Runtime histogram matches Geom(p_hat) with the parameter estimated.
  CHECK(chi_square_geometric_gof(batch.runtimes, 1.0 / mean, /*p_estimated=*/true).pvalue >
        1e-3);
}

TEST_CASE("simple rejection aborts on a violated envelope") {
  SamplingProblem prob = gaussian_demo();
  prob.envelope.log_cU -= 1.0;  // claimed bound now too small
  RngStream rng(4);
  CHECK_THROWS_AS(
      [&] {
        for (int i = 0; i < 1000; ++i) simple_reject(prob.target, prob.envelope, rng);
      }(),
      EnvelopeViolation);
}

TEST_CASE("truncated iteration counts") {
  CHECK(truncated_iteration_count(0.1, 1e-3) == 66);
  CHECK(truncated_iteration_count(0.5, 0.5) == 1);
  CHECK_THROWS_AS(truncated_iteration_count(0.0, 0.5), DomainError);
  CHECK_THROWS_AS(truncated_iteration_count(1.0, 0.5), DomainError);
  CHECK_THROWS_AS(truncated_iteration_count(0.5, 0.0), DomainError);
}

TEST_CASE("truncated sampler: constant runtime, first accept kept, bounded misses") {
  const SamplingProblem coin = coin_demo(10.0);  // acceptance exactly 0.1
  const std::uint64_t n = 100000;
  std::uint64_t none_accepted = 0;
  for (std::uint64_t i = 0; i < n; ++i) {
    RngStream rng(31, i);
    SamplerOptions opt;
    opt.record_events = i < 50;
    const SampleTrace t = truncated_reject(coin.target, coin.envelope, 0.1, 1e-3, rng, opt);
    CHECK(t.runtime == 66);
    if (!t.accepted) ++none_accepted;
    if (opt.record_events) {
      CHECK(t.events.size() == 66);
      // The published value is the first accepted proposal.
      bool seen = false;
      for (const IterationEvent& e : t.events) {
        if (e.publish) {
          CHECK(!seen);
          CHECK(t.value == e.x);
          seen = true;
        }
      }
      CHECK(seen == t.accepted);
    }
  }
  const double freq = static_cast<double>(none_accepted) / static_cast<double>(n);
  const double margin = 3.0 * std::sqrt(1e-3 * (1.0 - 1e-3) / static_cast<double>(n));
  CHECK(freq <= 1e-3 + margin);
}

TEST_CASE("truncated sampler keeps the target law on accepted runs") {
  const SamplingProblem prob = gaussian_demo();  // true acceptance 1/sqrt(2)
  std::vector<double> accepted;
  for (std::uint64_t i = 0; accepted.size() < 30000; ++i) {
    RngStream rng(37, i);
    const SampleTrace t = truncated_reject(prob.target, prob.envelope, 0.5, 1e-3, rng);
    if (t.accepted) accepted.push_back(t.value[0]);
  }
  CHECK(ks_statistic(std::move(accepted), prob.output_cdf) < 0.015);
}

TEST_CASE("memoryless mixture equals the geometric law exactly") {
  for (int t = 1; t <= 100; ++t) {
    const double direct = 0.2 * std::pow(0.8, t - 1);
    CHECK(std::abs(mixture_pmf_oracle(0.2, 0.5, t) - direct) < 1e-12);
  }
}

TEST_CASE("additive wait: no wait at c_current == c_worst") {
  const SamplingProblem coin = coin_demo(2.0);
  const Batch batch = run_many(50000, 41, [&](RngStream& rng) {
    return additive_wait_reject(coin.wait->normalized_target, coin.wait->envelope,
                                coin.wait->c_current, coin.wait->c_current, rng);
  });
  CHECK(chi_square_geometric_gof(batch.runtimes, 0.5).pvalue > 1e-3);
}

TEST_CASE("additive wait composes to the worst-case geometric law") {
  const SamplingProblem coin = coin_demo(2.0);  // loop accepts at rate q = 1/2
  const Batch batch = run_many(100000, 43, [&](RngStream& rng) {
    return additive_wait_reject(coin.wait->normalized_target, coin.wait->envelope,
                                coin.wait->c_current, 5.0, rng);  // total p = 1/5
  });
  CHECK(tv_distance_geometric(batch.runtimes, 0.2, 1, 60) < 0.01);
  CHECK(chi_square_geometric_gof(batch.runtimes, 0.2).pvalue > 1e-3);
}

TEST_CASE("additive wait thinning mode draws the same runtime law") {
  const SamplingProblem coin = coin_demo(2.0);
  const Batch batch = run_many(100000, 47, [&](RngStream& rng) {
    return additive_wait_reject(coin.wait->normalized_target, coin.wait->envelope,
                                coin.wait->c_current, 5.0, rng,
                                WaitMode::per_iteration_thinning);
  });
  CHECK(chi_square_geometric_gof(batch.runtimes, 0.2).pvalue > 1e-3);
  // Published values still follow the target.
  CHECK(ks_statistic(batch.values, coin.output_cdf) < 0.01);
}

TEST_CASE("additive wait: targets with different loop rates share the worst-case law") {
  const SamplingProblem two = coin_demo(2.0);
  const SamplingProblem three = coin_demo(3.0);
  const Batch a = run_many(100000, 53, [&](RngStream& rng) {
    return additive_wait_reject(two.wait->normalized_target, two.wait->envelope, 2.0, 4.0,
                                rng);
  });
  const Batch b = run_many(100000, 59, [&](RngStream& rng) {
    return additive_wait_reject(three.wait->normalized_target, three.wait->envelope, 3.0,
                                4.0, rng);
  });
  CHECK(chi_square_two_sample(a.runtimes, b.runtimes).pvalue > 1e-3);
}

TEST_CASE("additive wait domain errors") {
  const SamplingProblem coin = coin_demo(2.0);
  RngStream rng(1);
  CHECK_THROWS_AS(additive_wait_reject(coin.wait->normalized_target, coin.wait->envelope,
                                       2.0, 1.5, rng),
                  DomainError);
  CHECK_THROWS_AS(additive_wait_reject(coin.wait->normalized_target, coin.wait->envelope,
                                       3.0, 4.0, rng),  // env says c_current = 2
                  DomainError);
}

TEST_CASE("squeeze sampler scripted trace: accepted at 2, published at 5") {
  // Flat target 0.6 on [0,1] under a unit uniform proposal, squeeze at 0.3:
  // target-accept iff y <= 0.6, publish iff y <= 0.3.
  UnnormalizedTarget target{[](std::span<const double>) { return std::log(0.6); }, 1,
                            Support::box_of({0.0}, {1.0})};
  ProposalDensity uniform01{
      [](RngStream&, std::span<double>) {
        throw InvariantViolation("scripted test never samples the proposal");
      },
      [](std::span<const double>) { return 0.0; }};
  Envelope env;
  env.proposal = uniform01;
  env.log_cU = 0.0;
  env.squeeze = uniform01;
  env.log_cL = std::log(0.3);

  const std::vector<double> xs = {0.1, 0.2, 0.3, 0.4, 0.5};
  const std::vector<double> ys = {0.9, 0.45, 0.7, 0.5, 0.25};
  std::size_t i = 0;
  DrawHooks hooks{[&](std::span<double> out) { out[0] = xs.at(i); },
                  [&] { return ys.at(i++); }};

  SamplerOptions opt;
  opt.record_events = true;
  const SampleTrace t = squeeze_reject(target, env, hooks, opt);

  CHECK(t.runtime == 5);
  CHECK(t.accepted);
  CHECK(t.value[0] == doctest::Approx(0.2));  // x2, held until iteration 5
  REQUIRE(t.events.size() == 5);
  CHECK(!t.events[0].target_accept);
  CHECK(t.events[1].target_accept);
  CHECK(!t.events[1].publish);
  CHECK(!t.events[2].target_accept);
  CHECK(t.events[3].target_accept);  // below the target but X_s is already set
  CHECK(!t.events[3].publish);
  CHECK(t.events[4].publish);

  const std::string line = to_json_line(t.events[1]);
  CHECK(line.find("\"iter\":2") != std::string::npos);
  CHECK(line.find("\"target_accept\":true") != std::string::npos);
  CHECK(line.find("\"publish\":false") != std::string::npos);
}

TEST_CASE("squeeze sampler degenerate pinch publishes immediately") {
  // L = U and c_L = c_U forces the target to equal the envelope.
  const GaussianLaw law{{0.0}, 1.0};
  UnnormalizedTarget target{
      [law](std::span<const double> x) { return gaussian_logpdf(law, x); }, 1, Support{}};
  Envelope env;
  env.proposal = make_proposal(law);
  env.log_cU = 0.0;
  env.squeeze = make_proposal(law);
  env.log_cL = 0.0;
  RngStream rng(61);
  for (int i = 0; i < 200; ++i) {
    const SampleTrace t = squeeze_reject(target, env, rng);
    CHECK(t.runtime == 1);
  }
}

TEST_CASE("squeeze sampler on the gaussian demo: output and runtime laws") {
  const SamplingProblem prob = gaussian_demo();
  const Batch batch = run_many(100000, 67, [&](RngStream& rng) {
    return squeeze_reject(prob.target, prob.envelope, rng);
  });
  CHECK(ks_statistic(batch.values, prob.output_cdf) < 0.01);
  CHECK(chi_square_geometric_gof(batch.runtimes, prob.squeeze_rate).pvalue > 1e-3);
}

TEST_CASE("squeeze coupling: publish implies target acceptance in the same run") {
  const SamplingProblem prob = gaussian_demo();
  SamplerOptions opt;
  opt.record_events = true;
  for (int i = 0; i < 2000; ++i) {
    RngStream rng(71, i);
    const SampleTrace t = squeeze_reject(prob.target, prob.envelope, rng, opt);
    bool accepted_so_far = false;
    for (const IterationEvent& e : t.events) {
      accepted_so_far = accepted_so_far || e.target_accept;
      if (e.publish) CHECK(accepted_so_far);
    }
    CHECK(t.events.back().publish);
  }
}

TEST_CASE("squeeze sampler rejects inconsistent envelopes") {
  SamplingProblem prob = gaussian_demo();
  RngStream rng(73);
  Envelope bad = prob.envelope;
  bad.log_cL += 1.0;  // squeeze pushed above the target
  CHECK_THROWS_AS(
      [&] {
        for (int i = 0; i < 2000; ++i) squeeze_reject(prob.target, bad, rng);
      }(),
      EnvelopeViolation);

  Envelope no_squeeze = prob.envelope;
  no_squeeze.squeeze.reset();
  CHECK_THROWS_AS(squeeze_reject(prob.target, no_squeeze, rng), DomainError);
}

TEST_CASE("squeeze from a known constant: runtime Geom(1/c), output unchanged") {
  // Normalized N(0, 1/2) target under a N(0,1) proposal: c_U = sqrt(2).
  const double c_u = std::sqrt(2.0);
  UnnormalizedTarget target{
      [](std::span<const double> x) {
        return -x[0] * x[0] - 0.5 * std::log(std::numbers::pi);
      },
      1, Support{}};
  Envelope env;
  env.proposal = make_proposal(GaussianLaw{{0.0}, 1.0});
  env.log_cU = std::log(c_u);

  const Batch tight = run_many(100000, 79, [&](RngStream& rng) {
    return squeeze_from_known_constant(target, env, c_u, rng);
  });
  CHECK(chi_square_geometric_gof(tight.runtimes, 1.0 / c_u).pvalue > 1e-3);

  const Batch doubled = run_many(100000, 83, [&](RngStream& rng) {
    return squeeze_from_known_constant(target, env, 2.0 * c_u, rng);
  });
  CHECK(chi_square_geometric_gof(doubled.runtimes, 1.0 / (2.0 * c_u)).pvalue > 1e-3);

  // Same published law as plain rejection (two-sample KS).
  const Batch plain = run_many(100000, 89, [&](RngStream& rng) {
    return simple_reject(target, env, rng);
  });
  CHECK(ks_two_sample(doubled.values, plain.values).pvalue > 1e-3);

  RngStream rng(97);
  CHECK_THROWS_AS(squeeze_from_known_constant(target, env, 1.0, rng), DomainError);
}

TEST_CASE("sampler invocations are reproducible") {
  const SamplingProblem prob = gaussian_demo();
  RngStream a(101, 5), b(101, 5);
  for (int i = 0; i < 50; ++i) {
    const SampleTrace ta = squeeze_reject(prob.target, prob.envelope, a);
    const SampleTrace tb = squeeze_reject(prob.target, prob.envelope, b);
    CHECK(ta.value[0] == tb.value[0]);
    CHECK(ta.runtime == tb.runtime);
  }
}
