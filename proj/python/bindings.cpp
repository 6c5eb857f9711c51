// Python bindings for the main operations: accounting formulas, the
// geometric primitives, the named samplers, and the certification entry
// points. Heavier workflows (CSV emission, config files) stay on the CLI.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pars/accounting.hpp"
#include "pars/adaptive.hpp"
#include "pars/distributions.hpp"
#include "pars/error.hpp"
#include "pars/harness.hpp"
#include "pars/problems.hpp"
#include "pars/samplers.hpp"

namespace py = pybind11;
using namespace pars;

namespace {

py::dict report_to_dict(const TestReport& r) {
  py::dict d;
  d["test"] = r.test;
  d["statistic"] = r.statistic;
  d["threshold"] = r.threshold;
  d["pvalue"] = r.pvalue;
  d["pass"] = r.pass;
  d["n"] = r.n;
  d["seed"] = r.seed;
  return d;
}

std::vector<std::pair<double, double>> curve_vertices(const TradeoffCurve& curve) {
  return {curve.vertices().begin(), curve.vertices().end()};
}

}  // namespace

PYBIND11_MODULE(pars, m) {
  m.doc() = "samplers with data-independent runtime for DP mechanisms";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<EnvelopeViolation>(m, "EnvelopeViolation", PyExc_RuntimeError);
  py::register_exception<InsufficientDataError>(m, "InsufficientDataError", PyExc_ValueError);

  py::class_<RngStream>(m, "RngStream")
      .def(py::init<std::uint64_t, std::uint64_t>(), py::arg("seed"),
           py::arg("stream_id") = 0)
      .def("uniform", &RngStream::uniform)
      .def("next_u64", &RngStream::next_u64)
      .def_property_readonly("seed", &RngStream::seed)
      .def_property_readonly("stream_id", &RngStream::stream_id);

  // distributions
  m.def("geometric_pmf",
        [](double p, std::int64_t k) { return geometric_pmf({p}, k); }, py::arg("p"),
        py::arg("k"));
  m.def("geometric_sample",
        [](double p, RngStream& rng) { return geometric_sample({p}, rng); }, py::arg("p"),
        py::arg("rng"));
  m.def(
      "geometric_samples",
      [](double p, std::uint64_t n, std::uint64_t seed, std::uint64_t stream_id) {
        RngStream rng(seed, stream_id);
        std::vector<std::int64_t> out(n);
        for (auto& v : out) v = geometric_sample({p}, rng);
        return out;
      },
      py::arg("p"), py::arg("n"), py::arg("seed"), py::arg("stream_id") = 0);
  m.def("unit_ball_volume", &unit_ball_volume, py::arg("d"));

  // accounting
  m.def("f_R", [](double r, double alpha) { return f_R(RBound(r), alpha); }, py::arg("R"),
        py::arg("alpha"));
  m.def("delta_of_eps", [](double r, double eps) { return delta_of_eps(RBound(r), eps); },
        py::arg("R"), py::arg("eps"));
  m.def("eps_of_delta",
        [](double r, double delta) { return eps_of_delta(RBound(r), delta); }, py::arg("R"),
        py::arg("delta"));
  m.def("f_eps_delta",
        [](double eps, double delta, double alpha) {
          return f_eps_delta({eps, delta}, alpha);
        },
        py::arg("eps"), py::arg("delta"), py::arg("alpha"));
  m.def("exp_mech_R",
        [](double eps, double p_star) { return exp_mech_R(eps, p_star).value(); },
        py::arg("eps"), py::arg("p_star"));
  m.def("geom_max_divergence", &geom_max_divergence, py::arg("p"), py::arg("q"));
  m.def("batched_R", &batched_R, py::arg("p"), py::arg("q"), py::arg("k"));
  m.def(
      "adaptive_runtime_divergence",
      [](const std::vector<double>& p_seq, const std::vector<double>& q_seq,
         std::size_t horizon) { return adaptive_runtime_divergence(p_seq, q_seq, horizon); },
      py::arg("p_seq"), py::arg("q_seq"), py::arg("horizon"));
  m.def(
      "exact_geometric_tradeoff",
      [](double p, double q) { return curve_vertices(exact_geometric_tradeoff(p, q)); },
      py::arg("p"), py::arg("q"), "vertex list (alpha, beta), alpha descending");
  m.def(
      "curve_to_eps_delta",
      [](const std::vector<std::pair<double, double>>& vertices, double eps) {
        const EpsDelta ed =
            curve_to_eps_delta(TradeoffCurve::from_vertices(vertices), eps);
        return std::pair<double, double>{ed.eps, ed.delta};
      },
      py::arg("vertices"), py::arg("eps"));

  // samplers over the named problems
  m.def(
      "run_sampler",
      [](const std::string& sampler, const std::string& target, std::uint64_t n,
         std::uint64_t seed) {
        ExperimentConfig cfg;
        cfg.sampler = sampler;
        cfg.target = target;
        cfg.replicates = n;
        cfg.seed = seed;
        const SampleColumns cols = run_experiment(cfg);
        py::dict out;
        out["dimension"] = cols.dimension;
        out["values"] = cols.values;
        out["runtimes"] = cols.runtimes;
        out["accepted"] = cols.accepted;
        return out;
      },
      py::arg("sampler"), py::arg("target"), py::arg("n"), py::arg("seed"),
      "sampler in {simple, truncated, wait, squeeze, adaptive}; values are row-major");

  m.def("relative_runtime_ratio", &relative_runtime_ratio, py::arg("r_hat"));

  // harness
  m.def(
      "certify_runtime_law",
      [](const std::vector<std::uint64_t>& runtimes, double p) {
        return report_to_dict(certify_runtime_law(runtimes, p));
      },
      py::arg("runtimes"), py::arg("p"));
  m.def(
      "certify_independence",
      [](const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
        return report_to_dict(certify_independence(a, b));
      },
      py::arg("runtimes_a"), py::arg("runtimes_b"));
  m.def("conversion_table", [] {
    std::vector<std::tuple<double, double, double>> rows;
    for (const ConversionRow& r : conversion_table()) {
      rows.emplace_back(r.r_value, r.delta, r.eps);
    }
    return rows;
  });
  m.def(
      "run_verification_suite",
      [](std::uint64_t seed, bool fast) {
        py::list out;
        for (const TestReport& r : run_verification_suite({seed, fast})) {
          out.append(report_to_dict(r));
        }
        return out;
      },
      py::arg("seed") = 7, py::arg("fast") = true);
}
