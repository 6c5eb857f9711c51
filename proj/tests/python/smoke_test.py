"""Smoke tests for the pars Python module (run by ctest with PYTHONPATH set)."""

import math
import sys

import pars


def approx(a, b, tol=1e-9):
    return abs(a - b) <= tol


def main():
    # Accounting formulas.
    assert approx(pars.f_R(2.0, 0.25), 0.5, 1e-12)
    assert approx(pars.f_R(1.0, 0.7), 0.3, 1e-12)
    assert approx(pars.eps_of_delta(2.0, 1e-6), 12.43, 5e-3)
    assert pars.eps_of_delta(1.1, 0.1) == 0.0
    assert approx(pars.delta_of_eps(2.0, 0.0), 0.25, 1e-12)
    assert approx(pars.f_eps_delta(0.0, 0.0, 0.3), 0.7, 1e-12)
    assert pars.exp_mech_R(1.0, 0.5) >= math.e
    assert approx(pars.batched_R(0.19, 0.1, 64), 2.0, 1e-12)
    assert pars.geom_max_divergence(0.2, 0.5) == math.inf
    assert approx(pars.geom_max_divergence(0.5, 0.2), math.log(2.5), 1e-12)

    try:
        pars.eps_of_delta(2.0, 0.0)
    except ValueError:
        pass
    else:
        raise AssertionError("eps_of_delta(_, 0) should raise")

    # Distributions and reproducibility.
    assert approx(pars.geometric_pmf(0.5, 3), 0.125, 1e-14)
    assert approx(pars.unit_ball_volume(2), math.pi, 1e-12)
    a = pars.geometric_samples(0.3, 1000, seed=7)
    b = pars.geometric_samples(0.3, 1000, seed=7)
    assert a == b
    assert min(a) >= 1

    # Tradeoff curves.
    vertices = pars.exact_geometric_tradeoff(0.5, 0.2)
    assert any(approx(v[0], 0.5, 1e-12) and approx(v[1], 0.2, 1e-12) for v in vertices)
    eps, delta = pars.curve_to_eps_delta(vertices, 0.0)
    assert 0.0 <= delta <= 1.0

    divergence = pars.adaptive_runtime_divergence([0.5, 0.5], [0.5, 0.5], 2)
    assert divergence == 0.0

    # Samplers through the named problems.
    run = pars.run_sampler("squeeze", "gaussian-demo", 20000, seed=11)
    assert len(run["runtimes"]) == 20000
    again = pars.run_sampler("squeeze", "gaussian-demo", 20000, seed=11)
    assert run["values"] == again["values"]
    report = pars.certify_runtime_law(run["runtimes"], 0.5)
    assert report["pass"], report

    two = pars.run_sampler("squeeze", "gaussian-demo", 20000, seed=12)
    indep = pars.certify_independence(run["runtimes"], two["runtimes"])
    assert indep["pass"], indep

    adaptive = pars.run_sampler("adaptive", "example4-lipschitz", 2000, seed=13)
    assert len(adaptive["runtimes"]) == 2000
    assert all(r >= 1 for r in adaptive["runtimes"])
    assert approx(pars.relative_runtime_ratio(1e-6), 2.0, 1e-5)

    # Conversion table.
    rows = pars.conversion_table()
    assert len(rows) == 12
    assert approx(rows[0][2], 0.916, 5e-3)

    # The fast certification battery.
    reports = pars.run_verification_suite(seed=7, fast=True)
    assert all(r["pass"] for r in reports), [r for r in reports if not r["pass"]]

    print("python smoke tests passed ({} suite checks)".format(len(reports)))
    return 0


if __name__ == "__main__":
    sys.exit(main())
