"""Acceptance criteria, each at its stated tolerance.

Every test prints one ``PASS``/``FAIL`` line; the lines are repeated in the
pytest terminal summary. Run ``python3 tests/test_acceptance.py`` to get just
the lines.
"""

import time

import numpy as np
import pytest
from scipy.optimize import linear_sum_assignment

from majorize import dyadic, io, seq
from majorize.config import DEFAULT
from majorize.orders import check_hl_submajor, check_log_submajor, check_uniform_submajor, verify_hardest_estimate
from majorize.spectral import (
    construct_from_spectrum,
    eigen_seq,
    geom_estimate_check,
    lidskii_check,
    prefinal_bound_check,
    quasinilpotent_sum_check,
    random_matrix,
    random_quasinilpotent,
    ringrose_decompose,
    sv_seq,
    weyl_check,
)
from majorize.suite import SuiteConfig, run_suite

LINES = []


def record(number, title, ok, detail=""):
    line = f"{'PASS' if ok else 'FAIL'} criterion {number:2d} {title}: {detail}"
    LINES.append(line)
    print(line)
    assert ok, line


def _match(x, y):
    cost = np.abs(np.asarray(x)[:, None] - np.asarray(y)[None, :])
    r, c = linear_sum_assignment(cost)
    return float(cost[r, c].max())


def test_criterion_01_weyl():
    rng = np.random.default_rng(101)
    tol = DEFAULT.with_overrides(tau_log=1e-9)
    start = time.perf_counter()
    held = sum(weyl_check(random_matrix(rng, int(rng.integers(2, 13))), tol).holds for _ in range(1000))
    elapsed = time.perf_counter() - start
    record(1, "Weyl log-submajorization", held == 1000 and elapsed < 30,
           f"{held}/1000 hold, {elapsed:.2f} s")


def test_criterion_02_lidskii():
    rng = np.random.default_rng(102)
    ok, worst = 0, 0.0
    for _ in range(1000):
        n = int(rng.integers(2, 17))
        r = lidskii_check(random_matrix(rng, n))
        worst = max(worst, r["error"] / n)
        ok += r["error"] <= 1e-8 * n
    record(2, "finite Lidskii identity", ok == 1000, f"{ok}/1000, max |Tr - sum|/dim = {worst:.2e}")


def test_criterion_03_ringrose():
    rng = np.random.default_rng(103)
    ok = 0
    worst = {"recon": 0.0, "radius": 0.0, "match": 0.0}
    for _ in range(500):
        t = random_matrix(rng, int(rng.integers(2, 13)))
        norm = float(np.linalg.norm(t, 2))
        r = ringrose_decompose(t)
        recon = float(np.linalg.norm(r.n_part + r.q_part - t, 2)) / norm
        radius = r.q_radius / norm
        match = _match(np.linalg.eigvals(r.n_part), eigen_seq(t))
        for k, v in (("recon", recon), ("radius", radius), ("match", match)):
            worst[k] = max(worst[k], v)
        ok += recon <= 1e-10 and radius <= 1e-8 and match <= 1e-8
    record(3, "Ringrose split", ok == 500,
           f"{ok}/500, " + ", ".join(f"max {k} {v:.1e}" for k, v in worst.items()))


def test_criterion_04_hardest_estimate():
    rng = np.random.default_rng(104)
    held = 0
    for _ in range(1000):
        x = seq.mu(10.0 ** rng.uniform(-6, 0, int(rng.integers(1, 65))))
        held += verify_hardest_estimate(x).holds
    record(4, "S x <<_log 4(x (+) x)", held == 1000, f"{held}/1000 hold")


def test_criterion_05_quasinilpotent_bounds():
    rng = np.random.default_rng(105)
    counts = [0, 0, 0]
    for _ in range(500):
        q = random_quasinilpotent(rng, int(rng.integers(2, 11)))
        counts[0] += quasinilpotent_sum_check(q)["holds"]
        counts[1] += prefinal_bound_check(q)["holds"]
        counts[2] += geom_estimate_check(q).holds
    record(5, "quasi-nilpotent bounds (400, 200 S, 1600e)", counts == [500] * 3,
           f"{counts[0]}/500, {counts[1]}/500, {counts[2]}/500")


def test_criterion_06_horn_construction():
    hand = construct_from_spectrum([0.5, 0.5], [1, 0.25])
    hand_err = float(np.max(np.abs(sv_seq(hand) - [1, 0.25])))
    rng = np.random.default_rng(106)
    ok, worst = 0, 0.0
    for _ in range(200):
        n = int(rng.integers(2, 9))
        x = seq.mu(10.0 ** rng.uniform(-3, 0, n))
        y = seq.mu(x * rng.uniform(0, 1, n)) * np.exp(1j * rng.uniform(-np.pi, np.pi, n))
        assert check_log_submajor(np.abs(y), x).holds
        t = construct_from_spectrum(y, x)
        err = _match(eigen_seq(t), y)
        worst = max(worst, err)
        ok += err <= 1e-7 and bool(np.all(sv_seq(t) <= x * (1 + 1e-7)))
    record(6, "prescribed eigenvalues and singular values", ok == 200 and hand_err <= 1e-12,
           f"{ok}/200, max eigen error {worst:.1e}, hand case sv error {hand_err:.1e}")


def test_criterion_07_counterexample_exactness():
    rng = np.random.default_rng(107)
    taux = all(dyadic.verify_t_aux(n, dyadic.sample_level_indices(n, 50, rng))["holds"] for n in (1, 2))
    tmain = []
    for l, n in ((1, 4), (2, 8)):
        r = dyadic.verify_t_main(l, n)
        tmain.append(r["certified"] and r["integer_inequality"])
    a0 = all(dyadic.verify_a0_bound(l, 6)["holds"] for l in range(1, 5))
    tower = dyadic.tower_sequence(2)
    horror = (dyadic.verify_horror(tower, 0)["holds"]
              and dyadic.verify_horror(dyadic.scale(dyadic.dilate(tower, 1), 1), 1)["holds"])
    record(7, "exact tower counterexample", taux and all(tmain) and a0 and horror,
           f"t_aux {taux}, t_main {tmain}, a0 {a0}, horror {horror}")


def test_criterion_08_order_coherence():
    rng = np.random.default_rng(108)
    exceptions = 0
    for _ in range(1000):
        n = int(rng.integers(1, 33))
        a = seq.mu(rng.uniform(0, 1, n))
        b = seq.mu(rng.uniform(0, 1, n))
        if check_uniform_submajor(b, a, 8).holds and not check_hl_submajor(b, a).holds:
            exceptions += 1
        d = seq.mu(a * rng.uniform(0, 1, n))
        u = check_uniform_submajor(d, a, 8)
        if not (check_hl_submajor(d, a).holds and check_log_submajor(d, a).holds
                and u.holds and u.witness == 1):
            exceptions += 1
    record(8, "order-decider coherence", exceptions == 0, f"{exceptions} exceptions in 1000 pairs")


def test_criterion_09_exact_numeric_bridge():
    tower = dyadic.tower_sequence(2)
    numeric = seq.t_transform(np.array(tower.to_floats(2048)))
    exact = np.array([2.0 ** float(dyadic.exact_t_log2(tower, k)) for k in range(2048)])
    err = float(np.max(np.abs(exact - numeric)))
    record(9, "exact/numeric T bridge", err <= 1e-9, f"max error {err:.1e} for k < 2048")


@pytest.fixture(scope="module")
def default_reports():
    return [io.dumps(run_suite(SuiteConfig(seed=0))) for _ in range(2)]


def test_criterion_10_determinism(default_reports):
    first, second = default_reports
    record(10, "suite determinism", first == second, f"{len(first)} bytes, identical={first == second}")


def test_default_suite_passes(default_reports):
    import json

    report = json.loads(default_reports[0])
    bad = [c["name"] for c in report["checks"] if c["verdict"]["status"] != "Holds"]
    assert bad == [] and report["exit_code"] == 0


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q", "-s", "-p", "no:cacheprovider"]))
