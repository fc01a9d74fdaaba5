import json
from importlib import resources

import jsonschema
import pytest

from majorize.config import DEFAULT
from majorize.suite import NAMES, REGISTRY, SuiteConfig, run_suite

# one entry per in-scope result, in the order they are developed
EXPECTED_REGISTRY = [
    "lidskii_trace",  # Cesaro operator and the trace identity
    "order_definitions",  # logarithmic submajorization and closedness
    "mu_sum",
    "weyl",
    "horn_construction",  # compact operator with prescribed eigenvalues
    "trace_monotone",
    "singular_finite_rank",
    "ringrose",
    "maj_sum",  # Hardy-Littlewood submajorization of sums
    "uniform_maj_sum",  # uniform submajorization of sums
    "convex_hull_direction_a",
    "s_definition",
    "s_decreasing",
    "s_pointwise_bound",
    "binomial",
    "hardest_estimate",
    "quasinilpotent_400",  # main quasi-nilpotent spectral estimate
    "prefinal_200",
    "geom_1600e",
    "commutator_criterion",
    "spectral_trace",  # trace of T equals trace of its eigenvalues
    "le_envelope",
    "sum_lessdot",
    "abs_trace_bound",
    "geom_stable_implies_closed",
    "geom_stable",  # the tower example
    "a0_bound",
    "horror",
    "t_definition",
    "t_properties",
    "t_aux",
    "t_main",
]

SMALL = SuiteConfig(seed=11, trials=8)


def _schema():
    text = resources.files("majorize").joinpath("schemas/suite_report.schema.json").read_text("utf-8")
    return json.loads(text)


@pytest.fixture(scope="module")
def small_report():
    return run_suite(SMALL)


def test_registry_matches_scope_exactly_once():
    assert list(NAMES) == EXPECTED_REGISTRY
    assert len(set(NAMES)) == len(NAMES)
    assert all(c.paper_anchor for c in REGISTRY)


def test_report_is_schema_valid(small_report):
    jsonschema.validate(small_report, _schema())
    assert [c["name"] for c in small_report["checks"]] == EXPECTED_REGISTRY


def test_small_run_passes(small_report):
    bad = [c["name"] for c in small_report["checks"] if c["verdict"]["status"] != "Holds"]
    assert bad == []
    assert small_report["exit_code"] == 0


def test_timings_flag():
    r = run_suite(SuiteConfig(trials=2, only=("weyl",), timings=True))
    jsonschema.validate(r, _schema())
    assert isinstance(r["checks"][0]["runtime_ms"], int)
    r = run_suite(SuiteConfig(trials=2, only=("weyl",)))
    assert r["checks"][0]["runtime_ms"] is None


def test_same_seed_same_bytes():
    a = json.dumps(run_suite(SMALL), sort_keys=True)
    b = json.dumps(run_suite(SMALL), sort_keys=True)
    assert a == b


def test_filtering_keeps_draws():
    full = {c["name"]: c for c in run_suite(SuiteConfig(seed=4, trials=5))["checks"]}
    one = run_suite(SuiteConfig(seed=4, trials=5, only=("ringrose",)))["checks"][0]
    assert one == full["ringrose"]


def test_different_seed_changes_draws():
    a = run_suite(SuiteConfig(seed=1, trials=5, only=("ringrose",)))
    b = run_suite(SuiteConfig(seed=2, trials=5, only=("ringrose",)))
    assert a["checks"][0]["verdict"]["detail"] != b["checks"][0]["verdict"]["detail"]


def test_zero_log_tolerance_is_not_all_pass():
    r = run_suite(SuiteConfig(trials=300, only=("weyl", "hardest_estimate"),
                              tol=DEFAULT.with_overrides(tau_log=0.0)))
    assert r["summary"]["Inconclusive"] >= 1
    assert r["exit_code"] != 0


def test_config_validation():
    with pytest.raises(ValueError):
        run_suite(SuiteConfig(only=("nope",)))
    with pytest.raises(ValueError):
        run_suite(SuiteConfig(trials=0))
    with pytest.raises(ValueError):
        run_suite(SuiteConfig(dims=(3, 200)))
