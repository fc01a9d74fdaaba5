import numpy as np
import pytest

from majorize import dyadic, seq
from majorize.ideals import (
    PrincipalIdealModel,
    commutator_member,
    geom_stable_check,
    ideal_member,
    le_member,
)
from majorize.orders import Status

GEOM = 0.5 ** np.arange(64)


def test_member_examples():
    ideal = PrincipalIdealModel(GEOM, l_max=4)
    v = ideal_member(GEOM, ideal)
    assert v.holds and v.witness == 0
    v = ideal_member(2 * seq.dilate(GEOM, 2)[:64], ideal)
    assert v.holds and v.witness == 1
    harmonic = 1.0 / np.arange(1, 65)
    v = ideal_member(harmonic, PrincipalIdealModel(GEOM, l_max=2))
    assert v.status is Status.INCONCLUSIVE and v.bound_searched == 2


def test_member_rejects_unsorted():
    with pytest.raises(ValueError):
        ideal_member([0.1, 0.5], PrincipalIdealModel(GEOM))
    with pytest.raises(ValueError):
        PrincipalIdealModel(GEOM, l_max=-1)


def test_le_examples():
    ideal = PrincipalIdealModel(GEOM, l_max=4)
    assert le_member(GEOM, ideal).witness == 0
    # (T g)(k) = 2**(-k/2) <= 2**(1 - floor(k/2))
    tg = seq.t_transform(GEOM)
    assert np.allclose(tg, 2.0 ** (-np.arange(64) / 2))
    v = le_member(tg, ideal)
    assert v.holds and v.witness <= 1
    big = np.concatenate([[2.0**10], np.full(63, 0.5)])
    v = le_member(big, ideal)
    assert v.status is Status.INCONCLUSIVE


def test_member_implies_le():
    rng = np.random.default_rng(0)
    g = seq.mu(rng.uniform(0, 1, 32))
    ideal = PrincipalIdealModel(g, l_max=4)
    for _ in range(100):
        x = seq.mu(2 * seq.dilate(g, 2)[:32] * rng.uniform(0, 1, 32))
        m = ideal_member(x, ideal)
        assert m.holds and le_member(x, ideal).witness <= m.witness


def test_geom_stable_examples():
    v = geom_stable_check(PrincipalIdealModel(GEOM))
    assert v.holds and v.witness == 1
    v = geom_stable_check(PrincipalIdealModel(np.full(16, 0.3)))
    assert v.holds and v.witness == 0


def test_geom_stable_tower_fails_exactly():
    v = geom_stable_check(PrincipalIdealModel(dyadic.tower_sequence(2), l_max=4))
    assert v.status is Status.FAILS
    refuted = v.detail["refuted_by"]
    assert [r["l"] for r in refuted] == [1, 2, 3, 4, 5]
    assert all(r["n"] == 2 ** (r["l"] + 1) for r in refuted)


def test_geom_stable_exact_geometric_holds():
    geo = dyadic.DyadicStepSeq.from_pieces([(k, k + 1, -k) for k in range(40)])
    v = geom_stable_check(PrincipalIdealModel(geo, l_max=3))
    assert v.holds and v.witness == 1


def test_exact_member():
    tower = dyadic.tower_sequence(2)
    ideal = PrincipalIdealModel(tower, l_max=3)
    v = ideal_member(dyadic.scale(dyadic.dilate(tower, 1), 1), ideal)
    assert v.holds and v.witness == 1
    v = ideal_member(dyadic.scale(tower, 5), ideal)
    assert v.status is Status.FAILS and v.failure_index == 0


def test_commutator_examples():
    ideal = PrincipalIdealModel(GEOM[:4])
    v = commutator_member(np.triu(np.ones((4, 4)), 1), ideal)
    assert v.holds and v.witness == 0
    v = commutator_member(np.diag([1.0, -1.0, 0, 0]), ideal)
    assert v.holds and v.witness == 0
    g = np.array([1.0, 0.5, 0.25, 0.125])
    v = commutator_member(np.diag(g), PrincipalIdealModel(g, l_max=4))
    # C g = (1, .75, .58, .47) against 2**l sigma_{2**l} g
    assert v.holds and v.witness == 1
