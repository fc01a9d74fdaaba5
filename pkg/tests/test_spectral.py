import math

import numpy as np
import pytest

from majorize import seq
from majorize.config import DEFAULT
from majorize.orders import Status
from majorize.spectral import (
    SpectralError,
    construct_from_spectrum,
    eigen_seq,
    geom_estimate_check,
    imag_part,
    lidskii_check,
    prefinal_bound_check,
    quasinilpotent_sum_check,
    random_matrix,
    random_quasinilpotent,
    real_part,
    ringrose_decompose,
    sv_seq,
    weyl_check,
)

E01 = np.array([[0, 1], [0, 0]], dtype=complex)


def test_eigen_seq_examples():
    assert np.array_equal(eigen_seq(E01), [0, 0])
    assert np.allclose(eigen_seq([[1, 5], [0, 2]]), [2, 1])
    assert np.allclose(eigen_seq([[0, 1], [-1, 0]]), [1j, -1j])


def test_eigen_seq_tie_break_on_real_part():
    lam = eigen_seq(np.diag([-1.0, 1.0, 0.5j]))
    assert np.allclose(lam, [1, -1, 0.5j])


def test_sv_seq_examples():
    assert np.allclose(sv_seq(E01), [1, 0])
    assert np.allclose(sv_seq(np.diag([3.0, 4.0])), [4, 3])
    golden = (1 + math.sqrt(5)) / 2
    assert np.allclose(sv_seq([[1, 1], [0, 1]]), [golden, golden - 1], atol=1e-14)


def test_input_validation():
    with pytest.raises(ValueError):
        eigen_seq(np.ones((2, 3)))
    with pytest.raises(ValueError):
        sv_seq(np.eye(DEFAULT.desk_limit + 1))
    with pytest.raises(ValueError):
        sv_seq([[np.nan]])


def test_ringrose_triangular_and_normal_inputs():
    t = np.array([[1, 2, 3], [0, 4, 5], [0, 0, 6]], dtype=complex)
    r = ringrose_decompose(t)
    assert np.allclose(r.n_part, np.diag(np.diag(t)), atol=1e-12)
    assert np.allclose(r.q_part, np.triu(t, 1), atol=1e-12)
    h = random_matrix(np.random.default_rng(0), 6)
    h = h + h.conj().T
    r = ringrose_decompose(h)
    assert np.linalg.norm(r.q_part, 2) <= DEFAULT.tau_recon * np.linalg.norm(h, 2)


def test_ringrose_random_invariants():
    rng = np.random.default_rng(1)
    for _ in range(50):
        t = random_matrix(rng, 8)
        norm = np.linalg.norm(t, 2)
        r = ringrose_decompose(t)
        assert r.reconstruction_error <= 1e-10 * norm
        assert r.q_radius <= 1e-8 * norm
        assert r.q_lower_residual <= 1e-8 * norm
        assert r.eigen_match_error <= 1e-8
        n = r.n_part
        assert np.linalg.norm(n @ n.conj().T - n.conj().T @ n, 2) <= 1e-10 * norm**2


def test_weyl():
    assert weyl_check(E01).holds
    rng = np.random.default_rng(2)
    for _ in range(200):
        assert weyl_check(random_matrix(rng, 12)).holds


def test_lidskii():
    r = lidskii_check([[1, 5], [0, 2]])
    assert r["holds"] and r["trace"] == [3.0, 0.0]
    assert lidskii_check(np.triu(np.ones((4, 4)), 1))["error"] == 0.0
    rng = np.random.default_rng(3)
    for _ in range(50):
        assert lidskii_check(random_matrix(rng, 16))["holds"]


def test_real_imag_parts_recombine():
    t = random_matrix(np.random.default_rng(4), 5)
    assert np.allclose(real_part(t) + 1j * imag_part(t), t)


def test_quasinilpotent_sum_hand_case():
    r = quasinilpotent_sum_check(4 * E01)
    assert r["parts"]["re"]["lhs"] == pytest.approx(0.0, abs=1e-12)
    assert r["parts"]["re"]["rhs"] == pytest.approx(400 * math.log(8 * math.e))
    assert r["holds"]
    zero = quasinilpotent_sum_check(np.zeros((3, 3)))
    assert zero["holds"] and zero["parts"]["re"]["rhs"] == 0.0


def test_prefinal_hand_case():
    assert prefinal_bound_check(E01)["holds"]
    assert prefinal_bound_check(np.zeros((2, 2)))["holds"]
    # C lambda(Re E01) = (1/2, 0) against 200 * 2e at the front
    rhs0 = 200 * seq.s_transform(seq.dilate(2 * math.e * sv_seq(E01), 2))[0]
    assert rhs0 == pytest.approx(400 * math.e)


def test_geom_hand_case():
    v = geom_estimate_check(E01)
    assert v.holds
    assert v.detail["im"]["status"] == "Holds"
    assert geom_estimate_check(np.zeros((3, 3))).holds


def test_quasinilpotent_checks_random():
    rng = np.random.default_rng(5)
    for _ in range(100):
        q = random_quasinilpotent(rng, int(rng.integers(2, 11)))
        assert quasinilpotent_sum_check(q)["holds"]
        assert prefinal_bound_check(q)["holds"]
        assert geom_estimate_check(q).status is Status.HOLDS


def test_quasinilpotent_checks_accept_conjugated_input():
    rng = np.random.default_rng(6)
    q = random_quasinilpotent(rng, 4)
    u, _ = np.linalg.qr(random_matrix(rng, 4))
    assert quasinilpotent_sum_check(u @ q @ u.conj().T)["holds"]


def test_quasinilpotent_checks_reject_other_input():
    with pytest.raises(ValueError):
        quasinilpotent_sum_check(np.eye(2))
    with pytest.raises(ValueError):
        prefinal_bound_check(random_matrix(np.random.default_rng(0), 3))


def test_construct_hand_case():
    t = construct_from_spectrum([0.5, 0.5], [1, 0.25])
    assert np.allclose(t, [[0.5, 0.75], [0, 0.5]], atol=1e-15)
    assert np.allclose(sv_seq(t), [1, 0.25], atol=1e-12)
    assert abs(np.linalg.det(t)) == pytest.approx(0.25)


def test_construct_trivial_cases():
    x = np.array([0.9, 0.4, 0.1])
    assert np.allclose(construct_from_spectrum(x, x), np.diag(x))
    t = construct_from_spectrum([0, 0], [1, 0])
    assert np.allclose(t, E01)


def test_construct_random():
    rng = np.random.default_rng(8)
    for _ in range(200):
        n = int(rng.integers(2, 9))
        x = seq.mu(10 ** rng.uniform(-3, 0, n))
        y = seq.mu(x * rng.uniform(0, 1, n)) * np.exp(1j * rng.uniform(-np.pi, np.pi, n))
        t = construct_from_spectrum(y, x)
        assert np.all(sv_seq(t) <= x * (1 + 1e-7) + 1e-15)
        assert np.allclose(np.diag(t), y, atol=1e-12)
        assert not np.any(np.tril(t, -1))


def test_construct_rejects_bad_pairs():
    with pytest.raises(ValueError):
        construct_from_spectrum([1.0, 0.1], [0.5, 0.5])
    with pytest.raises(ValueError):
        construct_from_spectrum([0.1, 0.5], [1.0, 1.0])
    with pytest.raises(ValueError):
        construct_from_spectrum([0.1], [1.0, 1.0])


def test_spectral_error_is_runtime_error():
    assert issubclass(SpectralError, RuntimeError)
