import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from majorize import seq

E = math.e

nonincreasing = st.lists(
    st.floats(min_value=1e-6, max_value=1.0, allow_nan=False), min_size=1, max_size=40
).map(lambda v: np.array(sorted(v, reverse=True)))


def test_mu_examples():
    assert np.allclose(seq.mu([0.5, 0.1, 0.3]), [0.5, 0.3, 0.1])
    assert np.allclose(seq.mu([-2, 1]), [2, 1])
    assert np.allclose(seq.mu([1j, -1j, 0]), [1, 1, 0])


def test_cesaro_examples():
    assert np.allclose(seq.cesaro([1, 1, 1]), [1, 1, 1])
    assert np.allclose(seq.cesaro([1, 0, 0]), [1, 1 / 2, 1 / 3])
    assert np.allclose(seq.cesaro([4, 2, 0]), [4, 3, 2])


def test_cesaro_keeps_complex():
    out = seq.cesaro([1j, -1j])
    assert np.iscomplexobj(out)
    assert np.allclose(out, [1j, 0])


def test_dilate_examples():
    assert np.allclose(seq.dilate([1, 0.5], 2), [1, 1, 0.5, 0.5])
    assert np.allclose(seq.dilate([0.3, 0.2], 1), [0.3, 0.2])
    assert np.allclose(seq.dilate([5], 3), [5, 5, 5])
    with pytest.raises(ValueError):
        seq.dilate([1.0], 0)


def test_half_dilate_examples():
    assert np.allclose(seq.half_dilate([4, 2, 2, 0]), [3, 1])
    assert np.allclose(seq.half_dilate([0.7, 0.7]), [0.7])
    assert np.allclose(seq.half_dilate([1, 0, 0, 0]), [0.5, 0])
    # odd length: a trailing zero is appended
    assert np.allclose(seq.half_dilate([2, 2, 2]), [2, 1])


def test_direct_sum_examples():
    assert np.allclose(seq.direct_sum([1, 0.5], [0.75]), [1, 0.75, 0.5])
    x = np.array([1, 0.25])
    assert np.allclose(seq.direct_sum(x, x), seq.dilate(x, 2))
    assert np.allclose(seq.direct_sum([1, 0], [0, 0]), [1, 0, 0, 0])


def test_s_transform_examples():
    assert np.allclose(seq.s_transform([0.3, 0.3, 0.3]), [0.3, 0.3, 0.3])
    sx = seq.s_transform([1, 1 / E])
    assert sx[1] == pytest.approx(1.5 / E, rel=1e-14)
    assert np.array_equal(seq.s_transform([1, 0]), [1, 0])
    assert seq.s_transform([1, 0.25])[1] == pytest.approx(0.25 * (1 + math.log(2)), rel=1e-14)


def test_t_transform_examples():
    assert np.allclose(seq.t_transform([1, 0.25]), [1, 0.5])
    assert np.allclose(seq.t_transform([0.4] * 5), [0.4] * 5)
    assert np.array_equal(seq.t_transform([1, 0, 0]), [1, 0, 0])


def test_t_transform_survives_underflow():
    # the plain product of these entries underflows to zero
    x = np.full(400, 1e-300)
    assert np.allclose(seq.t_transform(x, eps_prod=0.0), 1e-300, rtol=1e-12)


def test_rejects_unsorted():
    with pytest.raises(ValueError):
        seq.s_transform([0.1, 0.5])
    with pytest.raises(ValueError):
        seq.t_transform([-1.0])


def test_log_prefix_zero_tail():
    lp = seq.log_prefix([1.0, 0.5, 0.0, 0.0])
    assert lp[0] == 0.0 and lp[1] == pytest.approx(math.log(0.5))
    assert np.all(np.isneginf(lp[2:]))


@given(st.lists(st.floats(-10, 10, allow_nan=False), min_size=1, max_size=30))
def test_mu_is_idempotent_and_sorted(v):
    m = seq.mu(v)
    assert seq.is_nonincreasing(m)
    assert np.array_equal(seq.mu(m), m)
    assert np.array_equal(seq.mu(v[::-1]), m)


@given(nonincreasing)
def test_cesaro_of_nonincreasing(x):
    c = seq.cesaro(x)
    assert seq.is_nonincreasing(c, atol=1e-12)
    assert np.all(c >= x - 1e-12)


@given(nonincreasing, st.integers(1, 5))
def test_half_dilate_inverts_doubling(x, n):
    assert np.allclose(seq.half_dilate(seq.dilate(x, 2)), x)
    assert seq.dilate(x, n).size == n * x.size


@given(nonincreasing)
def test_s_dominates_and_decreases(x):
    sx = seq.s_transform(x)
    assert np.all(sx >= x * (1 - 1e-12))
    assert seq.is_nonincreasing(sx, atol=1e-12)


@given(nonincreasing)
def test_t_between_x_and_head(x):
    tx = seq.t_transform(x)
    assert np.all(tx >= x * (1 - 1e-12))
    assert np.all(tx <= x[0] * (1 + 1e-12))
    assert seq.is_nonincreasing(tx, atol=1e-12)


@given(nonincreasing, st.sampled_from([1, 2, 3, 4]))
def test_t_dilation_sandwich(x, n):
    lo, mid, hi = seq.t_dilation_sandwich(x, n)
    assert np.all(lo <= mid * (1 + 1e-12))
    assert np.all(mid <= hi * (1 + 1e-12))


@settings(max_examples=50)
@given(nonincreasing)
def test_s_pointwise_bound(x):
    sx, bound = seq.s_pointwise_bounds(x)
    assert np.all(sx[None, :] <= bound * (1 + 1e-12) + 1e-15)


def test_s_pointwise_bound_zero_front():
    sx, bound = seq.s_pointwise_bounds([1.0, 0.5, 0.0])
    assert bound[2, 2] == 0.0
    assert np.isinf(bound[2, 0])


@given(st.floats(1e-6, 200.0), st.integers(1, 500))
def test_binomial_gap_nonnegative(u, n):
    assert seq.binomial_log_gap(u, n) >= 0


def test_binomial_oracle():
    u, n = 3.0, 2
    lhs = math.prod(1 + u / (k + 1) for k in range(2 * n + 1))
    assert seq.binomial_log_gap(u, n) == pytest.approx((2 * n + u + 2) * math.log(2) - math.log(lhs))
    with pytest.raises(ValueError):
        seq.binomial_log_gap(0.0, 1)
