"""Finite sequence transforms: rearrangement, Cesaro means, dilations, S and T.

Sequences are 1-D numpy arrays. A *nonincreasing sequence* is a float array
with nonnegative entries sorted in nonincreasing order; it stands for the
finite truncation of a singular value sequence. Nothing here extrapolates past
the supplied entries.
"""

from __future__ import annotations

import math

import numpy as np

from .config import DEFAULT

__all__ = [
    "mu",
    "cesaro",
    "dilate",
    "half_dilate",
    "direct_sum",
    "s_transform",
    "t_transform",
    "is_nonincreasing",
    "as_nonincreasing",
    "log_prefix",
    "s_pointwise_bounds",
    "binomial_log_gap",
    "t_dilation_sandwich",
]


def is_nonincreasing(x, atol: float = 0.0) -> bool:
    x = np.asarray(x, dtype=float)
    if x.size == 0:
        return True
    return bool(np.all(x >= 0) and np.all(np.diff(x) <= atol))


def as_nonincreasing(x) -> np.ndarray:
    """Validate and return ``x`` as a float array; raises on unsorted input."""
    arr = np.asarray(x, dtype=float).ravel()
    if not np.all(np.isfinite(arr)):
        raise ValueError("sequence has non-finite entries")
    if not is_nonincreasing(arr):
        raise ValueError("sequence must be nonnegative and nonincreasing")
    return arr


def mu(x) -> np.ndarray:
    """Decreasing rearrangement of the moduli of ``x``."""
    a = np.abs(np.asarray(x).ravel()).astype(float)
    return -np.sort(-a)


def cesaro(x) -> np.ndarray:
    """Running arithmetic mean ``(Cx)(k) = (x(0) + ... + x(k)) / (k + 1)``.

    Complex input stays complex.
    """
    x = np.asarray(x).ravel()
    if x.size == 0:
        return x.astype(float)
    return np.cumsum(x) / np.arange(1, x.size + 1)


def dilate(x, n: int) -> np.ndarray:
    """Repeat each entry ``n`` times."""
    if int(n) != n or n < 1:
        raise ValueError(f"dilation factor must be a positive integer, got {n!r}")
    return np.repeat(np.asarray(x).ravel(), int(n))


def half_dilate(x) -> np.ndarray:
    """Average consecutive pairs; odd-length input is padded with one zero."""
    x = np.asarray(x).ravel()
    if x.size % 2:
        x = np.concatenate([x, np.zeros(1, dtype=x.dtype)])
    return (x[0::2] + x[1::2]) / 2


def direct_sum(x, y) -> np.ndarray:
    """Singular value sequence of a direct sum: merge and rearrange."""
    return mu(np.concatenate([np.asarray(x).ravel(), np.asarray(y).ravel()]))


def log_prefix(x, eps_prod: float = DEFAULT.eps_prod) -> np.ndarray:
    """Prefix sums of natural logs; ``-inf`` from the first (near) zero on."""
    x = np.asarray(x, dtype=float)
    logs = np.full(x.shape, -np.inf)
    pos = x > eps_prod
    logs[pos] = np.log(x[pos])
    with np.errstate(invalid="ignore"):
        return np.cumsum(logs)


def s_transform(x, eps_prod: float = DEFAULT.eps_prod) -> np.ndarray:
    r"""Apply the nonlinear operator

    .. math::

        (Sx)(k) = x(k)\Bigl(1 + \frac{1}{k+1}
                  \log\frac{\prod_{m \le k} x(m)}{x(k)^{k+1}}\Bigr)

    with the natural logarithm. Zero entries map to zero, which is the limit
    of the formula since ``t log(1/t) -> 0``.
    """
    x = as_nonincreasing(x)
    out = np.zeros_like(x)
    pos = x > eps_prod
    if not pos.any():
        return out
    k1 = np.arange(1, x.size + 1, dtype=float)
    logx = np.log(x[pos])
    # positive entries form a prefix, so the cumulative sum is over that prefix
    deficiency = (np.cumsum(logx) - k1[pos] * logx) / k1[pos]
    out[pos] = x[pos] * (1.0 + deficiency)
    return out


def t_transform(x, eps_prod: float = DEFAULT.eps_prod) -> np.ndarray:
    """Running geometric mean, computed from log prefix sums."""
    x = as_nonincreasing(x)
    lp = log_prefix(x, eps_prod)
    k1 = np.arange(1, x.size + 1, dtype=float)
    with np.errstate(invalid="ignore"):
        return np.exp(lp / k1)


def s_pointwise_bounds(x, eps_prod: float = DEFAULT.eps_prod):
    """Upper bounds for ``(Sx)(k)`` anchored at every index ``n``.

    Returns ``(sx, bound)`` where ``bound[n, k]`` is the bound valid for the
    pair ``(n, k)``: for ``k >= n`` it is
    ``x(n) (1 + log(prod_{m<=n} x(m) / x(n)^(n+1)) / (k+1))`` and for
    ``k <= n`` it is the same with ``x(n)`` in front replaced by ``x(k)``.
    """
    x = as_nonincreasing(x)
    sx = s_transform(x, eps_prod)
    n_len = x.size
    lp = log_prefix(x, eps_prod)
    k1 = np.arange(1, n_len + 1, dtype=float)
    # log s_n = sum_{m<=n} log x(m) - (n+1) log x(n); +inf once x(n) is zero
    log_s = np.full(n_len, np.inf)
    pos = x > eps_prod
    log_s[pos] = lp[pos] - k1[pos] * np.log(x[pos])
    bound = np.empty((n_len, n_len))
    for n in range(n_len):
        for k in range(n_len):
            front = x[n] if k >= n else x[k]
            if front <= eps_prod:
                bound[n, k] = 0.0
            elif not np.isfinite(log_s[n]):
                bound[n, k] = np.inf
            else:
                bound[n, k] = front * (1.0 + log_s[n] / (k + 1))
    return sx, bound


def binomial_log_gap(u: float, n: int) -> float:
    """``(2n + u + 2) log 2 - sum_{k<=2n} log(1 + u/(k+1))``; nonnegative when
    the product bound ``prod_{k=0}^{2n} (1 + u/(k+1)) <= 2^(2n+u+2)`` holds."""
    if u <= 0 or n < 1:
        raise ValueError("need u > 0 and n >= 1")
    lhs = math.fsum(math.log1p(u / (k + 1)) for k in range(2 * n + 1))
    return (2 * n + u + 2) * math.log(2.0) - lhs


def t_dilation_sandwich(x, n: int, eps_prod: float = DEFAULT.eps_prod):
    """Return ``(sigma_N T x, T(sigma_N x), sigma_2N T x)`` on their common
    prefix of length ``N * len(x)``."""
    x = as_nonincreasing(x)
    tx = t_transform(x, eps_prod)
    length = n * x.size
    lower = dilate(tx, n)[:length]
    middle = t_transform(dilate(x, n), eps_prod)[:length]
    upper = dilate(tx, 2 * n)[:length]
    return lower, middle, upper
