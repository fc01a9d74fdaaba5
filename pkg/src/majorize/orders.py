"""Deciders for Hardy-Littlewood, logarithmic and uniform submajorization,
plus randomized verifiers for the sequence-level inequalities built on them.

Every decider returns an :class:`OrderVerdict`. ``Holds`` and ``Fails`` are
decided with the configured slack; a comparison that is violated by less than
floating-point rounding of the operands but more than a caller-supplied
(smaller) slack comes back ``Inconclusive`` instead of ``Fails``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any, Optional

import numpy as np

from . import seq
from .config import DEFAULT, Tolerances

__all__ = [
    "Status",
    "OrderVerdict",
    "check_hl_submajor",
    "check_log_submajor",
    "log_prefix_verdict",
    "check_uniform_submajor",
    "verify_mu_sum",
    "verify_maj_sum_chain",
    "verify_convex_hull_direction_a",
    "verify_hardest_estimate",
    "verify_sum_lessdot",
]

_EPS = np.finfo(float).eps


class Status(str, enum.Enum):
    HOLDS = "Holds"
    FAILS = "Fails"
    INCONCLUSIVE = "Inconclusive"


@dataclass
class OrderVerdict:
    status: Status
    witness: Optional[int] = None
    failure_index: Optional[int] = None
    bound_searched: Optional[int] = None
    detail: dict = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return self.status is Status.HOLDS

    def to_dict(self) -> dict[str, Any]:
        out = {
            "status": self.status.value,
            "witness": self.witness,
            "failure_index": _jsonable_int(self.failure_index),
            "bound_searched": self.bound_searched,
        }
        if self.detail:
            out["detail"] = self.detail
        return out


def _jsonable_int(v):
    # indices past 2**53 do not survive a round trip through most JSON readers
    if v is None or abs(v) < 2**53:
        return v
    return str(v)


def _pad(b, a):
    b = np.asarray(b, dtype=float).ravel()
    a = np.asarray(a, dtype=float).ravel()
    n = max(b.size, a.size)
    return np.pad(b, (0, n - b.size)), np.pad(a, (0, n - a.size))


def _classify(excess: np.ndarray, slack: np.ndarray, noise: np.ndarray):
    """First index where ``excess > slack``, and whether it is only noise."""
    bad = np.flatnonzero(excess > slack)
    if bad.size == 0:
        return None, False
    i = int(bad[0])
    # beyond the requested slack; if every violation sits inside rounding
    # noise we cannot tell either way
    hard = bad[excess[bad] > np.maximum(slack[bad], noise[bad])]
    if hard.size:
        return int(hard[0]), False
    return i, True


def check_hl_submajor(b, a, tol: Tolerances = DEFAULT) -> OrderVerdict:
    """Prefix sums of ``b`` bounded by those of ``a``.

    ``failure_index`` is the prefix length ``n`` of the first violated sum
    ``sum_{k<n}``.
    """
    b, a = _pad(b, a)
    if b.size == 0:
        return OrderVerdict(Status.HOLDS)
    cb, ca = np.cumsum(b), np.cumsum(a)
    n = np.arange(1, b.size + 1)
    slack = tol.tau_sum * n
    noise = 4 * _EPS * n * (np.abs(cb) + np.abs(ca))
    idx, noisy = _classify(cb - ca, slack, noise)
    if idx is None:
        return OrderVerdict(Status.HOLDS)
    status = Status.INCONCLUSIVE if noisy else Status.FAILS
    return OrderVerdict(status, failure_index=idx + 1)


def check_log_submajor(b, a, tol: Tolerances = DEFAULT) -> OrderVerdict:
    """Prefix products of ``b`` bounded by those of ``a`` (as log sums).

    ``failure_index`` is the last index ``n`` of the first violated product
    ``prod_{k<=n}``.
    """
    b, a = _pad(b, a)
    if b.size == 0:
        return OrderVerdict(Status.HOLDS)
    return log_prefix_verdict(
        seq.log_prefix(b, tol.eps_prod), seq.log_prefix(a, tol.eps_prod), tol
    )


def log_prefix_verdict(lb: np.ndarray, la: np.ndarray, tol: Tolerances = DEFAULT) -> OrderVerdict:
    """Compare equal-length arrays of log prefix products (``-inf`` = zero)."""
    zero_left = np.isneginf(lb)
    zero_right = np.isneginf(la)
    with np.errstate(invalid="ignore"):
        excess = np.where(zero_left, -np.inf, np.where(zero_right, np.inf, lb - la))
    n = np.arange(1, lb.size + 1)
    slack = np.full(lb.size, tol.tau_log)
    finite = ~(zero_left | zero_right)
    noise = np.zeros(lb.size)
    noise[finite] = 8 * _EPS * n[finite] * (
        1 + np.abs(lb[finite]) + np.abs(la[finite])
    )
    idx, noisy = _classify(excess, slack, noise)
    if idx is None:
        return OrderVerdict(Status.HOLDS)
    status = Status.INCONCLUSIVE if noisy else Status.FAILS
    return OrderVerdict(status, failure_index=idx)


def _uniform_ok(cb, ca, lam: int, tol: Tolerances) -> bool:
    size = cb.size - 1
    for m in range(0, size // lam + 1):
        start = lam * m
        if start >= size:
            break
        ns = np.arange(start + 1, size + 1)
        left = cb[ns] - cb[start]
        right = ca[ns] - ca[m]
        if np.any(left - right > tol.tau_sum * ns):
            return False
    return True


def check_uniform_submajor(
    b, a, lambda_max: Optional[int] = None, tol: Tolerances = DEFAULT
) -> OrderVerdict:
    """Search the smallest ``lam <= lambda_max`` with
    ``sum_{k=lam m}^{n-1} b(k) <= sum_{k=m}^{n-1} a(k)`` whenever ``lam m < n``.

    The ``m = 0`` rows are the Hardy-Littlewood condition, so a failure there
    is a definite ``Fails``; otherwise an unsuccessful search is
    ``Inconclusive``.
    """
    lambda_max = tol.lambda_max if lambda_max is None else lambda_max
    if lambda_max < 1:
        raise ValueError("lambda_max must be >= 1")
    hl = check_hl_submajor(b, a, tol)
    if not hl.holds:
        return OrderVerdict(hl.status, failure_index=hl.failure_index, detail={"row": 0})
    b, a = _pad(b, a)
    cb = np.concatenate([[0.0], np.cumsum(b)])
    ca = np.concatenate([[0.0], np.cumsum(a)])
    for lam in range(1, lambda_max + 1):
        if _uniform_ok(cb, ca, lam, tol):
            return OrderVerdict(Status.HOLDS, witness=lam)
    return OrderVerdict(Status.INCONCLUSIVE, bound_searched=lambda_max)


# --------------------------------------------------------------------------
# randomized verifiers


def _random_complex(rng: np.random.Generator, n: int) -> np.ndarray:
    return rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))


def _random_unitary(rng: np.random.Generator, n: int) -> np.ndarray:
    q, r = np.linalg.qr(_random_complex(rng, n))
    d = np.diag(r)
    return q * (d / np.abs(d))


def verify_mu_sum(
    noise_trials: int, dim: int, rng=None, tol: Tolerances = DEFAULT
) -> dict:
    """Check ``mu(A + B) <= sigma_2(mu(A) + mu(B))`` on random pairs."""
    if dim > tol.desk_limit:
        raise ValueError(f"dim {dim} exceeds desk limit {tol.desk_limit}")
    rng = np.random.default_rng(rng)
    violations = 0
    worst = 0.0
    for _ in range(noise_trials):
        A = _random_complex(rng, dim)
        B = _random_complex(rng, dim)
        lhs = np.linalg.svd(A + B, compute_uv=False)
        sa = np.linalg.svd(A, compute_uv=False)
        sb = np.linalg.svd(B, compute_uv=False)
        rhs = seq.dilate(sa + sb, 2)[:dim]
        scale = tol.tau_sv * max(1.0, sa[0] + sb[0])
        excess = float(np.max(lhs - rhs))
        worst = max(worst, excess)
        if excess > scale:
            violations += 1
    return {"trials": noise_trials, "dim": dim, "violations": violations,
            "max_excess": worst}


def _spectral_sum(a, b, mode: str, rng) -> np.ndarray:
    """Singular values of ``A + B`` for positive ``A, B`` with spectra a, b."""
    n = max(a.size, b.size)
    a = np.pad(a, (0, n - a.size))
    b = np.pad(b, (0, n - b.size))
    if mode == "diagonal":
        return seq.mu(a + rng.permutation(b))
    if mode == "random":
        U = _random_unitary(rng, n)
        V = _random_unitary(rng, n)
        S = (U * a) @ U.conj().T + (V * b) @ V.conj().T
        return seq.mu(np.linalg.eigvalsh((S + S.conj().T) / 2))
    raise ValueError(f"unknown mode {mode!r}")


def verify_maj_sum_chain(
    a, b, mode: str = "random", lambda_max: int = 8, rng=None,
    tol: Tolerances = DEFAULT,
) -> dict:
    """Check both links of ``A+B << mu(A)+mu(B) << 2 sigma_{1/2} mu(A+B)``
    for Hardy-Littlewood and uniform submajorization.

    ``A`` and ``B`` are positive with spectra ``a`` and ``b``; in ``diagonal``
    mode they commute, in ``random`` mode they are conjugated by independent
    random unitaries. ``mu(A+B)`` is padded with zeros to twice the dimension
    before halving, which is exact for finite-rank operators.
    """
    rng = np.random.default_rng(rng)
    a = seq.as_nonincreasing(a)
    b = seq.as_nonincreasing(b)
    n = max(a.size, b.size)
    s = _spectral_sum(a, b, mode, rng)
    middle = np.pad(a, (0, n - a.size)) + np.pad(b, (0, n - b.size))
    right = 2 * seq.half_dilate(np.pad(s, (0, n)))
    links = {}
    for name, (lo, hi) in {"left": (s, middle), "right": (middle, right)}.items():
        hl = check_hl_submajor(lo, hi, tol)
        un = check_uniform_submajor(lo, hi, lambda_max, tol)
        links[name] = {"hl": hl.to_dict(), "uniform": un.to_dict()}
    ok = all(v[k]["status"] == "Holds" for v in links.values() for k in v)
    return {"mode": mode, "links": links, "holds": ok}


def verify_convex_hull_direction_a(
    x, trials: int, rng=None, terms: int = 4, lambda_max: Optional[int] = None,
    tol: Tolerances = DEFAULT,
) -> dict:
    """Random convex combinations of damped permutations of ``x`` must be
    uniformly submajorized by ``x``."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = np.random.default_rng(rng)
    x = seq.as_nonincreasing(x)
    failures = 0
    witnesses = []
    for _ in range(trials):
        k = int(rng.integers(1, terms + 1))
        weights = rng.dirichlet(np.ones(k))
        y = np.zeros_like(x)
        for w in weights:
            z = rng.permutation(x) * rng.uniform(0.0, 1.0, x.size)
            y += w * z
        v = check_uniform_submajor(seq.mu(y), x, lambda_max, tol)
        if not v.holds:
            failures += 1
        else:
            witnesses.append(v.witness)
    return {"trials": trials, "failures": failures,
            "max_witness": max(witnesses) if witnesses else None}


def verify_hardest_estimate(x, tol: Tolerances = DEFAULT) -> OrderVerdict:
    """Decide ``S x <<_log 4 (x (+) x)``."""
    x = seq.as_nonincreasing(x)
    sx = seq.s_transform(x, tol.eps_prod)
    right = 4 * seq.direct_sum(x, x)
    return check_log_submajor(sx, right, tol)


def _with_singular_values(s: np.ndarray, n: int, rng) -> np.ndarray:
    s = np.pad(s, (0, n - s.size))
    return (_random_unitary(rng, n) * s) @ _random_unitary(rng, n)


def verify_sum_lessdot(b1, a1, b2, a2, rng=None, tol: Tolerances = DEFAULT) -> dict:
    """Given ``b_i <<_log a_i``, check ``b1 (+) b2 <<_log a1 (+) a2`` on the
    sequences and ``B1 + B2 <<_log 2 (A1 (+) A2)^(+2)`` with ``B_i`` random
    matrices carrying the singular values ``b_i``.

    Raises ``ValueError`` when a premise fails.
    """
    b1, a1, b2, a2 = (seq.as_nonincreasing(v) for v in (b1, a1, b2, a2))
    for i, (bb, aa) in enumerate(((b1, a1), (b2, a2)), start=1):
        pre = check_log_submajor(bb, aa, tol)
        if not pre.holds:
            raise ValueError(f"premise b{i} <<_log a{i} does not hold: {pre.to_dict()}")
    rng = np.random.default_rng(rng)
    part_a = check_log_submajor(seq.direct_sum(b1, b2), seq.direct_sum(a1, a2), tol)
    n = max(b1.size, b2.size)
    B = _with_singular_values(b1, n, rng) + _with_singular_values(b2, n, rng)
    lhs = np.linalg.svd(B, compute_uv=False)
    rhs = 2 * seq.dilate(seq.direct_sum(a1, a2), 2)
    part_b = check_log_submajor(lhs, rhs, tol)
    return {"a": part_a.to_dict(), "b": part_b.to_dict(),
            "holds": part_a.holds and part_b.holds}
