"""Finite models of principal ideals and their logarithmic envelopes.

A principal ideal is represented by its generator's singular value sequence.
A nonincreasing ``x`` belongs to it when ``x <= 2**l sigma_{2**l} g`` for some
``l``; it belongs to the logarithmic envelope when ``x <<_log 2**l
sigma_{2**l} g`` for some ``l``. Witnesses are searched up to ``l_max``.

Floating-point generators only ever certify membership: a finite truncation
says nothing about what happens past its last entry, so an unsuccessful
search is ``Inconclusive``. Exact :class:`~majorize.dyadic.DyadicStepSeq`
inputs can return ``Fails``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from . import dyadic, seq
from .config import DEFAULT, Tolerances
from .dyadic import NEG_INF, DyadicStepSeq
from .orders import OrderVerdict, Status, log_prefix_verdict
from .spectral import eigen_seq

__all__ = [
    "PrincipalIdealModel",
    "ideal_member",
    "le_member",
    "geom_stable_check",
    "commutator_member",
]

LN2 = math.log(2.0)

Generator = Union[np.ndarray, DyadicStepSeq]


@dataclass
class PrincipalIdealModel:
    generator: Generator
    l_max: int = DEFAULT.l_max
    truncation: Optional[int] = None

    def __post_init__(self):
        if self.l_max < 0:
            raise ValueError("l_max must be >= 0")
        if not isinstance(self.generator, DyadicStepSeq):
            self.generator = seq.as_nonincreasing(self.generator)

    @property
    def exact(self) -> bool:
        return isinstance(self.generator, DyadicStepSeq)

    def horizon(self, length: Optional[int] = None) -> int:
        """Number of leading entries that a query of ``length`` compares."""
        limits = [v for v in (length, self.truncation) if v is not None]
        if self.exact and self.generator.horizon != dyadic.INF:
            limits.append(self.generator.horizon)
        if not limits:
            raise ValueError("query needs a finite horizon")
        return min(limits)


def _dominant_log(ideal: PrincipalIdealModel, l: int, n: int) -> Optional[np.ndarray]:
    """Natural logs of the first ``n`` entries of ``2**l sigma_{2**l} g``, or
    ``None`` when the generator does not reach that far."""
    g = ideal.generator
    if isinstance(g, DyadicStepSeq):
        if n > g.horizon * (1 << l):
            return None
        out = np.empty(n)
        for k in range(n):
            q = g.log2_at(k >> l)
            out[k] = -np.inf if q == NEG_INF else (l + float(q)) * LN2
        return out
    rhs = seq.dilate(g, 1 << l)
    if rhs.size < n:
        return None
    with np.errstate(divide="ignore"):
        return l * LN2 + np.log(rhs[:n])


def _as_logs(x: np.ndarray, tol: Tolerances) -> np.ndarray:
    logs = np.full(x.size, -np.inf)
    pos = x > tol.eps_prod
    logs[pos] = np.log(x[pos])
    return logs


def ideal_member(x, ideal: PrincipalIdealModel, tol: Tolerances = DEFAULT) -> OrderVerdict:
    """Smallest ``l <= l_max`` with ``x <= 2**l sigma_{2**l} g`` entrywise."""
    if isinstance(x, DyadicStepSeq):
        return _ideal_member_exact(x, ideal)
    x = seq.as_nonincreasing(x)
    n = ideal.horizon(x.size)
    lx = _as_logs(x[:n], tol)
    for l in range(ideal.l_max + 1):
        rhs = _dominant_log(ideal, l, n)
        if rhs is not None and np.all(lx <= rhs + tol.tau_log):
            return OrderVerdict(Status.HOLDS, witness=l)
    return OrderVerdict(Status.INCONCLUSIVE, bound_searched=ideal.l_max)


def _ideal_member_exact(x: DyadicStepSeq, ideal: PrincipalIdealModel) -> OrderVerdict:
    g = ideal.generator
    if not isinstance(g, DyadicStepSeq):
        raise TypeError("exact membership needs an exact generator")
    hi = min(v for v in (x.horizon, g.horizon, ideal.truncation) if v is not None)
    undecided = False
    last_bad = None
    for l in range(ideal.l_max + 1):
        ok, bad = dyadic.exact_le(x, [dyadic.scale(dyadic.dilate(g, l), l)], hi=hi)
        if ok:
            return OrderVerdict(Status.HOLDS, witness=l)
        if ok is None:
            undecided = True
        last_bad = bad
    if undecided:
        return OrderVerdict(Status.INCONCLUSIVE, bound_searched=ideal.l_max)
    return OrderVerdict(Status.FAILS, failure_index=last_bad, bound_searched=ideal.l_max,
                        detail={"fails_for_every_l_up_to": ideal.l_max})


def le_member(b, ideal: PrincipalIdealModel, tol: Tolerances = DEFAULT) -> OrderVerdict:
    """Smallest ``l <= l_max`` with ``b <<_log 2**l sigma_{2**l} g``."""
    b = seq.as_nonincreasing(b)
    n = ideal.horizon(b.size)
    lb = np.cumsum(_as_logs(b[:n], tol))
    for l in range(ideal.l_max + 1):
        rhs = _dominant_log(ideal, l, n)
        if rhs is None:
            continue
        with np.errstate(invalid="ignore"):
            v = log_prefix_verdict(lb, np.cumsum(rhs), tol)
        if v.holds:
            return OrderVerdict(Status.HOLDS, witness=l)
    return OrderVerdict(Status.INCONCLUSIVE, bound_searched=ideal.l_max)


def geom_stable_check(ideal: PrincipalIdealModel, tol: Tolerances = DEFAULT) -> OrderVerdict:
    """Whether the running geometric mean of the generator lies in the ideal.

    For the exact tower generator the answer is a certified ``Fails``: a
    witness ``l`` would force ``T^2 mu <= 2**(l+1) sigma_{2**(l+1)} T mu``,
    which ``dyadic.verify_t_main(l + 1, 2**(l + 2))`` refutes.
    """
    g = ideal.generator
    if isinstance(g, DyadicStepSeq):
        return _geom_stable_exact(ideal)
    n = ideal.horizon(g.size)
    return ideal_member(seq.t_transform(g[:n], tol.eps_prod), ideal, tol)


def _geom_stable_exact(ideal: PrincipalIdealModel) -> OrderVerdict:
    g = ideal.generator
    # the refuting indices of the tower lie past any truncation, so a
    # truncated tower must not be tested on its horizon alone
    if dyadic.is_tower(g):
        certs = [dyadic.verify_t_main(l + 1, 2 ** (l + 2)) for l in range(ideal.l_max + 1)]
        if all(c["certified"] for c in certs):
            return OrderVerdict(
                Status.FAILS,
                bound_searched=ideal.l_max,
                detail={
                    "refuted_by": [
                        {"l": c["l"], "n": c["n"], "index": f"2^{c['gamma_log2']}-1"}
                        for c in certs
                    ]
                },
            )
        return OrderVerdict(Status.INCONCLUSIVE, bound_searched=ideal.l_max)
    hi = ideal.horizon()
    for l in range(ideal.l_max + 1):
        if _t_dominated_exact(g, l, hi):
            return OrderVerdict(Status.HOLDS, witness=l)
    return OrderVerdict(Status.INCONCLUSIVE, bound_searched=ideal.l_max)


def _t_dominated_exact(g: DyadicStepSeq, l: int, hi: int) -> bool:
    """``T g <= 2**l sigma_{2**l} g`` on ``[0, hi)``.

    ``T g`` is nonincreasing, so on each constant piece of the right side it
    is enough to compare at the piece's first index.
    """
    for start in g.breakpoints():
        k = start << l
        if k >= hi:
            break
        rhs = g.log2_at(start)
        lhs = dyadic.exact_t_log2(g, k)
        if lhs == NEG_INF:
            continue
        if rhs == NEG_INF or lhs > l + rhs:
            return False
    return True


def commutator_member(t, ideal: PrincipalIdealModel, tol: Tolerances = DEFAULT) -> OrderVerdict:
    """Membership of the Cesaro means of the eigenvalue sequence of ``t``."""
    c = seq.cesaro(eigen_seq(t, tol))
    return ideal_member(seq.mu(c), ideal, tol)
