"""Exact step sequences with dyadic values over big-integer index ranges.

A :class:`DyadicStepSeq` is a nonincreasing, piecewise-constant sequence whose
values are ``2**q`` with ``q`` a :class:`fractions.Fraction` (or zero, stored
as ``NEG_INF``). Interval endpoints are Python integers and may be
astronomically large (``2**(2**21)`` is routine); the last interval may be
unbounded (``INF``). All arithmetic is on integers and fractions; the two
infinities are sentinels only and never enter a computation.

The module builds the tower sequence ``mu(k) = 2**(-2**(3n))`` on
``[2**(2**(3(n-1))), 2**(2**(3n)))`` and its companion ``A0``, and certifies
the inequalities about them: bounds on the running geometric mean, the
failure of geometric stability, and the splitting estimate for sequences
dominated by the tower.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

__all__ = [
    "INF",
    "NEG_INF",
    "Interval",
    "DyadicStepSeq",
    "CertifiedBound",
    "gamma",
    "tower_sequence",
    "a0_sequence",
    "sample_level_indices",
    "exact_ops",
    "dilate",
    "scale",
    "power",
    "sup",
    "add_bound",
    "truncate",
    "exact_prefix_log2",
    "exact_t_log2",
    "exact_le",
    "exact_log_submajor",
    "le_sum",
    "harmonic_bound",
    "harmonic_bound_dyadic",
    "t_aux_identity",
    "verify_t_aux",
    "verify_t_main",
    "verify_a0_bound",
    "verify_horror",
    "is_tower",
]

INF = math.inf  # unbounded interval end
NEG_INF = -math.inf  # log2 of zero

# 0.6931 < ln 2 < 0.6932
LN2_LO = Fraction(6931, 10000)
LN2_HI = Fraction(6932, 10000)

Log2 = Union[Fraction, float]
End = Union[int, float]


def _frac(v) -> Log2:
    if v == NEG_INF or v == "-inf":
        return NEG_INF
    return Fraction(v)


@dataclass(frozen=True)
class Interval:
    start: int
    end: End
    log2: Log2

    def __len__(self) -> int:
        if self.end == INF:
            raise OverflowError("unbounded interval has no length")
        return self.end - self.start


class DyadicStepSeq:
    """Nonincreasing piecewise-constant sequence with values ``2**log2``."""

    def __init__(self, intervals: Iterable[Interval], name: Optional[str] = None):
        ivs = [Interval(int(iv.start), iv.end if iv.end == INF else int(iv.end),
                        _frac(iv.log2)) for iv in intervals]
        if not ivs:
            raise ValueError("at least one interval required")
        if ivs[0].start != 0:
            raise ValueError("first interval must start at 0")
        for prev, cur in zip(ivs, ivs[1:]):
            if prev.end == INF or prev.end != cur.start:
                raise ValueError("intervals must be consecutive")
            if cur.log2 > prev.log2:
                raise ValueError("log2 values must be nonincreasing")
        for iv in ivs:
            if not iv.start < iv.end:
                raise ValueError(f"empty interval starting at {iv.start}")
        self.intervals: tuple[Interval, ...] = tuple(_merge(ivs))
        self.name = name
        self._starts = [iv.start for iv in self.intervals]

    @classmethod
    def from_pieces(cls, pieces: Sequence[tuple], name: Optional[str] = None):
        return cls([Interval(*p) for p in pieces], name=name)

    @property
    def horizon(self) -> End:
        return self.intervals[-1].end

    def breakpoints(self) -> list[int]:
        return list(self._starts)

    def log2_at(self, k: int) -> Log2:
        if k < 0 or k >= self.horizon:
            raise IndexError(f"index {k} outside [0, horizon)")
        i = bisect.bisect_right(self._starts, k) - 1
        return self.intervals[i].log2

    def __eq__(self, other) -> bool:
        return isinstance(other, DyadicStepSeq) and self.intervals == other.intervals

    def __hash__(self) -> int:
        return hash(self.intervals)

    def __repr__(self) -> str:
        head = ", ".join(f"[{_short(iv.start)},{_short(iv.end)}):{iv.log2}"
                         for iv in self.intervals[:4])
        more = "" if len(self.intervals) <= 4 else f", ... ({len(self.intervals)} pieces)"
        return f"DyadicStepSeq({head}{more})"

    def to_json(self) -> dict:
        return {"intervals": [
            {"start": str(iv.start),
             "end": "inf" if iv.end == INF else str(iv.end),
             "log2": "-inf" if iv.log2 == NEG_INF else str(iv.log2)}
            for iv in self.intervals]}

    @classmethod
    def from_json(cls, data: dict) -> "DyadicStepSeq":
        ivs = []
        for item in data["intervals"]:
            end = INF if str(item["end"]) == "inf" else int(item["end"])
            ivs.append(Interval(int(item["start"]), end, _frac(str(item["log2"]))))
        return cls(ivs)

    def to_floats(self, length: int) -> list[float]:
        """First ``length`` values as floats (for bridging to numeric code)."""
        if length > self.horizon:
            raise IndexError("length exceeds horizon")
        out = []
        for iv in self.intervals:
            if iv.start >= length:
                break
            stop = min(iv.end, length)
            v = 0.0 if iv.log2 == NEG_INF else 2.0 ** float(iv.log2)
            out.extend([v] * (stop - iv.start))
        return out


def _short(v) -> str:
    if v == INF:
        return "inf"
    if v > 10**12 and v & (v - 1) == 0:
        return f"2^{v.bit_length() - 1}"
    return str(v)


def _merge(ivs: list[Interval]) -> list[Interval]:
    out = [ivs[0]]
    for iv in ivs[1:]:
        if iv.log2 == out[-1].log2:
            out[-1] = Interval(out[-1].start, iv.end, iv.log2)
        else:
            out.append(iv)
    return out


# --------------------------------------------------------------------------
# the two sequences


def gamma(n: int) -> int:
    """``2**(3n + 2**(3n))``."""
    return 1 << (3 * n + (1 << (3 * n)))


def tower_sequence(n_max: int) -> DyadicStepSeq:
    """``2**(-1)`` on ``[0, 2)`` then ``2**(-2**(3n))`` on
    ``[2**(2**(3(n-1))), 2**(2**(3n)))`` for ``1 <= n <= n_max``."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    pieces = [(0, 2, -1)]
    for n in range(1, n_max + 1):
        pieces.append((1 << (1 << (3 * (n - 1))), 1 << (1 << (3 * n)), -(1 << (3 * n))))
    return DyadicStepSeq.from_pieces(pieces, name=f"tower({n_max})")


def a0_sequence(n_max: int) -> DyadicStepSeq:
    """``2**(-2**(3(n+1)))`` on ``[gamma(n-1), gamma(n))`` with ``gamma(-1) = 0``."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    pieces = []
    start = 0
    for n in range(n_max + 1):
        pieces.append((start, gamma(n), -(1 << (3 * (n + 1)))))
        start = gamma(n)
    return DyadicStepSeq.from_pieces(pieces, name=f"a0({n_max})")


def is_tower(x: DyadicStepSeq) -> bool:
    """Whether ``x`` is exactly a tower prefix ``tower_sequence(n)``."""
    for n, iv in enumerate(x.intervals):
        # compare cheap fields first; level endpoints grow doubly exponentially
        if iv.log2 != (-1 if n == 0 else -(1 << (3 * n))):
            return False
        start = 0 if n == 0 else (2 if n == 1 else 1 << (1 << (3 * (n - 1))))
        if iv.start != start or iv.end != 1 << (1 << (3 * n)):
            return False
    return True


# --------------------------------------------------------------------------
# exact operations


def dilate(x: DyadicStepSeq, l: int) -> DyadicStepSeq:
    """``sigma_{2**l}``: every endpoint multiplied by ``2**l``."""
    if l < 0:
        raise ValueError("dilation exponent must be >= 0")
    f = 1 << l
    return DyadicStepSeq(Interval(iv.start * f, iv.end if iv.end == INF else iv.end * f, iv.log2)
                         for iv in x.intervals)


def scale(x: DyadicStepSeq, l) -> DyadicStepSeq:
    """Multiply by ``2**l``."""
    l = Fraction(l)
    return DyadicStepSeq(Interval(iv.start, iv.end, iv.log2 if iv.log2 == NEG_INF else iv.log2 + l)
                         for iv in x.intervals)


def power(x: DyadicStepSeq, p) -> DyadicStepSeq:
    """Entrywise ``x**p`` for ``p > 0``."""
    p = Fraction(p)
    if p <= 0:
        raise ValueError("power must be positive")
    return DyadicStepSeq(Interval(iv.start, iv.end, iv.log2 if iv.log2 == NEG_INF else iv.log2 * p)
                         for iv in x.intervals)


def truncate(x: DyadicStepSeq, horizon: int) -> DyadicStepSeq:
    if horizon <= 0 or horizon > x.horizon:
        raise ValueError("truncation horizon out of range")
    ivs = [Interval(iv.start, min(iv.end, horizon), iv.log2)
           for iv in x.intervals if iv.start < horizon]
    return DyadicStepSeq(ivs)


def _common_points(seqs: Sequence[DyadicStepSeq], lo: int, hi: End) -> list[int]:
    pts = {lo}
    for s in seqs:
        starts = s._starts
        i = bisect.bisect_right(starts, lo)
        j = bisect.bisect_left(starts, hi) if hi != INF else len(starts)
        pts.update(starts[i:j])
    return sorted(pts)


def sup(x: DyadicStepSeq, y: DyadicStepSeq) -> DyadicStepSeq:
    """Pointwise maximum on the common horizon."""
    h = min(x.horizon, y.horizon)
    pts = _common_points((x, y), 0, h) + [h]
    return DyadicStepSeq(Interval(a, b, max(x.log2_at(a), y.log2_at(a)))
                         for a, b in zip(pts, pts[1:]))


def add_bound(x: DyadicStepSeq, y: DyadicStepSeq) -> DyadicStepSeq:
    """Dyadic upper bound ``2 max(x, y) >= x + y``."""
    return scale(sup(x, y), 1)


_OPS = {"dilate": dilate, "scale": scale, "pow": power, "sup": sup,
        "add_bound": add_bound, "truncate": truncate}


def exact_ops(x: DyadicStepSeq, op: str, arg) -> DyadicStepSeq:
    """Dispatch by name: ``dilate`` (by ``2**arg``), ``scale`` (by
    ``2**arg``), ``pow``, ``sup``, ``add_bound`` (``arg`` a sequence) and
    ``truncate``."""
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unsupported exact operation {op!r}") from None
    return fn(x, arg)


# --------------------------------------------------------------------------
# prefix products and comparisons


def exact_prefix_log2(x: DyadicStepSeq, k: int) -> Log2:
    """``log2 prod_{m<=k} x(m)`` as a fraction (``NEG_INF`` once a zero is
    included)."""
    if k < 0 or k >= x.horizon:
        raise IndexError(f"index {k} outside [0, horizon)")
    total = Fraction(0)
    for iv in x.intervals:
        if iv.start > k:
            break
        count = min(iv.end, k + 1) - iv.start
        if iv.log2 == NEG_INF:
            return NEG_INF
        total += count * iv.log2
    return total


def exact_t_log2(x: DyadicStepSeq, k: int) -> Log2:
    """``log2`` of the running geometric mean at ``k``."""
    p = exact_prefix_log2(x, k)
    return p if p == NEG_INF else p / (k + 1)


def le_sum(q: Log2, rs: Sequence[Log2], cap: int = 4096) -> Optional[bool]:
    """Exact ``2**q <= sum(2**r for r in rs)``; ``None`` if undecidable here.

    Decided exactly whenever the exponent differences that matter are
    integers; rational differences are handled through an integer power.
    """
    if q == NEG_INF:
        return True
    finite = [r for r in rs if r != NEG_INF]
    if not finite:
        return False
    top = max(finite)
    if q <= top:
        return True
    d = q - top
    if 2 ** math.floor(d) > len(finite):
        return False
    diffs = [r - top for r in finite]
    if any(e.denominator != 1 for e in diffs if e >= -cap):
        return None
    kept = [int(e) for e in diffs if e >= -cap]
    dropped = len(diffs) - len(kept)
    s_lo = sum(Fraction(1, 1 << -e) for e in kept)
    s_hi = s_lo + Fraction(dropped, 1 << cap)
    # compare 2**(p/s) with S as 2**p vs S**s
    p, s = d.numerator, d.denominator
    if s > 64:
        return None
    lhs = Fraction(2) ** p
    if lhs <= s_lo ** s:
        return True
    if lhs > s_hi ** s:
        return False
    return None


def exact_le(b: DyadicStepSeq, terms: Sequence[DyadicStepSeq],
             lo: int = 0, hi: Optional[End] = None) -> tuple[Optional[bool], Optional[int]]:
    """Decide ``b <= sum(terms)`` pointwise on ``[lo, hi)``.

    Returns ``(verdict, first_bad_index)``; the verdict is ``None`` when some
    point could not be decided.
    """
    if hi is None:
        hi = min([b.horizon] + [t.horizon for t in terms])
    undecided = None
    for k in _common_points([b, *terms], lo, hi):
        if k >= hi:
            break
        ok = le_sum(b.log2_at(k), [t.log2_at(k) for t in terms])
        if ok is False:
            return False, k
        if ok is None and undecided is None:
            undecided = k
    if undecided is not None:
        return None, undecided
    return True, None


def exact_log_submajor(b: DyadicStepSeq, a: DyadicStepSeq,
                       hi: Optional[int] = None) -> tuple[bool, Optional[int]]:
    """Decide ``prod_{m<=k} b(m) <= prod_{m<=k} a(m)`` for all ``k < hi``.

    Both prefix log-products are linear in ``k`` between merged breakpoints,
    so it suffices to compare them at the last index of every merged piece.
    """
    if hi is None:
        hi = min(b.horizon, a.horizon)
    pts = _common_points((b, a), 0, hi) + [hi]
    for start, end in zip(pts, pts[1:]):
        for k in (start, end - 1):
            pb, pa = exact_prefix_log2(b, k), exact_prefix_log2(a, k)
            if pb == NEG_INF:
                continue
            if pa == NEG_INF or pb > pa:
                return False, k
    return True, None


# --------------------------------------------------------------------------
# harmonic sums


@dataclass(frozen=True)
class CertifiedBound:
    lower: Fraction
    upper: Fraction

    def __post_init__(self):
        if self.lower > self.upper:
            raise ValueError("lower bound exceeds upper bound")

    def to_json(self) -> dict:
        return {"lower": str(self.lower), "upper": str(self.upper)}


def _ln_enclosure(num: int, den: int, terms: int = 60) -> CertifiedBound:
    """Rational enclosure of ``ln(num/den)`` for ``num >= den > 0``.

    Uses ``ln(r) = k ln 2 + ln(m)`` with ``m = r / 2**k`` in ``[1, 2)`` and the
    atanh series for ``ln m``, truncated with a geometric tail bound.
    """
    if num < den or den <= 0:
        raise ValueError("need num >= den > 0")
    m = Fraction(num, den)
    k = 0
    while m >= 2:
        m /= 2
        k += 1
    z = (m - 1) / (m + 1)  # in [0, 1/3)
    z2 = z * z
    partial = Fraction(0)
    power = z
    for j in range(terms):
        partial += power / (2 * j + 1)
        power *= z2
    tail = 2 * power / (2 * terms + 1) / (1 - z2)
    return CertifiedBound(k * LN2_LO + 2 * partial, k * LN2_HI + 2 * partial + tail)


def harmonic_bound(a: int, b: int) -> CertifiedBound:
    """Enclose ``sum_{m=a}^{b-1} 1/(m+1)`` by ``[ln((b+1)/(a+1)), ln(b/a)]``."""
    if not 0 < a <= b:
        raise ValueError("need 0 < a <= b")
    lo = _ln_enclosure(b + 1, a + 1).lower
    hi = _ln_enclosure(b, a).upper
    return CertifiedBound(lo, hi)


def harmonic_bound_dyadic(p: int, q: int, cap: int = 64) -> CertifiedBound:
    """The same enclosure for ``a = 2**p``, ``b = 2**q`` without forming them:
    ``ln(b/a) = (q - p) ln 2`` and ``ln((b+1)/(a+1)) >= (q - p) ln 2 - 1/a``,
    with ``1/a <= 2**-min(p, cap)``."""
    if not 0 <= p <= q:
        raise ValueError("need 0 <= p <= q")
    lo = (q - p) * LN2_LO - Fraction(1, 1 << min(p, cap))
    hi = (q - p) * LN2_HI
    return CertifiedBound(lo, hi)


# --------------------------------------------------------------------------
# certified checks


def _level_range(n: int) -> tuple[int, int]:
    return 1 << (1 << (3 * n)), 1 << (1 << (3 * (n + 1)))


def t_aux_identity(n: int, k: int, tower: Optional[DyadicStepSeq] = None) -> tuple[Fraction, int]:
    """Both sides of ``(k+1) 2**(3(n+1)) + log2 prod_{m<=k} mu(m)
    = 14 + 7 sum_{s=1}^n gamma(s)`` for ``k`` in level ``n``."""
    tower = tower or tower_sequence(n + 1)
    lhs = (k + 1) * (1 << (3 * (n + 1))) + exact_prefix_log2(tower, k)
    rhs = 14 + 7 * sum(gamma(s) for s in range(1, n + 1))
    return lhs, rhs


def sample_level_indices(n: int, count: int, rng) -> list[int]:
    """``count`` distinct indices in level ``n``: both ends, ``gamma(n) - 1``,
    then random ones spread over every binary order of magnitude."""
    lo, hi = _level_range(n)
    picks = {lo, hi - 1, gamma(n) - 1}
    while len(picks) < count:
        bits = int(rng.integers(lo.bit_length() - 1, hi.bit_length() - 1))
        low = max(lo, 1 << bits)
        span = min(hi, 1 << (bits + 1)) - low
        picks.add(low + int(rng.integers(0, 2**62)) * span // 2**62)
    return sorted(picks)[:count]


def verify_t_aux(n: int, sample_ks: Iterable[int]) -> dict:
    """Check ``7 gamma(n)/(k+1) <= 2**(3(n+1)) + log2 (T mu)(k)
    <= 1 + 7 gamma(n)/(k+1)`` exactly for each sampled ``k`` in
    ``[2**(2**(3n)), 2**(2**(3(n+1))))``."""
    if n < 0:
        raise ValueError("n must be >= 0")
    lo_k, hi_k = _level_range(n)
    tower = tower_sequence(n + 1)
    g = gamma(n)
    shift = 1 << (3 * (n + 1))
    rows = []
    for k in sample_ks:
        if not lo_k <= k < hi_k:
            raise ValueError(f"k={k} outside level {n}")
        mid = shift + exact_t_log2(tower, k)
        lower = Fraction(7 * g, k + 1)
        upper = 1 + lower
        rows.append({"k": str(k), "lower": str(lower), "value": str(mid),
                     "upper": str(upper), "holds": lower <= mid <= upper})
    return {"n": n, "gamma": str(g), "checks": rows,
            "holds": all(r["holds"] for r in rows)}


def verify_t_main(l: int, n: int) -> dict:
    """Certify that ``(T^2 mu)(gamma(n)-1) > (2**l sigma_{2**l} T mu)(gamma(n)-1)``.

    Both sides are tracked as log2 exponents relative to ``-2**(3(n+1))``.
    The left side is at least ``7 H`` where ``H`` is the harmonic sum over
    ``[2**(2**(3n)), gamma(n))``, enclosed via ``harmonic_bound_dyadic``; the
    right side is at most ``l + 1 + 7 * 2**l`` by the running-mean upper bound
    at ``k = 2**(3n - l + 2**(3n)) - 1``.
    """
    if l < 1:
        raise ValueError("l must be >= 1")
    if n < 2 ** (l + 1):
        raise ValueError(f"need n >= 2**(l+1) = {2 ** (l + 1)}, got n={n}")
    p = 1 << (3 * n)  # log2 of the level start 2**(2**(3n))
    q = 3 * n + p  # log2 of gamma(n)
    h = harmonic_bound_dyadic(p, q)
    left_lower = 7 * h.lower
    # index used on the right: k + 1 = gamma(n) / 2**l, inside level n since l < 3n
    k1_log2 = q - l
    applicable = p <= k1_log2 < (1 << (3 * (n + 1)))
    right_upper = l + 1 + 7 * (1 << l)
    return {
        "l": l,
        "n": n,
        "gamma_log2": q,
        "harmonic": h.to_json(),
        "harmonic_at_least_n": h.lower >= n,
        "left_exponent_lower": str(left_lower),
        "right_exponent_upper": str(right_upper),
        "right_index_in_level": applicable,
        "integer_inequality": 7 * n >= l + 1 + 7 * (1 << l),
        "certified": applicable and h.lower >= n and left_lower > right_upper,
    }


def verify_a0_bound(l: int, n_max: int) -> dict:
    """Check ``sigma_{2**l} A0 <= sigma_{2**l} (A0 cut at gamma(l-1)) + mu(A)``
    exactly at every breakpoint, and ``3n + l + 2**(3n) <= 2**(3(n+1))`` for
    ``l <= n <= n_max``."""
    if l < 1:
        raise ValueError("l must be >= 1")
    a0 = a0_sequence(n_max)
    lhs = dilate(a0, l)
    head = DyadicStepSeq(
        [iv for iv in a0_sequence(l - 1).intervals]
        + [Interval(gamma(l - 1), INF, NEG_INF)]
    )
    # the tower must reach past the dilated horizon of A0
    m = 0
    while (1 << (1 << (3 * m))) < lhs.horizon:
        m += 1
    tower = tower_sequence(m)
    ok, bad = exact_le(lhs, [dilate(head, l), tower], hi=lhs.horizon)
    facts = {str(n): 3 * n + l + (1 << (3 * n)) <= (1 << (3 * (n + 1)))
             for n in range(l, n_max + 1)}
    return {
        "l": l,
        "n_max": n_max,
        "breakpoints_checked": len(_common_points([lhs, dilate(head, l), tower], 0, lhs.horizon)),
        "inequality": ok,
        "first_failure": None if bad is None else str(bad),
        "arithmetic": facts,
        "holds": bool(ok) and all(facts.values()),
    }


def _horror_intervals(l: int, horizon: int) -> list[tuple[str, int, int]]:
    """The case split: a head ``[0, 2)`` then, for every level ``n``,
    ``[2**p, 2**(1+p))``, ``[2**(1+p), 2**(l+p))``, ``[2**(l+p), gamma(n))``,
    ``[gamma(n), 2**(2**(3(n+1))))`` with ``p = 2**(3n)``, clipped to be
    monotone so the pieces partition the range."""
    out = [("head", 0, 2)]
    n = 0
    while True:
        p = 1 << (3 * n)
        cuts = [1 << p, 1 << (1 + p), 1 << (max(l, 1) + p), gamma(n), 1 << (1 << (3 * (n + 1)))]
        for i in range(1, len(cuts)):
            cuts[i] = max(cuts[i], cuts[i - 1])
        names = ("near-start", "dilated", "a0", "tail")
        for name, a, b in zip(names, cuts, cuts[1:]):
            a, b = min(a, horizon), min(b, horizon)
            if a < b:
                out.append((f"n={n}:{name}", a, b))
        if cuts[-1] >= horizon:
            return out
        n += 1


def verify_horror(b: DyadicStepSeq, l: int, n_max: int = 2) -> dict:
    """Check ``b <= 2**l A0 + 256 sigma_2 mu(A) + sigma_{2**l}(mu(A)**4)``
    exactly, interval by interval, on the horizon shared with
    ``tower_sequence(n_max)``.

    The premises (``b <= 2**l sigma_{2**l} mu(A)`` and ``b <<_log mu(A)``)
    are checked and reported; the inequality is evaluated either way.
    """
    if l < 0:
        raise ValueError("l must be >= 0")
    tower = tower_sequence(n_max)
    a0 = a0_sequence(n_max)
    terms = [scale(a0, l), scale(dilate(tower, 1), 8), dilate(power(tower, 4), l)]
    horizon = min([b.horizon, tower.horizon] + [t.horizon for t in terms])
    dominated, dom_bad = exact_le(b, [scale(dilate(tower, l), l)], hi=horizon)
    logmaj, log_bad = exact_log_submajor(b, tower, hi=horizon)
    rows = []
    for name, lo, hi in _horror_intervals(l, horizon):
        ok, bad = exact_le(b, terms, lo=lo, hi=hi)
        rows.append({"interval": name, "start": str(lo), "end": str(hi),
                     "holds": ok, "first_failure": None if bad is None else str(bad)})
    return {
        "l": l,
        "horizon": str(horizon),
        "premise_dominated": dominated,
        "premise_dominated_failure": None if dom_bad is None else str(dom_bad),
        "premise_log_submajorized": logmaj,
        "premise_log_failure": None if log_bad is None else str(log_bad),
        "intervals": rows,
        "holds": all(r["holds"] is True for r in rows),
    }
