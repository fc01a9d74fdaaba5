"""Desk-scale matrix layer.

Eigenvalue and singular value sequences of dense complex matrices, the
normal-plus-quasinilpotent splitting from a Schur form, the Weyl and Lidskii
checks, the Cesaro bounds for real parts of quasinilpotent matrices, and an
explicit triangular matrix with prescribed eigenvalues and singular value
bounds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.linalg
from scipy.optimize import linear_sum_assignment

from . import seq
from .config import DEFAULT, Tolerances
from .orders import OrderVerdict, check_log_submajor

__all__ = [
    "SpectralError",
    "RingroseSplit",
    "as_matrix",
    "eigen_seq",
    "sv_seq",
    "ringrose_decompose",
    "weyl_check",
    "lidskii_check",
    "real_part",
    "imag_part",
    "quasinilpotent_sum_check",
    "prefinal_bound_check",
    "geom_estimate_check",
    "construct_from_spectrum",
    "random_matrix",
    "random_quasinilpotent",
]

E = math.e


class SpectralError(RuntimeError):
    """An eigensolver failed or a constructed matrix did not verify."""


def as_matrix(t, tol: Tolerances = DEFAULT) -> np.ndarray:
    t = np.asarray(t, dtype=complex)
    if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
        raise ValueError(f"expected a nonempty square matrix, got shape {t.shape}")
    if t.shape[0] > tol.desk_limit:
        raise ValueError(f"dimension {t.shape[0]} exceeds desk limit {tol.desk_limit}")
    if not np.all(np.isfinite(t)):
        raise ValueError("matrix has non-finite entries")
    return t


def random_matrix(rng: np.random.Generator, n: int) -> np.ndarray:
    """Independent standard normal real and imaginary parts."""
    return rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))


def random_quasinilpotent(rng: np.random.Generator, n: int) -> np.ndarray:
    return np.triu(random_matrix(rng, n), 1)


def _order_eigenvalues(lam: np.ndarray) -> np.ndarray:
    lam = np.asarray(lam, dtype=complex)
    if lam.size == 0:
        return lam
    mod = np.abs(lam)
    idx = np.argsort(-mod, kind="stable")
    lam, mod = lam[idx], mod[idx]
    # moduli within rounding of each other count as tied
    close = 64 * np.finfo(float).eps * max(1.0, float(mod[0]))
    out = []
    for group in _clusters(lam, mod, close):
        group = group[np.argsort(-group.real, kind="stable")]
        # real parts within rounding are tied as well; break on imaginary part
        for sub in _clusters(group, group.real, close):
            out.extend(sub[np.argsort(-sub.imag, kind="stable")])
    return np.array(out, dtype=complex)


def _clusters(values: np.ndarray, keys: np.ndarray, close: float):
    """Split ``values`` (sorted by nonincreasing ``keys``) into runs whose
    consecutive keys differ by at most ``close``."""
    start = 0
    for i in range(1, values.size + 1):
        if i == values.size or keys[i - 1] - keys[i] > close:
            yield values[start:i]
            start = i


def _is_triangular(t: np.ndarray) -> bool:
    return not np.any(np.tril(t, -1)) or not np.any(np.triu(t, 1))


def eigen_seq(t, tol: Tolerances = DEFAULT) -> np.ndarray:
    """All eigenvalues with algebraic multiplicity, by nonincreasing modulus;
    ties go to larger real part, then larger imaginary part.

    Triangular input is read off the diagonal, so strictly triangular
    matrices give exact zeros rather than the ``eps**(1/n)`` scatter a general
    eigensolver produces on a nilpotent matrix.
    """
    t = as_matrix(t, tol)
    if _is_triangular(t):
        return _order_eigenvalues(np.diag(t).copy())
    try:
        lam = np.linalg.eigvals(t)
    except np.linalg.LinAlgError as exc:
        raise SpectralError(f"eigensolver failed: {exc}") from exc
    return _order_eigenvalues(lam)


def sv_seq(t, tol: Tolerances = DEFAULT) -> np.ndarray:
    t = as_matrix(t, tol)
    try:
        return np.linalg.svd(t, compute_uv=False)
    except np.linalg.LinAlgError as exc:
        raise SpectralError(f"SVD failed: {exc}") from exc


def _match_error(x: np.ndarray, y: np.ndarray) -> float:
    """Largest pairwise distance under the best matching of two multisets."""
    if x.size == 0:
        return 0.0
    cost = np.abs(x[:, None] - y[None, :])
    r, c = linear_sum_assignment(cost)
    return float(cost[r, c].max())


@dataclass
class RingroseSplit:
    n_part: np.ndarray
    q_part: np.ndarray
    basis: np.ndarray
    reconstruction_error: float
    q_radius: float
    q_lower_residual: float
    eigen_match_error: float

    def report(self) -> dict:
        return {
            "reconstruction_error": self.reconstruction_error,
            "q_radius": self.q_radius,
            "q_lower_residual": self.q_lower_residual,
            "eigen_match_error": self.eigen_match_error,
        }


def ringrose_decompose(t, tol: Tolerances = DEFAULT) -> RingroseSplit:
    """Split ``t = N + Q`` from a complex Schur form ``t = Z R Z*``.

    ``N`` is the diagonal of ``R`` conjugated back (normal, same eigenvalues)
    and ``Q`` the strictly upper part conjugated back. The spectral radius of
    ``Q`` is measured in the Schur basis, where ``Q`` is triangular: an
    eigensolver run on ``Q`` directly would only resolve eigenvalues of a
    nilpotent matrix to about ``eps**(1/n)``.
    """
    t = as_matrix(t, tol)
    try:
        R, Z = scipy.linalg.schur(t, output="complex")
    except (np.linalg.LinAlgError, ValueError) as exc:
        raise SpectralError(f"Schur factorization failed: {exc}") from exc
    Zh = Z.conj().T
    n_part = (Z * np.diag(R)) @ Zh
    q_part = Z @ np.triu(R, 1) @ Zh
    recon = float(np.linalg.norm(n_part + q_part - t, 2))
    q_basis = Zh @ q_part @ Z
    q_radius = float(np.max(np.abs(np.diag(q_basis))))
    q_lower = float(np.linalg.norm(np.tril(q_basis, -1), 2))
    eig_n = np.linalg.eigvals(n_part)
    eig_t = eigen_seq(t, tol)
    return RingroseSplit(
        n_part=n_part,
        q_part=q_part,
        basis=Z,
        reconstruction_error=recon,
        q_radius=q_radius,
        q_lower_residual=q_lower,
        eigen_match_error=_match_error(eig_n, eig_t),
    )


def weyl_check(t, tol: Tolerances = DEFAULT) -> OrderVerdict:
    """``|lambda(T)| <<_log mu(T)``."""
    return check_log_submajor(seq.mu(eigen_seq(t, tol)), sv_seq(t, tol), tol)


def lidskii_check(t, tol: Tolerances = DEFAULT) -> dict:
    t = as_matrix(t, tol)
    lam = eigen_seq(t, tol)
    trace = complex(np.trace(t))
    total = complex(np.sum(lam))
    err = abs(trace - total)
    bound = tol.tau_eig * t.shape[0]
    return {
        "trace": [trace.real, trace.imag],
        "eigen_sum": [total.real, total.imag],
        "error": err,
        "bound": bound,
        "holds": err <= bound,
    }


def real_part(t) -> np.ndarray:
    t = np.asarray(t, dtype=complex)
    return (t + t.conj().T) / 2


def imag_part(t) -> np.ndarray:
    t = np.asarray(t, dtype=complex)
    return (t - t.conj().T) / 2j


def _hermitian_eigen_seq(h: np.ndarray) -> np.ndarray:
    lam = np.linalg.eigvalsh((h + h.conj().T) / 2)
    return _order_eigenvalues(lam.astype(complex)).real


def _require_quasinilpotent(q: np.ndarray, tol: Tolerances) -> None:
    """Accept exactly triangular matrices with zero diagonal, otherwise require
    ``||Q^n|| <= tau_eig ||Q||^n`` (which bounds the spectral radius by
    ``tau_eig**(1/n) ||Q||``; floating point cannot certify more)."""
    if _is_triangular(q):
        if np.any(np.diag(q)):
            raise ValueError("triangular input has a nonzero diagonal; not quasi-nilpotent")
        return
    n = q.shape[0]
    norm = float(np.linalg.norm(q, 2))
    if norm == 0.0:
        return
    power = np.linalg.matrix_power(q / norm, n)
    if float(np.linalg.norm(power, 2)) > tol.tau_eig:
        raise ValueError("input is not quasi-nilpotent within tolerance")


def quasinilpotent_sum_check(q, tol: Tolerances = DEFAULT) -> dict:
    """``|sum of eigenvalues of Re Q with modulus > 1|
    <= 400 sum_{s > 1} log s`` over the singular values ``s`` of ``2e Q``,
    and the same for ``Im Q``."""
    q = as_matrix(q, tol)
    _require_quasinilpotent(q, tol)
    s = 2 * E * sv_seq(q, tol)
    rhs = 400.0 * float(np.sum(np.log(s[s > 1])))
    parts = {}
    for name, h in (("re", real_part(q)), ("im", imag_part(q))):
        lam = _hermitian_eigen_seq(h)
        lhs = abs(float(np.sum(lam[np.abs(lam) > 1])))
        parts[name] = {"lhs": lhs, "rhs": rhs, "holds": lhs <= rhs * (1 + tol.tau_sv) + tol.tau_sv}
    return {"parts": parts, "holds": all(p["holds"] for p in parts.values())}


def _cesaro_real(h: np.ndarray) -> np.ndarray:
    return seq.cesaro(_hermitian_eigen_seq(h))


def prefinal_bound_check(q, tol: Tolerances = DEFAULT) -> dict:
    """Entrywise ``|C lambda(Re Q)| <= 200 S(mu((2e Q)^(+2)))`` and the
    ``Im Q`` analogue, on the ``dim`` entries where the left side exists."""
    q = as_matrix(q, tol)
    _require_quasinilpotent(q, tol)
    n = q.shape[0]
    rhs = 200.0 * seq.s_transform(seq.dilate(2 * E * sv_seq(q, tol), 2), tol.eps_prod)[:n]
    slack = tol.tau_sv * max(1.0, float(rhs[0]) if rhs.size else 1.0)
    parts = {}
    for name, h in (("re", real_part(q)), ("im", imag_part(q))):
        lhs = np.abs(_cesaro_real(h))
        excess = float(np.max(lhs - rhs))
        parts[name] = {"max_excess": excess, "holds": excess <= slack}
    return {"parts": parts, "holds": all(p["holds"] for p in parts.values())}


def geom_estimate_check(q, tol: Tolerances = DEFAULT) -> OrderVerdict:
    """``C lambda(Re Q) <<_log (1600 e Q)^(+4)``, and the same for ``Im Q``.

    The returned verdict is for the real part; the imaginary part's verdict
    is in ``detail`` and a failure there is reported as the overall status.
    """
    q = as_matrix(q, tol)
    _require_quasinilpotent(q, tol)
    rhs = seq.dilate(1600 * E * sv_seq(q, tol), 4)
    re = check_log_submajor(seq.mu(_cesaro_real(real_part(q))), rhs, tol)
    im = check_log_submajor(seq.mu(_cesaro_real(imag_part(q))), rhs, tol)
    verdict = re if not re.holds or im.holds else im
    return OrderVerdict(
        verdict.status,
        failure_index=verdict.failure_index,
        detail={"re": re.to_dict(), "im": im.to_dict()},
    )


# --------------------------------------------------------------------------
# prescribed eigenvalues and singular values


def _horn_triangular(lam: np.ndarray, sig: np.ndarray) -> np.ndarray:
    """Upper triangular matrix with diagonal ``lam`` and singular values
    ``sig``, assuming ``|lam| <<_log sig`` with equal full products.

    Peels off ``lam[0]`` with a 2x2 block [[lam0, x], [0, m]] whose singular
    values are ``sig[0]`` and ``sig[j]`` (``j`` the first index past 0 with
    ``sig[j] <= |lam0|``), recurses on the remaining eigenvalues with ``m``
    replacing the two consumed singular values, and glues the recursive
    result back through its SVD.
    """
    n = lam.size
    if n == 1:
        return lam.reshape(1, 1).astype(complex)
    a = abs(lam[0])
    if a == 0.0:
        # all eigenvalues vanish: a weighted shift has the right singular values
        out = np.zeros((n, n), dtype=complex)
        out[np.arange(n - 1), np.arange(1, n)] = sig[: n - 1]
        return out
    below = np.flatnonzero(sig[1:] <= a)
    j = int(below[0]) + 1 if below.size else n - 1
    s1, sj = float(sig[0]), float(sig[j])
    a = min(a, s1)
    m = s1 * sj / a
    x = math.sqrt(max(0.0, (s1 * s1 - a * a) * (a * a - sj * sj)) / (a * a))
    rest = np.delete(sig, [0, j])
    c = np.sort(np.concatenate([rest, [m]]))[::-1]
    p = int(np.flatnonzero(c == m)[0])
    B = _horn_triangular(lam[1:], c)
    _, _, Qh = np.linalg.svd(B)
    out = np.zeros((n, n), dtype=complex)
    out[0, 0] = lam[0]
    out[0, 1:] = x * Qh[p, :]
    out[1:, 1:] = B
    return out


def construct_from_spectrum(y, x, tol: Tolerances = DEFAULT,
                            rel_tol: float = 1e-7) -> np.ndarray:
    """Matrix ``T`` with eigenvalues ``y`` and singular values ``<= x``.

    Requires ``|y|`` nonincreasing, ``len(y) == len(x)`` and
    ``|y| <<_log x``. When the full products differ, the last entry of ``x``
    is lowered until they agree, which keeps every earlier prefix condition
    intact. The result is upper triangular with diagonal ``y`` and is checked
    before it is returned.
    """
    y = np.asarray(y, dtype=complex).ravel()
    x = seq.as_nonincreasing(x)
    if y.size != x.size or y.size == 0:
        raise ValueError("y and x must be nonempty and of equal length")
    if y.size > tol.desk_limit:
        raise ValueError(f"dimension {y.size} exceeds desk limit {tol.desk_limit}")
    if np.any(np.diff(np.abs(y)) > 0):
        raise ValueError("|y| must be nonincreasing")
    pre = check_log_submajor(np.abs(y), x, tol)
    if not pre.holds:
        raise ValueError(f"|y| is not log-submajorized by x: {pre.to_dict()}")

    target = x.copy()
    ay = np.abs(y)
    if np.any(ay <= tol.eps_prod):
        target[-1] = 0.0
    else:
        # every x(k) is positive here, since its prefix products dominate |y|'s
        log_gap = float(np.sum(np.log(x)) - np.sum(np.log(ay)))
        if log_gap > 0:
            target[-1] = x[-1] * math.exp(-log_gap)
    T = _horn_triangular(y, np.maximum(target, 0.0))

    sv = np.linalg.svd(T, compute_uv=False)
    abs_slack = 64 * np.finfo(float).eps * max(1.0, float(x[0]))
    if np.any(sv > x * (1 + rel_tol) + abs_slack):
        raise SpectralError("constructed matrix exceeds the singular value bound")
    if np.any(np.tril(T, -1)) or np.max(np.abs(np.diag(T) - y), initial=0.0) > rel_tol:
        raise SpectralError("constructed matrix does not carry the prescribed eigenvalues")
    return T
