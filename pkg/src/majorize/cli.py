"""Command-line front end.

Exit codes: 0 everything holds, 1 some check fails, 2 something is
inconclusive and nothing fails, 64 bad arguments or input files, 70 a
computation broke down.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from . import __version__, dyadic, io, seq
from .config import DEFAULT, Tolerances
from .ideals import PrincipalIdealModel, commutator_member, geom_stable_check, ideal_member, le_member
from .orders import OrderVerdict, Status, check_hl_submajor, check_log_submajor, check_uniform_submajor
from .spectral import (
    SpectralError,
    construct_from_spectrum,
    geom_estimate_check,
    lidskii_check,
    prefinal_bound_check,
    quasinilpotent_sum_check,
    ringrose_decompose,
    weyl_check,
)
from .suite import NAMES, REGISTRY, SuiteConfig, exit_code, run_suite

EXIT_OK = 0
EXIT_FAILS = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 64
EXIT_SOFTWARE = 70


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        # prefix matching would let the top-level parser claim --l as --l-max
        kwargs.setdefault("allow_abbrev", False)
        super().__init__(*args, **kwargs)

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _common_flags() -> argparse.ArgumentParser:
    # SUPPRESS lets the flags appear before or after the subcommand
    p = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS,
                                allow_abbrev=False)
    p.add_argument("--seed", type=int, help="random seed (default 0)")
    p.add_argument("--out", type=Path, help="write the JSON result to this file")
    p.add_argument("--tol-log", type=float, help="slack on log prefix sums")
    p.add_argument("--lambda-max", type=int, help="largest uniform witness searched")
    p.add_argument("--l-max", type=int, help="largest ideal witness searched")
    p.add_argument("--json", action="store_true", help="print JSON instead of text")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    parser = _Parser(prog="majorize", parents=[common],
                     description="Majorization orders, spectral estimates and exact counterexamples.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("seq", parents=[common], help="apply a sequence transform")
    p.add_argument("op", choices=["mu", "cesaro", "dilate", "half-dilate", "direct-sum", "s", "t",
                                  "scale", "pow", "truncate"])
    p.add_argument("--in", dest="input", required=True, type=Path)
    p.add_argument("--n", type=int, help="dilation factor, or exponent for exact ops")
    p.add_argument("--other", type=Path, help="second operand of direct-sum")

    p = sub.add_parser("order", parents=[common], help="decide a submajorization order")
    p.add_argument("--kind", choices=["hl", "log", "uniform"], required=True)
    p.add_argument("--b", required=True, type=Path)
    p.add_argument("--a", required=True, type=Path)

    p = sub.add_parser("matrix", parents=[common], help="spectral checks on a matrix")
    p.add_argument("--op", required=True,
                   choices=["weyl", "lidskii", "ringrose", "qn400", "prefinal", "geom", "construct"])
    p.add_argument("--in", dest="input", type=Path)
    p.add_argument("--y", type=Path, help="eigenvalues for construct")
    p.add_argument("--x", type=Path, help="singular value bounds for construct")

    p = sub.add_parser("ideal", parents=[common], help="principal ideal queries")
    p.add_argument("--op", required=True, choices=["member", "le", "geom-stable", "commutator"])
    p.add_argument("--generator", required=True, type=Path)
    p.add_argument("--in", dest="input", type=Path)

    p = sub.add_parser("counterexample", parents=[common], help="exact checks on the tower sequence")
    p.add_argument("--check", required=True, choices=["taux", "tmain", "a0", "horror", "geomstable"])
    p.add_argument("--n", type=int)
    p.add_argument("--l", type=int)
    p.add_argument("--samples", type=int, default=50, help="indices sampled by taux")

    p = sub.add_parser("suite", parents=[common], help="run the registry of named checks")
    p.add_argument("--trials", type=int, help="override every randomized check's trial count")
    p.add_argument("--dims", type=_dims, help="matrix dimension range, e.g. 2-12")
    p.add_argument("--only", action="append", choices=NAMES, metavar="NAME",
                   help="run only this check (repeatable)")
    p.add_argument("--timings", action="store_true", help="record runtime_ms")
    p.add_argument("--list", action="store_true", help="list the registry and exit")
    return parser


def _dims(text: str) -> tuple[int, int]:
    try:
        lo, hi = (int(v) for v in text.split("-"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO-HI, got {text!r}") from None
    return lo, hi


def _tolerances(args) -> Tolerances:
    kw = {}
    if hasattr(args, "tol_log"):
        if args.tol_log < 0:
            raise UsageError("--tol-log must be >= 0")
        kw["tau_log"] = args.tol_log
    return DEFAULT.with_overrides(**kw)


def _verdict_exit(status) -> int:
    return exit_code([status])


def _bool_exit(ok) -> int:
    if ok is None:
        return EXIT_INCONCLUSIVE
    return EXIT_OK if ok else EXIT_FAILS


# --------------------------------------------------------------------------
# subcommands; each returns (result, exit code, text summary)


def _cmd_seq(args, tol):
    x = io.load_generator(args.input)
    if isinstance(x, dyadic.DyadicStepSeq):
        op = {"dilate": "dilate", "scale": "scale", "pow": "pow", "truncate": "truncate"}.get(args.op)
        if op is None or args.n is None:
            raise UsageError(f"exact sequences support dilate/scale/pow/truncate with --n, not {args.op!r}")
        out = dyadic.exact_ops(x, op, args.n)
        return out.to_json(), EXIT_OK, repr(out)
    if args.op == "mu":
        out = seq.mu(x)
    elif args.op == "cesaro":
        out = seq.cesaro(x)
    elif args.op == "dilate":
        if args.n is None:
            raise UsageError("dilate needs --n")
        out = seq.dilate(x, args.n)
    elif args.op == "half-dilate":
        out = seq.half_dilate(x)
    elif args.op == "direct-sum":
        if args.other is None:
            raise UsageError("direct-sum needs --other")
        out = seq.direct_sum(x, io.load_sequence(args.other))
    elif args.op == "s":
        out = seq.s_transform(x, tol.eps_prod)
    elif args.op == "t":
        out = seq.t_transform(x, tol.eps_prod)
    else:
        raise UsageError(f"{args.op} applies to exact sequences only")
    values = out.tolist()
    return values, EXIT_OK, " ".join(f"{v:.17g}" for v in values)


def _verdict_text(v: OrderVerdict) -> str:
    parts = [v.status.value]
    for key in ("witness", "failure_index", "bound_searched"):
        val = getattr(v, key)
        if val is not None:
            parts.append(f"{key}={val}")
    return " ".join(parts)


def _cmd_order(args, tol):
    b = io.load_generator(args.b)
    a = io.load_generator(args.a)
    exact = isinstance(b, dyadic.DyadicStepSeq), isinstance(a, dyadic.DyadicStepSeq)
    if any(exact):
        if not all(exact) or args.kind != "log":
            raise UsageError("exact sequences are compared with --kind log only, on both sides")
        hi = min(b.horizon, a.horizon)
        if hi == dyadic.INF:
            raise UsageError("at least one exact sequence needs a finite horizon")
        ok, bad = dyadic.exact_log_submajor(b, a, hi)
        v = OrderVerdict(Status.HOLDS if ok else Status.FAILS, witness=0 if ok else None,
                         failure_index=bad)
    elif args.kind == "hl":
        v = check_hl_submajor(b, a, tol)
    elif args.kind == "log":
        v = check_log_submajor(b, a, tol)
    else:
        lam = getattr(args, "lambda_max", None)
        v = check_uniform_submajor(b, a, lam, tol)
    return v.to_dict(), _verdict_exit(v.status), _verdict_text(v)


def _cmd_matrix(args, tol):
    if args.op == "construct":
        if args.y is None or args.x is None:
            raise UsageError("construct needs --y and --x")
        m = construct_from_spectrum(io.load_sequence(args.y, complex_ok=True),
                                    io.load_sequence(args.x), tol)
        return io.matrix_to_json(m), EXIT_OK, np.array2string(m, precision=6)
    if args.input is None:
        raise UsageError(f"--op {args.op} needs --in")
    t = io.load_matrix(args.input)
    if args.op == "weyl":
        v = weyl_check(t, tol)
        return v.to_dict(), _verdict_exit(v.status), _verdict_text(v)
    if args.op == "geom":
        v = geom_estimate_check(t, tol)
        return v.to_dict(), _verdict_exit(v.status), _verdict_text(v)
    if args.op == "ringrose":
        r = ringrose_decompose(t, tol)
        norm = max(float(np.linalg.norm(t, 2)), np.finfo(float).tiny)
        ok = (r.reconstruction_error <= tol.tau_recon * norm
              and r.q_radius <= tol.tau_eig * norm
              and r.eigen_match_error <= tol.tau_eig)
        out = dict(r.report(), holds=ok, n_part=io.matrix_to_json(r.n_part),
                   q_part=io.matrix_to_json(r.q_part))
        text = " ".join(f"{k}={v:.3g}" for k, v in r.report().items())
        return out, _bool_exit(ok), text
    fn = {"lidskii": lidskii_check, "qn400": quasinilpotent_sum_check,
          "prefinal": prefinal_bound_check}[args.op]
    r = fn(t, tol)
    return r, _bool_exit(r["holds"]), "holds" if r["holds"] else "fails"


def _cmd_ideal(args, tol):
    gen = io.load_generator(args.generator)
    ideal = PrincipalIdealModel(gen, l_max=getattr(args, "l_max", DEFAULT.l_max))
    if args.op == "geom-stable":
        v = geom_stable_check(ideal, tol)
    else:
        if args.input is None:
            raise UsageError(f"--op {args.op} needs --in")
        if args.op == "commutator":
            v = commutator_member(io.load_matrix(args.input), ideal, tol)
        elif args.op == "member":
            v = ideal_member(io.load_generator(args.input), ideal, tol)
        else:
            v = le_member(io.load_sequence(args.input), ideal, tol)
    return v.to_dict(), _verdict_exit(v.status), _verdict_text(v)


def _cmd_counterexample(args, tol):
    """Exit 0 means the counterexample claim was confirmed."""
    rng = np.random.default_rng(getattr(args, "seed", 0))
    if args.check == "taux":
        n = 1 if args.n is None else args.n
        r = dyadic.verify_t_aux(n, dyadic.sample_level_indices(n, args.samples, rng))
        ok = r["holds"]
    elif args.check == "tmain":
        l = 1 if args.l is None else args.l
        n = 2 ** (l + 1) if args.n is None else args.n
        r = dyadic.verify_t_main(l, n)
        ok = r["certified"] and r["integer_inequality"]
    elif args.check == "a0":
        r = dyadic.verify_a0_bound(1 if args.l is None else args.l, 6 if args.n is None else args.n)
        ok = r["holds"]
    elif args.check == "horror":
        l = 0 if args.l is None else args.l
        tower = dyadic.tower_sequence(2)
        b = dyadic.scale(dyadic.dilate(tower, l), l)
        r = dyadic.verify_horror(b, l, 2 if args.n is None else args.n)
        ok = r["holds"]
    else:
        tower = dyadic.tower_sequence(2 if args.n is None else args.n)
        v = geom_stable_check(PrincipalIdealModel(tower, l_max=getattr(args, "l_max", DEFAULT.l_max)), tol)
        r = v.to_dict()
        ok = v.status is Status.FAILS if v.status is not Status.INCONCLUSIVE else None
    return r, _bool_exit(ok), f"{args.check}: " + ("confirmed" if ok else "not confirmed")


def _cmd_suite(args, tol):
    if args.list:
        rows = [{"name": c.name, "paper_anchor": c.paper_anchor} for c in REGISTRY]
        return rows, EXIT_OK, "\n".join(f"{c.name:26s} {c.paper_anchor}" for c in REGISTRY)
    config = SuiteConfig(
        seed=getattr(args, "seed", 0),
        trials=args.trials,
        dims=args.dims,
        lambda_max=getattr(args, "lambda_max", 8),
        l_max=getattr(args, "l_max", DEFAULT.l_max),
        tol=tol,
        timings=args.timings,
        only=tuple(args.only) if args.only else None,
    )
    try:
        report = run_suite(config)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    lines = []
    for c in report["checks"]:
        v = c["verdict"]
        lines.append(f"{v['status']:12s} {c['name']:26s} {v['passed']}/{c['trials']} passed")
    lines.append(" ".join(f"{k}={n}" for k, n in report["summary"].items()))
    return report, report["exit_code"], "\n".join(lines)


_COMMANDS = {
    "seq": _cmd_seq,
    "order": _cmd_order,
    "matrix": _cmd_matrix,
    "ideal": _cmd_ideal,
    "counterexample": _cmd_counterexample,
    "suite": _cmd_suite,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        tol = _tolerances(args)
        result, code, text = _COMMANDS[args.command](args, tol)
    except (UsageError, ValueError, TypeError, KeyError, IndexError, OSError,
            json.JSONDecodeError) as exc:
        print(f"majorize: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SpectralError, np.linalg.LinAlgError, FloatingPointError, ArithmeticError) as exc:
        print(f"majorize: computation failed: {exc}", file=sys.stderr)
        return EXIT_SOFTWARE
    payload = io.dumps(result)
    if hasattr(args, "out"):
        args.out.write_text(payload, encoding="utf-8")
    if getattr(args, "json", False):
        sys.stdout.write(payload)
    elif not hasattr(args, "out"):
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
