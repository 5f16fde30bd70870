"""Command line front end: qhgerm analyze | decide | roots | demo-whitney | decide-batch.

Exit codes: 0 Equivalent (or informational success), 1 Inequivalent,
2 NotApplicable, 64 usage, 65 parse error, 66 analysis error. JSON output
is versioned (schemaVersion 1) and byte-identical across identical
invocations. QHGERM_PRECISION overrides the default 128-bit precision.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from mpmath import mp

from . import engine
from .engine import (
    STATUS_EQUIVALENT,
    STATUS_INEQUIVALENT,
    STATUS_NOT_APPLICABLE,
    AffineMatch,
    RadicalScalar,
    ScaleClass,
    ShearTerm,
    _numeric_clusters,
    _snap_gq,
)
from .errors import (
    BranchOutOfRangeError,
    ParseError,
    QhgermError,
)
from .exact import GaussianRational, format_unipoly
from .numeric import NumericMatch, to_mpc
from .polyio import BivarPoly, format_poly, parse_poly
from .structure import analyze_germ

SCHEMA_VERSION = 1

EXIT_EQUIVALENT = 0
EXIT_OK = 0
EXIT_INEQUIVALENT = 1
EXIT_NOT_APPLICABLE = 2
EXIT_USAGE = 64
EXIT_PARSE = 65
EXIT_ANALYSIS = 66

_STATUS_EXIT = {
    STATUS_EQUIVALENT: EXIT_EQUIVALENT,
    STATUS_INEQUIVALENT: EXIT_INEQUIVALENT,
    STATUS_NOT_APPLICABLE: EXIT_NOT_APPLICABLE,
}


class _ArgumentParser(argparse.ArgumentParser):
    """argparse with the usage exit code this tool documents."""

    def error(self, message):
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _default_precision() -> int:
    raw = os.environ.get("QHGERM_PRECISION")
    if raw is None:
        return engine.DEFAULT_PRECISION
    try:
        value = int(raw)
    except ValueError:
        sys.stderr.write(f"qhgerm: QHGERM_PRECISION is not an integer: {raw!r}\n")
        raise SystemExit(EXIT_USAGE)
    return value


def _weights_arg(text: str):
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError("expected two comma-separated integers p,q")
    try:
        return (int(parts[0]), int(parts[1]))
    except ValueError:
        raise argparse.ArgumentTypeError("weights must be integers")


def _build_parser() -> _ArgumentParser:
    common = _ArgumentParser(add_help=False)
    common.add_argument("--weights", type=_weights_arg, default=None, metavar="p,q",
                        help="fix the weights instead of inferring them")
    common.add_argument("--mode", choices=("exact", "numeric", "auto"), default="auto")
    common.add_argument("--precision", type=int, default=None, metavar="BITS",
                        help="working precision in bits (>= 53, default 128)")
    common.add_argument("--tol", type=float, default=engine.DEFAULT_TOL, metavar="X",
                        help="numeric clustering/matching tolerance")
    common.add_argument("--seed", type=int, default=0, metavar="N",
                        help="seed for numeric verification sampling")
    common.add_argument("--json", action="store_true", help="emit JSON")

    parser = _ArgumentParser(
        prog="qhgerm",
        description="decide right-equivalence of quasihomogeneous plane germs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser("analyze", parents=[common],
                               help="weights, class and canonical form of one germ")
    p_analyze.add_argument("poly")

    p_decide = sub.add_parser("decide", parents=[common],
                              help="decide equivalence of two germs")
    p_decide.add_argument("first", nargs="?")
    p_decide.add_argument("second", nargs="?")
    p_decide.add_argument("--file", default=None,
                          help="read the two polynomials from the first two lines")
    p_decide.add_argument("--witness", action="store_true",
                          help="construct and verify an explicit coordinate change")
    p_decide.add_argument("--branch", type=int, default=None, metavar="N",
                          help="scale branch for the witness (default: prefer rational)")

    p_roots = sub.add_parser("roots", parents=[common],
                             help="ladder root multiset of one germ")
    p_roots.add_argument("poly")

    p_demo = sub.add_parser("demo-whitney", parents=[common],
                            help="four-line quartics: cross-ratio moduli comparison")
    p_demo.add_argument("t")
    p_demo.add_argument("s")

    p_batch = sub.add_parser("decide-batch", parents=[common],
                             help="decide JSON-lines pairs from a file or stdin")
    p_batch.add_argument("path", nargs="?", default="-")
    return parser


def _emit(doc: dict, out) -> None:
    out.write(json.dumps(doc, sort_keys=True, indent=2))
    out.write("\n")


def _approx_str(value, precision: int) -> str:
    with mp.workprec(precision + 20):
        return mp.nstr(to_mpc(value) if isinstance(value, GaussianRational) else value, 17)


def _scalar_json(scalar, approx: str) -> dict:
    if isinstance(scalar, GaussianRational):
        return {"kind": "rational", "base": str(scalar), "index": 1, "branch": 0,
                "approx": approx}
    if isinstance(scalar, RadicalScalar):
        return {"kind": "radical", "base": str(scalar.base), "index": scalar.index,
                "branch": scalar.branch, "approx": approx}
    if isinstance(scalar, ShearTerm):
        return {"kind": "shear", "alphaPower": str(scalar.alpha_coeff),
                "beta": str(scalar.beta_coeff), "approx": approx}
    raise TypeError(f"unexpected scalar {type(scalar).__name__}")


def _scalar_text(scalar) -> str:
    return str(scalar)


def _match_json(match, precision: int):
    if match is None:
        return None
    if isinstance(match, ScaleClass):
        return {"d": match.d, "base": str(match.base),
                "indices": list(match.indices), "shift": None}
    if isinstance(match, AffineMatch):
        sc = match.scale_class
        return {"d": sc.d, "base": str(sc.base), "indices": list(sc.indices),
                "shift": {"first": str(match.center_first),
                          "second": str(match.center_second)}}
    if isinstance(match, NumericMatch):
        return {"numeric": True, "scale": _approx_str(match.scale, precision),
                "shift": None if match.shift is None
                else _approx_str(match.shift, precision)}
    raise TypeError(f"unexpected match {type(match).__name__}")


def _verdict_json(verdict, precision: int) -> dict:
    return {
        "status": verdict.status,
        "mode": verdict.mode,
        "reason": verdict.reason,
        "invariants": verdict.invariants,
        "match": _match_json(verdict.match, precision),
    }


def _witness_numerics(witness, precision: int):
    with mp.workprec(precision + 20):
        alpha = engine.scalar_to_mpc(witness.alpha, precision)
        beta = engine.scalar_to_mpc(witness.beta, precision)
        if witness.gamma is None:
            gamma = None
        elif isinstance(witness.gamma, ShearTerm):
            gamma = witness.gamma.evaluate(alpha, beta, witness.weights.q)
        else:
            gamma = engine.scalar_to_mpc(witness.gamma, precision)
        return alpha, beta, gamma


def _witness_json(witness, precision: int) -> dict:
    alpha, beta, gamma = _witness_numerics(witness, precision)
    doc = {
        "alpha": _scalar_json(witness.alpha, _approx_str(alpha, precision)),
        "beta": _scalar_json(witness.beta, _approx_str(beta, precision)),
        "gamma": None if witness.gamma is None
        else _scalar_json(witness.gamma, _approx_str(gamma, precision)),
        "scale": _scalar_json(witness.scale, _approx_str(
            engine.scalar_to_mpc(witness.scale, precision), precision)),
        "branch": witness.branch,
        "direction": witness.direction,
        "substitution": _substitution_text(witness),
    }
    return doc


def _substitution_text(witness) -> str:
    q = witness.weights.q
    if witness.gamma is None:
        return "X -> alpha*X, Y -> beta*Y"
    return f"X -> alpha*X, Y -> beta*Y + gamma*X^{q}"


def _verification_json(report) -> dict:
    return {
        "mode": "exact" if report.exact else "numeric",
        "pass": report.passed,
        "residual": report.max_residual,
        "tol": report.tol,
        "samples": report.samples,
        "precision": report.precision,
    }


def _canonical_json(analysis) -> dict:
    form = analysis.canonical
    return {
        "c0": str(form.c0),
        "m": form.m,
        "m0": form.m0,
        "ladder": [str(c) for c in form.ladder.coeffs],
    }


def _cmd_analyze(args, out) -> int:
    poly = parse_poly(args.poly)
    analysis = analyze_germ(poly, args.weights)
    w = analysis.weights
    if args.json:
        _emit({
            "schemaVersion": SCHEMA_VERSION,
            "command": "analyze",
            "inputs": {"poly": format_poly(poly)},
            "weights": {"p": w.p, "q": w.q, "nu": w.nu},
            "class": analysis.germ_class,
            "canonical": _canonical_json(analysis),
            "ord0": analysis.ord_at_origin,
        }, out)
    else:
        form = analysis.canonical
        out.write(f"class: {analysis.germ_class}\n")
        out.write(f"weights: p={w.p} q={w.q} nu={w.nu}\n")
        out.write(
            f"canonical: c0={form.c0} m={form.m} m0={form.m0} "
            f"ladder={format_unipoly(form.ladder)}\n"
        )
        out.write(f"ord0: {analysis.ord_at_origin}\n")
    return EXIT_OK


def _read_pair_file(path: str) -> tuple[str, str]:
    with open(path, encoding="utf-8") as handle:
        lines = [line.strip() for line in handle if line.strip()]
    if len(lines) < 2:
        sys.stderr.write(f"qhgerm: {path} must contain two polynomial lines\n")
        raise SystemExit(EXIT_USAGE)
    return lines[0], lines[1]


def _cmd_decide(args, out) -> int:
    if args.file is not None:
        first_text, second_text = _read_pair_file(args.file)
    elif args.first is not None and args.second is not None:
        first_text, second_text = args.first, args.second
    else:
        sys.stderr.write("qhgerm: decide needs two polynomials or --file\n")
        raise SystemExit(EXIT_USAGE)
    first = parse_poly(first_text)
    second = parse_poly(second_text)
    precision = args.precision
    verdict = engine.decide_equivalence(
        first, second, args.weights, args.mode, precision, args.tol
    )
    witness = None
    report = None
    if verdict.status == STATUS_EQUIVALENT and args.witness:
        witness = engine.build_witness(first, second, verdict, args.branch, precision)
        report = engine.verify_witness(
            first, second, witness, precision=precision, seed=args.seed
        )
    if args.json:
        doc = {
            "schemaVersion": SCHEMA_VERSION,
            "command": "decide",
            "inputs": {"first": format_poly(first), "second": format_poly(second)},
            "verdict": _verdict_json(verdict, precision),
        }
        if witness is not None:
            doc["witness"] = _witness_json(witness, precision)
            doc["verification"] = _verification_json(report)
        _emit(doc, out)
    else:
        out.write(f"verdict: {verdict.status} ({verdict.mode})\n")
        if verdict.reason:
            out.write(f"reason: {verdict.reason}\n")
        inv = verdict.invariants["first"]
        out.write(
            f"invariants: p={inv['p']} q={inv['q']} nu={inv['nu']} "
            f"m={inv['m']} m0={inv['m0']} ladderDegree={inv['ladderDegree']}\n"
        )
        match = _match_json(verdict.match, precision)
        if match is not None:
            out.write(f"match: {json.dumps(match, sort_keys=True)}\n")
        if witness is not None:
            out.write(f"witness: {_substitution_text(witness)}\n")
            out.write(f"  alpha = {_scalar_text(witness.alpha)}\n")
            out.write(f"  beta  = {_scalar_text(witness.beta)}\n")
            if witness.gamma is not None:
                out.write(f"  gamma = {_scalar_text(witness.gamma)}\n")
            verdict_word = "pass" if report.passed else "FAIL"
            kind = "exact" if report.exact else "numeric"
            out.write(f"verification: {kind} {verdict_word}")
            if not report.exact:
                out.write(f" (max residual {report.max_residual})")
            out.write("\n")
    return _STATUS_EXIT[verdict.status]


def _cmd_roots(args, out) -> int:
    poly = parse_poly(args.poly)
    analysis = analyze_germ(poly, args.weights)
    ladder = analysis.canonical.ladder
    precision = args.precision
    entries = []
    if ladder.degree > 0:
        clusters = _numeric_clusters(ladder, precision, args.tol)
        for cl in clusters:
            snapped = _snap_gq(cl.center, 10**12)
            exact = ladder.eval(snapped).is_zero
            value = str(snapped) if exact else _approx_str(cl.center, precision)
            entries.append(
                {"value": value, "multiplicity": cl.multiplicity, "exact": exact}
            )
    w = analysis.weights
    if args.json:
        _emit({
            "schemaVersion": SCHEMA_VERSION,
            "command": "roots",
            "inputs": {"poly": format_poly(poly)},
            "class": analysis.germ_class,
            "weights": {"p": w.p, "q": w.q, "nu": w.nu},
            "roots": entries,
        }, out)
    else:
        out.write(f"class: {analysis.germ_class}\n")
        if not entries:
            out.write("no ladder roots (empty ladder)\n")
        for entry in entries:
            tag = "exact" if entry["exact"] else "approx"
            out.write(
                f"root {entry['value']} multiplicity {entry['multiplicity']} ({tag})\n"
            )
    return EXIT_OK


def _parse_scalar_arg(text: str) -> GaussianRational:
    poly = parse_poly(text)
    terms = dict(poly.terms)
    if terms and set(terms) != {(0, 0)}:
        raise ParseError("expected a constant value", 0)
    return terms.get((0, 0), GaussianRational())


def _config_json(config) -> list:
    return ["inf" if z is None else str(z) for z in config]


def _cmd_demo_whitney(args, out) -> int:
    t = _parse_scalar_arg(args.t)
    s = _parse_scalar_arg(args.s)
    result = engine.whitney_compare(t, s)
    precision = args.precision
    if args.json:
        doc = {
            "schemaVersion": SCHEMA_VERSION,
            "command": "demo-whitney",
            "inputs": {"first": str(t), "second": str(s)},
            "jEqual": result["jEqual"],
            "verdict": _verdict_json(result["verdict"], precision),
        }
        for key in ("first", "second"):
            side = result[key]
            doc[key] = {
                "t": str(side["t"]),
                "poly": format_poly(side["poly"]),
                "config": _config_json(side["config"]),
                "crossRatio": str(side["crossRatio"]),
                "j": str(side["j"]),
            }
        _emit(doc, out)
    else:
        for key in ("first", "second"):
            side = result[key]
            out.write(
                f"t = {side['t']}: config {_config_json(side['config'])} "
                f"cross-ratio {side['crossRatio']} j = {side['j']}\n"
            )
        word = "equal" if result["jEqual"] else "distinct"
        out.write(f"configurations are {word} under the ordering-free invariant\n")
        out.write(
            f"germ decider: {result['verdict'].status} "
            f"({result['verdict'].reason})\n"
        )
    return EXIT_OK


def _cmd_decide_batch(args, out) -> int:
    if args.path == "-":
        lines = sys.stdin.read().splitlines()
    else:
        with open(args.path, encoding="utf-8") as handle:
            lines = handle.read().splitlines()
    failed = False
    index = 0
    for line in lines:
        line = line.strip()
        if not line:
            continue
        record = {"index": index}
        try:
            item = json.loads(line)
            first = parse_poly(item["first"])
            second = parse_poly(item["second"])
            weights = tuple(item["weights"]) if "weights" in item else args.weights
            mode = item.get("mode", args.mode)
            verdict = engine.decide_equivalence(
                first, second, weights, mode, args.precision, args.tol
            )
            if "id" in item:
                record["id"] = item["id"]
            record["status"] = verdict.status
            record["mode"] = verdict.mode
            record["reason"] = verdict.reason
        except (QhgermError, ValueError, KeyError, TypeError) as exc:
            record["error"] = str(exc)
            failed = True
        out.write(json.dumps(record, sort_keys=True))
        out.write("\n")
        index += 1
    return EXIT_PARSE if failed else EXIT_OK


_DISPATCH = {
    "analyze": _cmd_analyze,
    "decide": _cmd_decide,
    "roots": _cmd_roots,
    "demo-whitney": _cmd_demo_whitney,
    "decide-batch": _cmd_decide_batch,
}


def run(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.precision is None:
        args.precision = _default_precision()
    if args.precision < 53:
        parser.error("precision must be at least 53 bits")
    if not args.tol > 0:
        parser.error("tol must be positive")
    if getattr(args, "branch", None) is not None and args.branch < 0:
        parser.error("branch must be nonnegative")
    try:
        return _DISPATCH[args.command](args, sys.stdout)
    except ParseError as exc:
        sys.stderr.write(f"parse error: {exc}\n")
        return EXIT_PARSE
    except BranchOutOfRangeError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except (QhgermError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_ANALYSIS


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
