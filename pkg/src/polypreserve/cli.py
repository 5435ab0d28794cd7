"""Command-line front end.

Exit codes: 0 member / found / ok, 1 non-member (or a failed spectral
check), 2 unknown, 3 witness not found, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import selftest
from .membership import MEMBER, NON_MEMBER, Verdict, classify
from .poly import Poly, residue_decompose
from .search import SearchConfig, WitnessResult, constructive_witness, search
from .spectra import Spectrum, check_jll, check_trace_conditions, circulant_spectrum

EXIT_OK = 0
EXIT_NON_MEMBER = 1
EXIT_UNKNOWN = 2
EXIT_NOT_FOUND = 3
EXIT_USAGE = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def verdict_exit_code(verdict: Verdict) -> int:
    return {MEMBER: EXIT_OK, NON_MEMBER: EXIT_NON_MEMBER}.get(verdict.status, EXIT_UNKNOWN)


def witness_exit_code(result: WitnessResult) -> int:
    return EXIT_OK if result.found else EXIT_NOT_FOUND


def _add_common(p: argparse.ArgumentParser, poly_required=True, with_n=True) -> None:
    p.add_argument("--poly", required=poly_required,
                   help='coefficients "a0,a1,...,am", each "num" or "num/den"')
    if with_n:
        p.add_argument("--n", type=int, required=True, help="matrix order")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--out", help="write the document here instead of stdout")


def _add_search(p: argparse.ArgumentParser) -> None:
    p.add_argument("--seed", type=int)
    p.add_argument("--budget", help="JSON object of search settings, or @path to one")
    p.add_argument("--trials", type=int)
    p.add_argument("--restarts", type=int)
    p.add_argument("--steps", type=int)
    p.add_argument("--step-size", type=float)
    p.add_argument("--entry-scale", type=float)
    p.add_argument("--t-cap")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="polypreserve",
                     description="Decide, bound or refute membership of polynomials in P_n.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("decompose", help="split p into its r mod n parts")
    _add_common(p)

    p = sub.add_parser("check", help="classify p as Member / NonMember / Unknown")
    _add_common(p)
    _add_search(p)

    p = sub.add_parser("witness", help="try the circulant and Jordan constructions")
    _add_common(p)
    p.add_argument("--t-cap", default=str(2**64))

    p = sub.add_parser("search", help="random and gradient counterexample search")
    _add_common(p)
    _add_search(p)

    p = sub.add_parser("spectrum", help="trace and J-LL checks on a spectrum")
    _add_common(p, poly_required=False, with_n=False)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--spectrum", help="JSON array of [re, im] pairs")
    group.add_argument("--circ", help="reference vector of a circulant, comma separated")
    p.add_argument("--K", type=int, default=4)
    p.add_argument("--M", type=int, default=4)

    p = sub.add_parser("selftest", help="run the invariant suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--out")
    return parser


def _search_config(args) -> SearchConfig:
    data = {}
    if args.budget:
        text = args.budget
        if text.startswith("@"):
            text = Path(text[1:]).read_text()
        data = json.loads(text)
        if not isinstance(data, dict):
            raise ValueError("--budget must be a JSON object")
    for name in ("seed", "trials", "restarts", "steps", "step_size", "entry_scale", "t_cap"):
        value = getattr(args, name, None)
        if value is not None:
            data[name] = value
    return SearchConfig.from_json(data)


# text renderings ---------------------------------------------------------


def _witness_text(w: WitnessResult) -> str:
    if not w.found:
        return "no witness found"
    i, j = w.entry
    lines = [f"witness ({w.provenance}" + (f", t = {w.t}" if w.t is not None else "") + "):",
             str(w.matrix),
             f"p(W)[{i},{j}] = {w.value} < 0"]
    return "\n".join(lines)


def _verdict_text(v: Verdict) -> str:
    lines = [f"p(x) = {v.poly}", f"n = {v.n}", f"verdict: {v.status} ({v.reason})"]
    if v.failed_condition is not None:
        fc = v.failed_condition
        detail = ", ".join(f"{k} = {v}" for k, v in fc.violation.items())
        lines.append(f"failed condition: {fc.name} {fc.params} ({detail})")
    if v.witness is not None:
        lines.append(_witness_text(v.witness))
    for e in v.report:
        lines.append(f"  [{e.status}] {e.name} {e.params}")
    return "\n".join(lines)


# subcommands -------------------------------------------------------------


def cmd_decompose(args):
    p = Poly.parse(args.poly)
    dec = residue_decompose(p, args.n)
    doc = {"poly": p.to_json(), **dec.to_json()}
    text = "\n".join(f"r={r}: {part}" for r, part in enumerate(dec.parts))
    return doc, text, EXIT_OK


def cmd_check(args):
    p = Poly.parse(args.poly)
    v = classify(p, args.n, _search_config(args))
    return v.to_json(), _verdict_text(v), verdict_exit_code(v)


def cmd_witness(args):
    p = Poly.parse(args.poly)
    w = constructive_witness(p, args.n, Fraction(args.t_cap))
    return w.to_json(), _witness_text(w), witness_exit_code(w)


def cmd_search(args):
    p = Poly.parse(args.poly)
    cfg = _search_config(args)
    w = search(p, args.n, cfg)
    doc = {"config": cfg.to_json(), "result": w.to_json()}
    return doc, _witness_text(w), witness_exit_code(w)


def cmd_spectrum(args):
    if args.circ:
        spec = circulant_spectrum([float(Fraction(s.strip())) for s in args.circ.split(",")])
    else:
        spec = Spectrum.from_json(json.loads(args.spectrum))
    p = Poly.parse(args.poly) if args.poly else Poly.x()
    trace = check_trace_conditions(p, spec, args.K)
    jll = check_jll(spec, args.K, args.M)
    ok = all(c.passed for c in trace) and all(c.passed for c in jll)
    doc = {
        "spectrum": spec.to_json(),
        "poly": p.to_json(),
        "trace": [c.to_json() for c in trace],
        "jll": [c.to_json() for c in jll],
        "passed": ok,
    }
    lines = [f"trace k={c.k}: {c.value.real:.6g} {'ok' if c.passed else 'FAIL'}" for c in trace]
    lines += [f"J-LL k={c.k} m={c.m}: {c.lhs:.6g} <= {c.rhs:.6g} {'ok' if c.passed else 'FAIL'}"
              for c in jll]
    return doc, "\n".join(lines), EXIT_OK if ok else EXIT_NON_MEMBER


def cmd_selftest(args):
    results = selftest.run(args.seed)
    ok = all(passed for _, passed in results)
    doc = {"passed": ok, "checks": [{"name": n, "passed": p} for n, p in results]}
    width = max(len(n) for n, _ in results)
    text = "\n".join(f"{n.ljust(width)}  {'PASS' if p else 'FAIL'}" for n, p in results)
    return doc, text, EXIT_OK if ok else EXIT_NON_MEMBER


COMMANDS = {
    "decompose": cmd_decompose,
    "check": cmd_check,
    "witness": cmd_witness,
    "search": cmd_search,
    "spectrum": cmd_spectrum,
    "selftest": cmd_selftest,
}


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "n", 1) < 1:
            raise UsageError("--n must be a positive integer")
        doc, text, code = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, ZeroDivisionError, json.JSONDecodeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    output = json.dumps(doc, indent=2) if args.format == "json" else text
    if args.out:
        Path(args.out).write_text(output + "\n", encoding="utf-8")
    else:
        print(output)
    return code


def main():
    sys.exit(run())
