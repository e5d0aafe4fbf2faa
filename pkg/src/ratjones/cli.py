"""Command-line front end: ``ratjones <subcommand> ...``.

Exit codes: 0 success, 1 usage error, 2 domain error, 3 internal invariant
violation.  Sequences are comma-separated in display order (``n_k`` first).
"""

from __future__ import annotations

import argparse
import re
import sys
from math import gcd
from typing import Sequence

from .census import default_jobs, emit_report, find_coincidences
from .classify import SearchBudget, classify_pair
from .errors import DomainError, InvariantViolation, NotDivisible
from .jones import jones_general, jones_knot, knot_sequence
from .rationals import Rat, eval_cf, format_seq, parse_seq, schubert_canonical
from .templates import TemplateInstance


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _fraction(text: str) -> tuple[int, int]:
    try:
        r = Rat.parse(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a fraction: {text!r}") from None
    num, _, den = text.strip().partition("/")
    if den and gcd(int(num), int(den)) != 1:
        raise argparse.ArgumentTypeError(f"{text} is not in lowest terms")
    if r.is_inf():
        raise argparse.ArgumentTypeError("the fraction must be finite")
    return r.p, r.q


def _seq(text: str) -> tuple[int, ...]:
    try:
        return parse_seq(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer sequence: {text!r}") from None


def _flags(text: str) -> tuple[str, ...]:
    return tuple(x.strip() for x in text.split(",")) if text.strip() else ()


def _seqs(text: str) -> tuple[tuple[int, ...], ...]:
    return tuple(_seq(part) for part in text.split(";"))


def _budget_args(p: argparse.ArgumentParser) -> None:
    d = SearchBudget()
    p.add_argument("--max-len", type=int, default=d.max_len, help="longest base sequence")
    p.add_argument("--max-entry", type=int, default=d.max_entry, help="largest |entry| of a base")
    p.add_argument("--max-k", type=int, default=d.max_k, help="Template I block count bound")
    p.add_argument("--max-param", type=int, default=d.max_param, help="largest |d| and |m|")
    p.add_argument("--max-k-two", type=int, default=d.max_k_two)
    p.add_argument("--max-k-pivot", type=int, default=d.max_k_pivot)


def _budget(ns) -> SearchBudget:
    return SearchBudget(ns.max_len, ns.max_entry, ns.max_k, ns.max_param, ns.max_k_two, ns.max_k_pivot)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ratjones", description="Jones polynomials of rational knots.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("jones", help="Jones polynomial of K_{p/q} or of a sequence")
    p.add_argument("fraction", nargs="?", type=_fraction)
    p.add_argument("--seq", type=_seq, help="integer sequence instead of a fraction")
    p.add_argument("--json", action="store_true", help="print [exp, coeff] pairs")

    p = sub.add_parser("cf", help="even continued fraction used for K_{p/q}")
    p.add_argument("fraction", type=_fraction)

    p = sub.add_parser("eval-cf", help="fraction of an integer sequence")
    p.add_argument("seq", type=_seq)

    p = sub.add_parser("canon", help="Schubert class and amphicheirality")
    p.add_argument("fraction", type=_fraction)

    p = sub.add_parser("verify", help="compare two Jones polynomials")
    p.add_argument("first", type=_fraction)
    p.add_argument("second", type=_fraction)

    p = sub.add_parser("template", help="generate a template pair")
    p.add_argument("kind", choices=["I", "II", "pivot"])
    p.add_argument("--n", type=_seq, help="base sequence (I, II)")
    p.add_argument("--seqs", type=_seqs, help="';'-separated base sequences (pivot)")
    p.add_argument("--ds", type=_seq, default=())
    p.add_argument("--eps", type=_flags, default=None, help="flags: '1'/'*' (I, pivot) or '>'/'<' (II)")
    p.add_argument("--ms", type=_seq, default=())
    p.add_argument("--phis", type=_flags, default=None)

    p = sub.add_parser("classify", help="search for a template explaining a coincidence")
    p.add_argument("first", type=_fraction)
    p.add_argument("second", type=_fraction)
    _budget_args(p)

    p = sub.add_parser("search", help="coincidence census report")
    p.add_argument("--max-det", type=int, default=900)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--output", help="file to write (default stdout)")
    p.add_argument("--jobs", type=int, default=None, help="worker processes (default: JONES_JOBS or CPU count)")
    p.add_argument("--classify", action="store_true", help="attach template classifications")
    _budget_args(p)
    return parser


_NEG_ARG = re.compile(r"^-\d[-\d,;/]*$")


def parse_args(argv: Sequence[str]) -> argparse.Namespace:
    # "-2,3" would otherwise be taken for an option; a leading space defeats that
    argv = [" " + a if _NEG_ARG.match(a) else a for a in argv]
    ns = build_parser().parse_args(argv)
    if ns.command == "jones" and (ns.fraction is None) == (ns.seq is None):
        raise UsageError("jones needs exactly one of FRACTION or --seq")
    return ns


def _jones_of(p: int, q: int):
    k = schubert_canonical(p, q)  # raises NotAKnot for even p
    return jones_knot(k.p, k.q)


def _run_template(ns) -> int:
    kind = {"I": "I", "II": "II", "pivot": "Pivot"}[ns.kind]
    if kind == "Pivot":
        if ns.seqs is None:
            raise UsageError("pivot needs --seqs")
        base = ns.seqs
    else:
        if ns.n is None:
            raise UsageError(f"template {ns.kind} needs --n")
        base = ns.n
    blocks = len(ns.ds) + 1
    eps = ns.eps if ns.eps is not None else (("1",) if kind != "II" else (">",)) * blocks
    phis = ns.phis if ns.phis is not None else (">",) * blocks
    inst = TemplateInstance(kind, base, tuple(ns.ds), tuple(eps), tuple(ns.ms), tuple(phis) if kind == "II" else ())
    try:
        a, b = inst.generate()
    except ValueError as exc:
        if isinstance(exc, DomainError):
            raise
        raise UsageError(str(exc)) from None
    ra, rb = eval_cf(a), eval_cf(b)
    print(f"A = ({format_seq(a)})  {ra}")
    print(f"B = ({format_seq(b)})  {rb}")
    if ra.p % 2 == 0:
        print("closures are links; no Jones comparison")
        return 0
    va, vb = jones_general(a), jones_general(b)
    print("EQUAL" if va == vb else "DIFFER")
    print(f"V_A = {va}")
    if va != vb:
        print(f"V_B = {vb}")
    return 0


def run(ns: argparse.Namespace) -> int:
    cmd = ns.command
    if cmd == "jones":
        if ns.seq is not None:
            v = jones_general(ns.seq)
        else:
            v = _jones_of(*ns.fraction)
        print(v.to_json() if ns.json else v)
    elif cmd == "cf":
        p, q = ns.fraction
        schubert_canonical(p, q)
        if p < 0:
            p, q = -p, -q
        print(format_seq(knot_sequence(p, q)))
    elif cmd == "eval-cf":
        print(eval_cf(ns.seq))
    elif cmd == "canon":
        k = schubert_canonical(*ns.fraction)
        print(f"{k} qset={format_seq(k.qset)} amphicheiral={'yes' if k.amphicheiral else 'no'}")
    elif cmd == "verify":
        polys = [_jones_of(*ns.first), _jones_of(*ns.second)]
        print("EQUAL" if polys[0] == polys[1] else "DIFFER")
        for v in polys:
            print(v)
    elif cmd == "template":
        return _run_template(ns)
    elif cmd == "classify":
        a, b = schubert_canonical(*ns.first), schubert_canonical(*ns.second)
        print(classify_pair(a, b, _budget(ns)))
    elif cmd == "search":
        jobs = ns.jobs if ns.jobs is not None else default_jobs()
        groups = find_coincidences(ns.max_det, jobs=jobs, classify=ns.classify, budget=_budget(ns))
        if ns.output:
            with open(ns.output, "w", encoding="utf-8", newline="") as fh:
                emit_report(groups, ns.format, fh)
        else:
            emit_report(groups, ns.format, sys.stdout)
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        return run(parse_args(argv))
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (InvariantViolation, NotDivisible) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
