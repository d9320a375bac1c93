"""Command line surface.

Exit codes: 0 success or all checks passed, 1 verification failure,
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Optional, Sequence

from . import cores
from .cache import cached_kschur
from .documents import ExpansionDocument
from .nilcoxeter import kschur, lr_coefficient, verify_pieri
from .rectangles import (
    Rectangle,
    all_rectangles,
    by_columns,
    by_readings,
    by_translations,
    by_windows,
    verify_commutation,
    verify_equivalences,
    verify_main,
)
from .reports import Report


class UsageError(Exception):
    pass


def parse_partition(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise UsageError(f"cannot parse partition {text!r}; use comma-separated parts")
    try:
        return cores.as_partition(parts)
    except ValueError as exc:
        raise UsageError(str(exc))


def format_partition(parts: Sequence[int]) -> str:
    return ",".join(map(str, parts))


def _emit_document(doc: ExpansionDocument, fmt: str) -> None:
    print(doc.to_json() if fmt == "json" else doc.to_text())


def cmd_kschur(args: argparse.Namespace) -> int:
    lam = parse_partition(args.partition)
    if not cores.is_k_bounded(lam, args.k):
        raise UsageError(f"partition {lam} is not {args.k}-bounded")
    if args.no_cache:
        element = kschur(args.k, lam)
    else:
        element = cached_kschur(args.k, lam)
    _emit_document(ExpansionDocument.from_element(lam, element), args.format)
    return 0


_FORMULAS = {
    "x": by_readings,
    "y": by_translations,
    "z": by_columns,
    "w": by_windows,
}


def cmd_rect(args: argparse.Namespace) -> int:
    if not 1 <= args.rows <= args.k:
        raise UsageError(f"rows must be in 1..{args.k}, got {args.rows}")
    rect = Rectangle.with_rows(args.k, args.rows)
    if args.formula != "all":
        element = _FORMULAS[args.formula](rect)
        _emit_document(ExpansionDocument.from_element(rect, element), args.format)
        return 0
    elements = {name: fn(rect) for name, fn in _FORMULAS.items()}
    docs = {
        name: ExpansionDocument.from_element(rect, element)
        for name, element in elements.items()
    }
    first = elements["x"]
    equal = all(element == first for element in elements.values())
    if args.format == "json":
        payload = {
            "k": args.k,
            "rows": rect.rows,
            "cols": rect.cols,
            "equal": equal,
            "formulas": {name: doc.to_dict() for name, doc in docs.items()},
        }
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")))
    else:
        for name in "xyzw":
            print(f"formula {name}:")
            print(docs[name].to_text())
        print(f"equal: {str(equal).lower()}")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    kmax = args.kmax
    if kmax < 1:
        raise UsageError(f"kmax must be >= 1, got {kmax}")
    report = Report(())
    if args.suite in ("equiv", "all"):
        report = report.merged(verify_equivalences(kmax))
    if args.suite in ("main", "all"):
        for k in range(1, kmax + 1):
            for rect in all_rectangles(k):
                report = report.merged(verify_main(rect))
    if args.suite in ("commute", "all"):
        for k in range(1, kmax + 1):
            for rect in all_rectangles(k):
                report = report.merged(verify_commutation(rect))
    if args.suite in ("pieri", "all"):
        for k in range(1, kmax + 1):
            report = report.merged(verify_pieri(k, max_size=3))
    print(json.dumps(report.to_dict(), indent=2, sort_keys=True))
    return 0 if report.passed else 1


_LETTERS = re.compile(r"([us])(\d+)|,|\s")


def parse_generator_chain(text: str) -> list[tuple[str, int]]:
    """Parse chains like "u1", "u1u3" or "s2,s0,s1" into (kind, index)."""
    out = []
    pos = 0
    while pos < len(text):
        match = _LETTERS.match(text, pos)
        if match is None:
            raise UsageError(f"cannot parse generators {text!r} at position {pos}")
        if match.group(1):
            out.append((match.group(1), int(match.group(2))))
        pos = match.end()
    if not out:
        raise UsageError("empty generator chain")
    return out


def cmd_core(args: argparse.Namespace) -> int:
    k = args.k

    def emit(parts: Optional[tuple[int, ...]]) -> None:
        if args.format == "json":
            print(json.dumps({"parts": None if parts is None else list(parts)}))
        elif parts is None:
            print("0")
        else:
            print(format_partition(parts))

    if args.action == "act":
        chain = parse_generator_chain(args.args[0])
        parts = parse_partition(args.args[1])
        if not cores.is_core(parts, k):
            raise UsageError(f"{parts} is not a {k + 1}-core")
        current: Optional[tuple[int, ...]] = parts
        for kind, i in reversed(chain):
            if not 0 <= i <= k:
                raise UsageError(f"generator index {i} out of range 0..{k}")
            if current is None:
                break
            if kind == "u":
                current = cores.u_action(current, i, k)
            else:
                current = cores.s_action(current, i, k)
        emit(current)
    elif args.action == "to-core":
        lam = parse_partition(args.args[0])
        if not cores.is_k_bounded(lam, k):
            raise UsageError(f"partition {lam} is not {k}-bounded")
        emit(cores.bounded_to_core(lam, k))
    elif args.action == "to-bounded":
        kappa = parse_partition(args.args[0])
        if not cores.is_core(kappa, k):
            raise UsageError(f"{kappa} is not a {k + 1}-core")
        emit(cores.core_to_bounded(kappa, k))
    elif args.action == "word":
        lam = parse_partition(args.args[0])
        if not cores.is_k_bounded(lam, k):
            raise UsageError(f"partition {lam} is not {k}-bounded")
        w = cores.w_of_partition(lam, k)
        word = w.reduced_word()
        if args.format == "json":
            print(
                json.dumps(
                    {
                        "word": list(word),
                        "window": list(w.window),
                        "core": list(cores.bounded_to_core(lam, k)),
                    }
                )
            )
        else:
            print(" ".join(map(str, word)))
    else:
        raise UsageError(f"unknown core action {args.action!r}")
    return 0


_CORE_ARG_COUNT = {"act": 2, "to-core": 1, "to-bounded": 1, "word": 1}


def cmd_lr(args: argparse.Namespace) -> int:
    lam = parse_partition(args.lam)
    mu = parse_partition(args.mu)
    nu = parse_partition(args.nu)
    for parts in (lam, mu, nu):
        if not cores.is_k_bounded(parts, args.k):
            raise UsageError(f"partition {parts} is not {args.k}-bounded")
    print(lr_coefficient(args.k, lam, mu, nu))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kschur",
        description=(
            "k-Schur functions in the standard basis of the affine nilCoxeter "
            "algebra, with closed formulas for maximal rectangles"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("kschur", help="expand a k-Schur function")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--partition", required=True, help="comma-separated parts; '' for empty")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--no-cache", action="store_true", help="skip the persisted cache")
    p.set_defaults(func=cmd_kschur)

    p = sub.add_parser("rect", help="closed formulas for a maximal rectangle")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--formula", choices=("x", "y", "z", "w", "all"), default="all")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_rect)

    p = sub.add_parser("verify", help="run verification sweeps")
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument(
        "--suite", choices=("equiv", "main", "commute", "pieri", "all"), default="all"
    )
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("core", help="core and bounded partition operations")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("action", choices=tuple(_CORE_ARG_COUNT))
    p.add_argument("args", nargs="*")
    p.set_defaults(func=cmd_core)

    p = sub.add_parser("lr", help="a k-Littlewood-Richardson coefficient")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--nu", required=True)
    p.set_defaults(func=cmd_lr)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "core" and len(args.args) != _CORE_ARG_COUNT[args.action]:
        print(
            f"error: core {args.action} takes {_CORE_ARG_COUNT[args.action]} argument(s)",
            file=sys.stderr,
        )
        return 2
    if getattr(args, "k", 1) < 1:
        print("error: --k must be >= 1", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
