"""Command-line front end.

Exit codes: 0 success (including "nothing found, as expected"), 1 a
finding that would contradict the no-solution results (a solution, an
integral point, or a certificate that fails to verify), 2 usage or
domain errors.
"""

from __future__ import annotations

import argparse
import logging
import sys
from collections import Counter
from pathlib import Path

from .curves import integral_points_Ek
from .obstruction import (
    CaseLabel,
    Certificate,
    CertificateFormatError,
    WitnessNotFound,
    certify,
    verify_certificate,
)
from .poly import ParseError, parse_polynomial, size_h
from .search import FRUIT_CONSTANT, BoxTooLarge, SearchBox, search_general

log = logging.getLogger("fruitdioph")

OK, ALARM, USAGE = 0, 1, 2


def cmd_certify(start: int, stop: int, out_path: str | Path) -> int:
    if start > stop:
        log.error("--from must not exceed --to")
        return USAGE
    counts: Counter[CaseLabel] = Counter()
    lines = []
    for k in range(start, stop + 1):
        try:
            cert = certify(k)
        except WitnessNotFound as exc:
            log.error("%s", exc)
            return ALARM
        result = verify_certificate(cert)
        if not result.ok:
            log.error("self-check failed for k=%d: %s", k, result.reason)
            return ALARM
        counts[cert.label] += 1
        lines.append(cert.to_json())
    try:
        with open(out_path, "w", encoding="utf-8") as fh:
            for line in lines:
                fh.write(line + "\n")
    except OSError as exc:
        log.error("cannot write %s: %s", out_path, exc)
        return USAGE
    for label in CaseLabel:
        print(f"{label.value}\t{counts[label]}")
    print(f"total\t{sum(counts.values())}")
    return OK


def cmd_check(in_path: str | Path) -> int:
    try:
        fh = open(in_path, encoding="utf-8")
    except OSError as exc:
        log.error("cannot read %s: %s", in_path, exc)
        return USAGE
    checked = 0
    with fh:
        for lineno, line in enumerate(fh, 1):
            if not line.strip():
                continue
            try:
                cert = Certificate.from_json(line)
            except CertificateFormatError as exc:
                log.error("line %d: malformed certificate: %s", lineno, exc)
                return USAGE
            result = verify_certificate(cert)
            if not result.ok:
                log.error("line %d: k=%d fails verification (%s)", lineno, cert.k, result.reason)
                return ALARM
            checked += 1
    print(f"verified\t{checked}")
    return OK


def cmd_search(bound: int, c: int = FRUIT_CONSTANT) -> int:
    try:
        box = SearchBox.cube(bound)
    except BoxTooLarge as exc:
        log.error("%s", exc)
        return USAGE
    except ValueError as exc:
        log.error("%s", exc)
        return USAGE
    solutions = search_general(c, box)
    for s in solutions:
        print(f"{s.x},{s.y},{s.z}")
    if solutions and c == FRUIT_CONSTANT:
        return ALARM
    return OK


def cmd_curve(k: int, x_bound: int) -> int:
    if x_bound < 0:
        log.error("--xbound must be non-negative")
        return USAGE
    points = integral_points_Ek(k, x_bound)
    for X, Y in points:
        print(f"{X},{Y}")
    return ALARM if points else OK


def cmd_polysize(expr: str) -> int:
    try:
        poly = parse_polynomial(expr)
        h = size_h(poly)
    except (ParseError, ValueError) as exc:
        log.error("%s", exc)
        return USAGE
    print(h)
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fruitdioph",
        description="Certificates and desk checks for y^2 - xyz + z^2 = x^3 - 5.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("certify", help="write JSONL certificates for a range of k")
    p.add_argument("--from", dest="start", type=int, required=True)
    p.add_argument("--to", dest="stop", type=int, required=True)
    p.add_argument("--out", required=True, help="output JSONL path")

    p = sub.add_parser("check", help="verify a JSONL certificate file")
    p.add_argument("path")

    p = sub.add_parser("search", help="exhaustive search in the box |x|,|y|,|z| <= bound")
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--constant", type=int, default=FRUIT_CONSTANT,
                   help="c in y^2 - xyz + z^2 = x^3 + c (default -5)")

    p = sub.add_parser("curve", help="integral points on E_k with |X| <= xbound")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--xbound", type=int, required=True)

    p = sub.add_parser("polysize", help="print the size h(P) of a polynomial")
    p.add_argument("expr")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(name)s: %(levelname)s: %(message)s",
        stream=sys.stderr,
    )
    if args.command == "certify":
        return cmd_certify(args.start, args.stop, args.out)
    if args.command == "check":
        return cmd_check(args.path)
    if args.command == "search":
        return cmd_search(args.bound, args.constant)
    if args.command == "curve":
        return cmd_curve(args.k, args.xbound)
    return cmd_polysize(args.expr)


if __name__ == "__main__":
    sys.exit(main())
