"""msts command line: construct, verify and check mixed Steiner triple systems.

Exit codes: 0 success, 1 domain rejection (no such design, failed
verification), 2 usage, I/O or file-format error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import io
from .core import Design
from .pairs_triples import construct_ptd, ptd_exists, ptd_to_gdd
from .recursive import ExtensionPlan, extend
from .shortest import UnsupportedParameters, construct_shortest, embedded_example_5_3
from .subspace import complementary_partition, weight3_codewords
from .verifier import (
    admissible_n_residues,
    check_necessary_conditions,
    minimum_admissible_n,
    verify_msts,
    verify_ptd,
)

OK, REJECTED, USAGE = 0, 1, 2


def _err(msg: str) -> None:
    print(f"msts: {msg}", file=sys.stderr)


def _emit_design(design: Design, args, label: str) -> int:
    if not args.no_verify:
        report = verify_msts(design)
        if not report.accepted:
            _err(f"{label}: verification FAILED")
            print(json.dumps(report.to_json()), file=sys.stderr)
            return REJECTED
    summary = f"{label}: alphabet length {design.alphabet.n_total}, {len(design)} codewords"
    shape = design.alphabet.shape()
    if shape is not None:
        summary += f" (n={shape[0]}, k={shape[1]}, l={shape[2]})"
    if args.output:
        try:
            io.write_design(design, args.output)
        except OSError as e:
            _err(str(e))
            return USAGE
        print(summary)
    else:
        io.write_design(design, sys.stdout)
        print(summary, file=sys.stderr)
    return OK


def cmd_construct(args) -> int:
    k, l = args.k, args.l
    if (k, l) == (5, 3):
        return _emit_design(embedded_example_5_3(), args, "construct")
    if k % 2 == 1 and l % 2 == 1 and not admissible_n_residues(k, l):
        _err(f"no MS(2,3,Z_2^n x Z_{k + 1} x Z_{l + 1}) exists for any n: k = l = 5 (mod 6)")
        return USAGE
    try:
        design = construct_shortest(k, l)
    except UnsupportedParameters as e:
        _err(f"k={k}, l={l}: {e}")
        return USAGE
    return _emit_design(design, args, "construct")


def cmd_verify(args) -> int:
    try:
        with open(args.input, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        _err(str(e))
        return USAGE
    try:
        first = json.loads(text.split("\n", 1)[0])
    except json.JSONDecodeError as e:
        _err(f"malformed JSON: {e}")
        return USAGE
    try:
        if isinstance(first, dict) and "m" in first and "factors" in first:
            report = verify_ptd(io.ptd_from_text(text))
        else:
            report = verify_msts(io.design_from_text(text))
    except io.MalformedJSON as e:
        _err(f"malformed JSON: {e}")
        return USAGE
    except io.InvalidContent as e:
        _err(f"invalid design file: {e}")
        return USAGE
    print(json.dumps(report.to_json()))
    return OK if report.accepted else REJECTED


def cmd_check(args) -> int:
    k, l = args.k, args.l
    if args.n is not None:
        report = check_necessary_conditions(k, l, args.n)
        for i, ok in enumerate(report.conditions, start=1):
            print(f"condition ({i}): {'pass' if ok else 'FAIL'}")
        print(f"overall: {'pass' if report.overall else 'FAIL'}")
        return OK if report.overall else REJECTED
    if k % 2 == 0 or l % 2 == 0:
        print("residues mod 6: {}")
        _err("condition (3) fails: k and l must be odd")
        return REJECTED
    residues = sorted(admissible_n_residues(k, l))
    print("residues mod 6: {" + ",".join(map(str, residues)) + "}")
    if not residues:
        _err("k = l = 5 (mod 6): no admissible n")
        return REJECTED
    print(f"minimum n: {minimum_admissible_n(k, l)}")
    return OK


def cmd_partition_code(args) -> int:
    try:
        p = complementary_partition(args.kprime, args.lprime)
    except ValueError as e:
        _err(str(e))
        return USAGE
    return _emit_design(weight3_codewords(p), args, "partition-code")


def cmd_ptd(args) -> int:
    m, r = args.m, args.r
    if not ptd_exists(m, r):
        _err(f"no ({m},{r})-pairs-triples design exists")
        return REJECTED
    ptd = construct_ptd(m, r, budget=args.budget)
    if ptd is None:
        _err(f"search budget of {args.budget} nodes exhausted for ({m},{r})")
        return REJECTED
    if not args.no_verify:
        report = verify_ptd(ptd)
        gdd_ok = verify_msts(ptd_to_gdd(ptd)).accepted if report.accepted else False
        if not (report.accepted and gdd_ok):
            _err("ptd: verification FAILED")
            return REJECTED
    summary = f"ptd: m={m}, r={r}, {len(ptd.factors)} factors, {len(ptd.triples)} triples"
    if args.output:
        try:
            io.write_ptd(ptd, args.output)
        except OSError as e:
            _err(str(e))
            return USAGE
        print(summary)
    else:
        io.write_ptd(ptd, sys.stdout)
        print(summary, file=sys.stderr)
    return OK


def cmd_extend(args) -> int:
    try:
        base = io.read_design(args.base)
        ptd = io.read_ptd(args.ptd)
    except OSError as e:
        _err(str(e))
        return USAGE
    except io.DesignFormatError as e:
        _err(f"invalid input file: {e}")
        return USAGE
    try:
        plan = ExtensionPlan(base, ptd)
    except ValueError as e:
        _err(str(e))
        return REJECTED
    if not verify_msts(base).accepted:
        _err("base design fails verification")
        return REJECTED
    return _emit_design(extend(plan), args, "extend")


def cmd_example(args) -> int:
    return _emit_design(embedded_example_5_3(), args, "example")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="msts", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def with_output(p):
        p.add_argument("-o", "--output", help="output file (default: stdout)")
        p.add_argument("--no-verify", action="store_true", help="skip the post-construction verification")
        return p

    p = with_output(sub.add_parser("construct", help="shortest-length system, n = k*l"))
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="verify a design or PTD file")
    p.add_argument("input")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("check", help="necessary conditions for (k, l[, n])")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_check)

    p = with_output(sub.add_parser("partition-code", help="weight-3 words of a subspace-partition perfect code"))
    p.add_argument("--kprime", type=int, required=True)
    p.add_argument("--lprime", type=int, required=True)
    p.set_defaults(func=cmd_partition_code)

    p = with_output(sub.add_parser("ptd", help="(m, r)-pairs-triples design"))
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--budget", type=int, default=200_000, help="search node limit")
    p.set_defaults(func=cmd_ptd)

    p = with_output(sub.add_parser("extend", help="recursive extension of a base design by a PTD"))
    p.add_argument("--base", required=True)
    p.add_argument("--ptd", required=True)
    p.set_defaults(func=cmd_extend)

    p = with_output(sub.add_parser("example", help="the k=5, l=3 system"))
    p.set_defaults(func=cmd_example)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
