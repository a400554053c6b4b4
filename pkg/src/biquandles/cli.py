"""Command-line interface.

Subcommands:
    validate    check a biquandle file against all axioms
    alexander   generate an Alexander biquandle table
    enumerate   write every biquandle of a given order to a directory
    cohomology  print a reduced 2-cocycle basis (and classify a given cochain)
    colorings   list or count colorings of a Gauss code
    invariant   evaluate the 2-cocycle state-sum invariant
    suite       invariant values for a whole reduced basis

Exit codes: 0 success, 1 domain error (invalid input data), 2 usage error.
All output is deterministic; --jobs only changes wall time.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .cohomology import (CochainClass, classify_cochain, format_cochain,
                         read_cochain, reduced_cohomology_basis, write_cochain)
from .coloring import counting_invariant, enumerate_colorings
from .core import (BlockConvention, ParseError, alexander_biquandle,
                   read_biquandle, validate_biquandle, write_biquandle)
from .gauss import parse_gauss_code, serialize_gauss_code
from .invariant import yb_invariant, yb_invariant_suite
from .linalg import FieldSpec
from .presentation import format_presentation, knot_presentation, reduce_presentation
from .search import ENUMERATION_LIMIT, enumerate_biquandles


class DomainError(Exception):
    """Input parsed but failed a mathematical requirement."""


def _field(text: str) -> FieldSpec:
    try:
        return FieldSpec.from_name(text)
    except ValueError as e:
        raise DomainError(str(e))


def _convention(text: str) -> BlockConvention:
    return BlockConvention.from_name(text)


def _load_biquandle(path: str, convention: BlockConvention):
    with open(path) as fh:
        text = fh.read()
    try:
        T = read_biquandle(text, convention)
    except ParseError as e:
        raise DomainError(f"{path}: {e}")
    return T


def _load_code(path: str):
    with open(path) as fh:
        text = fh.read()
    try:
        return parse_gauss_code(text)
    except ValueError as e:
        raise DomainError(f"{path}: {e}")


def _print_presentation(code, out):
    pres = knot_presentation(code)
    out.write("presentation:\n")
    for line in format_presentation(pres).splitlines():
        out.write("  " + line + "\n")
    red = reduce_presentation(pres)
    out.write(f"reduced ({len(red.generators)} generators):\n")
    for line in format_presentation(red).splitlines():
        out.write("  " + line + "\n")


def _cmd_validate(args, out):
    T = _load_biquandle(args.biquandle, args.block_convention)
    report = T.validation
    if args.porcelain:
        out.write(json.dumps({"ok": report.ok,
                              "failures": [list(f) for f in report.failures]}) + "\n")
    else:
        out.write("ok\n" if report.ok else "invalid\n")
        for axiom, witness in report.failures:
            out.write(f"  axiom {axiom} fails at {witness}\n")
    return 0 if report.ok else 1


def _cmd_alexander(args, out):
    try:
        T = alexander_biquandle(args.n, args.s, args.t)
    except ValueError as e:
        raise DomainError(str(e))
    text = write_biquandle(T, args.block_convention)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        out.write(text)
    return 0


def _cmd_enumerate(args, out):
    try:
        structures = enumerate_biquandles(args.n, limit=args.limit)
    except ValueError as e:
        raise DomainError(str(e))
    os.makedirs(args.output_dir, exist_ok=True)
    width = max(4, len(str(len(structures))))
    for i, T in enumerate(structures, start=1):
        name = os.path.join(args.output_dir, f"{i:0{width}d}.bq")
        with open(name, "w") as fh:
            fh.write(write_biquandle(T, args.block_convention))
    out.write(f"{len(structures)} biquandles of order {args.n}\n")
    return 0


def _cmd_cohomology(args, out):
    T = _load_biquandle(args.biquandle, args.block_convention)
    if not T.is_valid:
        raise DomainError("biquandle fails validation")
    basis = reduced_cohomology_basis(T, args.field)
    if args.porcelain:
        payload = {"field": args.field.name(), "dimension": len(basis),
                   "basis": [{f"{x} {y}": str(phi.value(x, y))
                              for x in range(1, phi.n + 1) for y in range(1, phi.n + 1)
                              if phi.value(x, y) != 0} for phi in basis]}
        out.write(json.dumps(payload) + "\n")
    else:
        out.write(f"reduced H^2 dimension {len(basis)} over {args.field.name()}\n")
        for k, phi in enumerate(basis, start=1):
            out.write(f"phi[{k}] = {format_cochain(phi)}\n")
    if args.classify:
        with open(args.classify) as fh:
            phi = read_cochain(fh.read(), T.n)
        result = classify_cochain(T, phi)
        out.write(f"classification: {result.kind.value}"
                  f"{' (RI-reduced)' if result.ri_reduced else ''}\n")
    if args.output_dir:
        os.makedirs(args.output_dir, exist_ok=True)
        for k, phi in enumerate(basis, start=1):
            with open(os.path.join(args.output_dir, f"phi{k}.cyc"), "w") as fh:
                fh.write(write_cochain(phi))
    return 0


def _cmd_colorings(args, out):
    T = _load_biquandle(args.biquandle, args.block_convention)
    if not T.is_valid:
        raise DomainError("biquandle fails validation")
    code = _load_code(args.code)
    if args.show_presentation:
        _print_presentation(code, out)
    cols = enumerate_colorings(code, T, jobs=args.jobs)
    if args.porcelain:
        out.write(json.dumps({"count": len(cols), "colorings": [list(c) for c in cols]}) + "\n")
        return 0
    if args.count_only:
        out.write(f"{len(cols)}\n")
        return 0
    out.write(f"{len(cols)} colorings\n")
    for c in cols:
        out.write(" ".join(f"{arc}:{elt}" for arc, elt in enumerate(c, start=1)) + "\n")
    return 0


def _cmd_invariant(args, out):
    T = _load_biquandle(args.biquandle, args.block_convention)
    code = _load_code(args.code)
    with open(args.cocycle) as fh:
        phi = read_cochain(fh.read(), T.n)
    if args.show_presentation:
        _print_presentation(code, out)
    try:
        value = yb_invariant(code, T, phi, jobs=args.jobs)
    except ValueError as e:
        raise DomainError(str(e))
    if args.porcelain:
        out.write(json.dumps({"terms": [[str(e_), m] for e_, m in
                                        sorted(value.as_dict().items())]}) + "\n")
    else:
        out.write(str(value) + "\n")
    return 0


def _cmd_suite(args, out):
    T = _load_biquandle(args.biquandle, args.block_convention)
    if not T.is_valid:
        raise DomainError("biquandle fails validation")
    code = _load_code(args.code)
    if args.show_presentation:
        _print_presentation(code, out)
    results = yb_invariant_suite(code, T, args.field, jobs=args.jobs)
    if args.porcelain:
        payload = [{"cocycle": format_cochain(phi),
                    "terms": [[str(e_), m] for e_, m in sorted(ms.as_dict().items())]}
                   for phi, ms in results]
        out.write(json.dumps(payload) + "\n")
    else:
        for k, (phi, ms) in enumerate(results, start=1):
            out.write(f"phi[{k}]: {ms}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="biquandles",
        description="finite biquandles, Yang-Baxter cohomology, and "
                    "cocycle state-sum invariants of virtual knots")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, code=False, biquandle=False, field=False, jobs=False):
        p.add_argument("--block-convention", type=_convention,
                       default=BlockConvention.DEFINITION,
                       metavar="{definition|listing}",
                       help="which operations the four table blocks hold")
        p.add_argument("--porcelain", action="store_true",
                       help="machine-readable JSON output")
        if code:
            p.add_argument("--code", required=True, help="Gauss code file")
            p.add_argument("--show-presentation", action="store_true",
                           help="print the derived presentation first")
        if biquandle:
            p.add_argument("--biquandle", required=True, help="biquandle table file")
        if field:
            p.add_argument("--field", type=_field, default=FieldSpec.from_name("Q"),
                           metavar="{Q|Zp:<prime>}", help="coefficient field")
        if jobs:
            p.add_argument("--jobs", type=int, default=1,
                           help="worker processes for the coloring search")

    p = sub.add_parser("validate", help="check a biquandle file")
    common(p, biquandle=True)
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("alexander", help="generate an Alexander biquandle")
    p.add_argument("n", type=int)
    p.add_argument("s", type=int)
    p.add_argument("t", type=int)
    p.add_argument("-o", "--output", help="write table here instead of stdout")
    common(p)
    p.set_defaults(func=_cmd_alexander)

    p = sub.add_parser("enumerate", help="enumerate all biquandles of an order")
    p.add_argument("n", type=int)
    p.add_argument("-o", "--output-dir", required=True)
    p.add_argument("--limit", type=int, default=ENUMERATION_LIMIT,
                   help="largest order accepted")
    common(p)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("cohomology", help="reduced 2-cocycle basis of a biquandle")
    common(p, biquandle=True, field=True)
    p.add_argument("--classify", metavar="FILE",
                   help="also classify the cochain in FILE")
    p.add_argument("-o", "--output-dir", help="write basis cocycle files here")
    p.set_defaults(func=_cmd_cohomology)

    p = sub.add_parser("colorings", help="colorings of a code by a biquandle")
    common(p, code=True, biquandle=True, jobs=True)
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=_cmd_colorings)

    p = sub.add_parser("invariant", help="cocycle state-sum invariant")
    common(p, code=True, biquandle=True, jobs=True)
    p.add_argument("--cocycle", required=True, help="cocycle file")
    p.set_defaults(func=_cmd_invariant)

    p = sub.add_parser("suite", help="invariant for each reduced basis cocycle")
    common(p, code=True, biquandle=True, field=True, jobs=True)
    p.set_defaults(func=_cmd_suite)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits 2 on usage errors already; normalize others
        return int(e.code) if e.code else 0
    except DomainError as e:
        # a flag value that parsed but failed a mathematical requirement
        print(f"error: {e}", file=sys.stderr)
        return 1
    try:
        return args.func(args, sys.stdout)
    except DomainError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except FileNotFoundError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
