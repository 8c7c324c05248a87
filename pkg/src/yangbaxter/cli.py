"""Command-line interface.

Exit codes: 0 success, 1 validation failure, 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import __version__
from .entanglement import classify_gate
from .exceptions import (
    DimensionError,
    PartitionError,
    PermutationError,
    ResourceLimitError,
)
from .factory import certify_report, entangling_gate, primitive_gate
from .gates import NAMED
from .linalg import DEFAULT_TOL, check_permutation, parse_cycles
from .products import BlockPartition, PartitionedMatrix, box, tracy_singh
from .serialize import (
    FormatError,
    build_report,
    dumps,
    format_report,
    matrix_from_json,
    matrix_to_json,
    read_json,
    read_matrix_market,
    write_matrix_market,
    write_text,
)
from .settheory import (
    cyclic_prime,
    enumerate_involutive,
    permutation_solution,
    square_free_prime,
    to_matrix,
    trivial,
    validate,
)
from .ybe import VERIFY_CAP, certify

EXIT_OK, EXIT_INVALID, EXIT_USAGE = 0, 1, 2

FAMILIES = ("trivial", "perm", "cyclic", "squarefree", *NAMED)


def _parse_sigma(text: str, n: int | None) -> list[int]:
    """Accept cycle notation ``(1,2,3)`` or a 1-based table ``2,3,1``."""
    text = text.strip()
    if text.startswith("("):
        if n is None:
            n = max(int(t) for t in text.replace("(", ",").replace(")", ",").split(",") if t.strip())
        return parse_cycles(text, n)
    table = [int(t) - 1 for t in text.split(",")]
    return list(check_permutation(table, len(table)))


def _load_matrix(path: str) -> tuple[np.ndarray, BlockPartition | None]:
    return matrix_from_json(read_json(path))


def _emit_report(report: dict, args) -> None:
    text = format_report(report) if getattr(args, "text", False) else dumps(report)
    write_text(text, args.output)


def cmd_gen(args) -> int:
    fam = args.family
    if fam == "trivial":
        _require(args.n, "--n")
        m = to_matrix(trivial(args.n))
    elif fam == "perm":
        _require(args.sigma, "--sigma")
        m = to_matrix(permutation_solution(_parse_sigma(args.sigma, args.n)))
    elif fam == "cyclic":
        _require(args.p, "--p")
        m = to_matrix(cyclic_prime(args.p))
    elif fam == "squarefree":
        _require(args.p, "--p")
        m = to_matrix(square_free_prime(args.p))
    elif fam == "swap":
        m = NAMED["swap"](args.n or 2)
    else:
        m = NAMED[fam]()
    write_text(dumps(matrix_to_json(m)), args.output)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    sols = enumerate_involutive(args.n, up_to="literal" if args.literal else "isomorphism")
    out = []
    for s in sols:
        v = validate(s)
        out.append({**s.to_json(), "square_free": v.square_free, "trivial": v.trivial})
    write_text(dumps({"n": args.n, "count": len(out), "solutions": out}), args.output)
    return EXIT_OK


def cmd_product(args) -> int:
    a, pa = _load_matrix(args.a)
    b, pb = _load_matrix(args.b)
    if args.canonical:
        m = box(a, b)
        write_text(dumps(matrix_to_json(m)), args.output)
        return EXIT_OK
    pa = BlockPartition.parse(args.partition_a) if args.partition_a else pa
    pb = BlockPartition.parse(args.partition_b) if args.partition_b else pb
    pa = pa or BlockPartition.single(*a.shape)
    pb = pb or BlockPartition.single(*b.shape)
    result = tracy_singh(PartitionedMatrix(a, pa), PartitionedMatrix(b, pb))
    write_text(dumps(matrix_to_json(result)), args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    m, _ = _load_matrix(args.matrix)
    cert = certify(m, args.local_dim, args.tol, verify_cap=args.verify_cap, seed=args.seed)
    subject = {"matrix": args.matrix, "rows": m.shape[0], "local_dim": cert.local_dim}
    notes = [] if cert.valid else ["not an R-matrix"]
    report = build_report(subject, cert, seed=args.seed, notes=notes, timestamp=True)
    _emit_report(report, args)
    if not cert.valid:
        print("not an R-matrix", file=sys.stderr)
        return EXIT_INVALID
    return EXIT_OK


def cmd_classify(args) -> int:
    m, _ = _load_matrix(args.matrix)
    cls = classify_gate(m, unitary_required=args.unitary_required, seed=args.seed)
    subject = {"matrix": args.matrix, "rows": m.shape[0], "local_dim": cls.local_dim}
    notes = [] if cls.is_gate else ["not a gate: matrix is not unitary"]
    report = build_report(subject, classification=cls, seed=args.seed, notes=notes, timestamp=True)
    _emit_report(report, args)
    return EXIT_INVALID if cls.verdict == "undetermined" else EXIT_OK


def cmd_factory(args) -> int:
    build = entangling_gate if args.kind == "entangling" else primitive_gate
    g = build(args.dim, verify_cap=args.verify_cap, seed=args.seed)
    report = certify_report(g)
    report["timestamp"] = build_report({}, timestamp=True)["timestamp"]
    _emit_report(report, args)
    if args.gate_output:
        write_text(dumps(matrix_to_json(g.gate)), args.gate_output)
    return EXIT_OK


def cmd_export(args) -> int:
    m, _ = _load_matrix(args.matrix)
    if args.format == "json":
        write_text(dumps(matrix_to_json(m)), args.output)
    else:
        if args.output in (None, "-"):
            write_matrix_market(m, sys.stdout.buffer)
        else:
            write_matrix_market(m, args.output)
    return EXIT_OK


def cmd_import(args) -> int:
    m = read_matrix_market(args.input)
    write_text(dumps(matrix_to_json(m)), args.output)
    return EXIT_OK


def _require(value, flag: str) -> None:
    if value is None:
        raise UsageError(f"{flag} is required for this family")


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="yangbaxter", description="Yang-Baxter R-matrices, Tracy-Singh products and gates."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        p.add_argument("--output", "-o", default="-", help="output file, '-' for stdout")
        p.add_argument("--seed", type=int, default=0)
        return p

    p = add("gen", cmd_gen, "emit a named matrix as JSON")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--n", type=int, help="set size (trivial, perm) or local dim (swap)")
    p.add_argument("--sigma", help="permutation, e.g. '(1,2,3)' or '2,3,1' (1-based)")
    p.add_argument("--p", type=int, help="prime for cyclic/squarefree")

    p = add("enumerate", cmd_enumerate, "involutive non-degenerate solutions on n points")
    p.add_argument("--n", type=int, required=True, choices=(2, 3))
    p.add_argument("--literal", action="store_true", help="list every table, not one per isomorphism class")

    p = add("product", cmd_product, "Tracy-Singh product of two matrix files")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--partition-a", help="row sizes/col sizes, e.g. '2,2/1,2,1'")
    p.add_argument("--partition-b")
    p.add_argument("--canonical", action="store_true", help="canonical square-block partitions")

    for name, func, help_text in (
        ("verify", cmd_verify, "YBE and unitarity certificate"),
        ("classify", cmd_classify, "primitive/entangling verdict"),
    ):
        p = add(name, func, help_text)
        p.add_argument("--matrix", default="-", help="matrix JSON file, '-' for stdin")
        p.add_argument("--text", action="store_true", help="human-readable report")
        if name == "verify":
            p.add_argument("--local-dim", type=int)
            p.add_argument("--tol", type=float, default=DEFAULT_TOL)
            p.add_argument("--verify-cap", type=int, default=VERIFY_CAP)
        else:
            p.add_argument("--unitary-required", action="store_true")

    p = add("factory", cmd_factory, "certified entangling or primitive gate")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--kind", required=True, choices=("entangling", "primitive"))
    p.add_argument("--verify-cap", type=int, default=VERIFY_CAP)
    p.add_argument("--gate-output", help="also write the gate matrix JSON here")
    p.add_argument("--text", action="store_true", help="human-readable report")

    p = add("export", cmd_export, "convert matrix JSON to JSON or Matrix Market")
    p.add_argument("--matrix", default="-")
    p.add_argument("--format", required=True, choices=("json", "matrixmarket"))

    p = add("import", cmd_import, "convert Matrix Market to matrix JSON")
    p.add_argument("--input", required=True)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (
        UsageError,
        FormatError,
        OSError,
        DimensionError,
        PartitionError,
        PermutationError,
        ResourceLimitError,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
