"""Command-line surface: spinlab <analyze|basis|represent|classify|generate|grow>.

Exit codes: 0 success, 2 parse/validation failure, 3 size bound
exceeded, 4 invariant constraint violation.  The environment variable
SPINLAB_MAX_DIM overrides the default p^n dimension bound for the
representation commands.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import forms, reps, words
from .errors import InvariantError, MatrixFormatError, SizeBoundError
from .formats import (
    ParsedMatrixFile,
    basis_to_dict,
    classification_to_dict,
    format_matrix_file,
    grow_to_dict,
    invariant_from_dict,
    invariant_to_dict,
    parse_basis_file,
    parse_matrix_file,
    report_to_dict,
    representation_to_dict,
)

EXIT_FORMAT = 2
EXIT_SIZE = 3
EXIT_INVARIANT = 4


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise MatrixFormatError(f"cannot read {path}: {exc.strerror}")


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(doc: dict, out: str | None) -> None:
    _emit(json.dumps(doc, indent=2, ensure_ascii=False) + "\n", out)


def _load_matrix(path: str, n_max: int | None) -> forms.CommutationMatrix:
    return parse_matrix_file(_read(path)).materialize(n_max)


def _max_dim() -> int:
    raw = os.environ.get("SPINLAB_MAX_DIM")
    if raw is None:
        return reps.DEFAULT_MAX_DIM
    try:
        return int(raw)
    except ValueError:
        raise MatrixFormatError(f"SPINLAB_MAX_DIM is not an integer: {raw!r}")


def _vec_text(v) -> str:
    return "[" + " ".join(str(int(t)) for t in v) + "]"


def _analyze_text(report: reps.StructureReport) -> str:
    kernel = (
        ", ".join(_vec_text(k) for k in report.kernel_basis)
        if report.kernel_basis
        else "(none)"
    )
    classes = (
        str(report.class_count)
        if report.class_count is not None
        else "n/a (classification is defined for p = 2 only)"
    )
    return (
        f"p: {report.p}\n"
        f"n: {report.n}\n"
        f"rank: {report.rank}\n"
        f"kernel dim: {report.kernel_dim}\n"
        f"kernel basis: {kernel}\n"
        f"center dim: {report.center_dim}\n"
        f"algebra: {report.descriptor}\n"
        f"simple: {'yes' if report.simple else 'no'}\n"
        f"classes: {classes}\n"
    )


def _grow_text(doc: dict) -> str:
    lines = [
        f"p: {doc['p']}",
        f"pattern: {' '.join(str(v) for v in doc['pattern'])}",
        "  n  rank",
    ]
    for row in doc["ranks"]:
        lines.append(f"{row['n']:>3}  {row['rank']:>4}")
    verdict = "yes" if doc["infinite_rank_conjectured"] else "no"
    lines.append(
        f"infinite rank conjectured: {verdict} "
        "(heuristic: finite prefixes cannot prove infinite rank)"
    )
    return "\n".join(lines) + "\n"


def _cmd_analyze(args) -> int:
    mat = _load_matrix(args.path, args.n_max)
    report = reps.structure_report(mat)
    if args.json:
        _emit_json(report_to_dict(report), args.out)
    else:
        _emit(_analyze_text(report), args.out)
    return 0


def _cmd_basis(args) -> int:
    mat = _load_matrix(args.path, args.n_max)
    basis = forms.symplectic_basis(mat)
    _emit_json(basis_to_dict(mat, basis), args.out)
    return 0


def _cmd_represent(args) -> int:
    mat = _load_matrix(args.path, args.n_max)
    max_dim = _max_dim()
    if args.kind == "prop11":
        if args.invariant:
            raise InvariantError("--invariant applies to --kind irr only")
        rep = reps.prop11_rep(mat, max_dim=max_dim)
    else:
        invariant = None
        if args.invariant:
            try:
                doc = json.loads(_read(args.invariant))
            except json.JSONDecodeError as exc:
                raise MatrixFormatError(f"bad invariant JSON: {exc}")
            invariant = invariant_from_dict(doc, mat)
        rep = reps.irreducible_rep(mat, invariant, max_dim=max_dim)
    _emit_json(representation_to_dict(rep), args.out)
    return 0


def _cmd_classify(args) -> int:
    mat = _load_matrix(args.path, args.n_max)
    invariants = words.enumerate_invariants(mat)
    _emit_json(classification_to_dict(mat, invariants), args.out)
    return 0


def _cmd_generate(args) -> int:
    if args.clifford is not None:
        mat = forms.clifford_matrix(2, args.clifford)
    elif args.random is not None:
        if args.seed is None:
            raise MatrixFormatError("--random requires --seed for reproducibility")
        mat = forms.random_alternating(args.prime, args.random, args.seed)
    else:
        ref_path, basis_path = args.from_basis
        ref = _load_matrix(ref_path, None)
        vectors = parse_basis_file(_read(basis_path), ref.p, ref.n)
        mat = forms.matrix_from_basis(ref, vectors)
    _emit(format_matrix_file(mat), args.out)
    return 0


def _cmd_grow(args) -> int:
    parsed = parse_matrix_file(_read(args.path))
    if parsed.kind != "toeplitz":
        raise MatrixFormatError("grow requires a 'p toeplitz m' matrix file")
    mat = parsed.materialize(args.n_max)
    doc = grow_to_dict(mat, reps.structure_report(mat))
    if args.json:
        _emit_json(doc, args.out)
    else:
        _emit(_grow_text(doc), args.out)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spinlab",
        description="Analyze spin-system commutation matrices over Z_p.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, n_max_help):
        p.add_argument("path", help="matrix file")
        p.add_argument("--n-max", type=int, default=None, help=n_max_help)
        p.add_argument("--out", default=None, help="write output to a file")

    toeplitz_help = "materialization size for banded files (default: 2x pattern length)"

    p_analyze = sub.add_parser("analyze", help="structure report for a matrix")
    add_common(p_analyze, toeplitz_help)
    p_analyze.add_argument("--json", action="store_true", help="emit the JSON report")
    p_analyze.set_defaults(func=_cmd_analyze)

    p_basis = sub.add_parser("basis", help="symplectic basis and kernel (JSON)")
    add_common(p_basis, toeplitz_help)
    p_basis.set_defaults(func=_cmd_basis)

    p_rep = sub.add_parser("represent", help="serialize a unitary representation")
    add_common(p_rep, toeplitz_help)
    p_rep.add_argument(
        "--kind", choices=["prop11", "irr"], required=True,
        help="tensor-ladder (prop11) or minimal irreducible (irr)",
    )
    p_rep.add_argument(
        "--invariant", default=None,
        help="JSON file with the target standard invariant (irr, p = 2)",
    )
    p_rep.set_defaults(func=_cmd_represent)

    p_cls = sub.add_parser("classify", help="enumerate invariant classes (p = 2)")
    add_common(p_cls, toeplitz_help)
    p_cls.set_defaults(func=_cmd_classify)

    p_gen = sub.add_parser("generate", help="emit a matrix file")
    mode = p_gen.add_mutually_exclusive_group(required=True)
    mode.add_argument("--clifford", type=int, metavar="N",
                      help="n x n all-ones-off-diagonal matrix (p = 2)")
    mode.add_argument("--random", type=int, metavar="N",
                      help="seeded uniform alternating n x n matrix")
    mode.add_argument("--from-basis", nargs=2, metavar=("REF", "BASIS"),
                      help="matrix of omega_REF evaluated on basis-file vectors")
    p_gen.add_argument("--seed", type=int, default=None, help="seed for --random")
    p_gen.add_argument("--prime", type=int, default=2, help="modulus for --random")
    p_gen.add_argument("--out", default=None, help="write output to a file")
    p_gen.set_defaults(func=_cmd_generate)

    p_grow = sub.add_parser("grow", help="rank growth table of a banded pattern")
    p_grow.add_argument("path", help="toeplitz matrix file")
    p_grow.add_argument("--n-max", type=int, required=True, help="largest prefix")
    p_grow.add_argument("--json", action="store_true", help="emit JSON")
    p_grow.add_argument("--out", default=None, help="write output to a file")
    p_grow.set_defaults(func=_cmd_grow)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except MatrixFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    except SizeBoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except InvariantError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVARIANT


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
