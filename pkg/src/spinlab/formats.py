"""Text and JSON wire formats.

Matrix files are UTF-8, newline-delimited, with '#' comments:

    # explicit matrix
    p n
    <n rows of n integers in [0, p)>

    # banded (Toeplitz) pattern, values at separations 1..m
    p toeplitz m
    <m integers in [0, p)>

Parse and validation failures raise MatrixFormatError carrying the
offending 1-based line number.  JSON documents are schema-versioned,
emitted with a fixed field order, and never contain floats: phases are
always integer exponents mod p^2.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._version import __version__
from .errors import MatrixFormatError
from .forms import CommutationMatrix, SymplecticBasis, commutation_matrix, toeplitz_matrix
from .reps import MonomialMatrix, Representation, StructureReport
from .words import StandardInvariant

SCHEMA_VERSION = 1


# ---------------------------------------------------------------------------
# matrix files


@dataclass(frozen=True)
class ParsedMatrixFile:
    """Parsed header and body of a matrix file, before materialization."""

    p: int
    kind: str  # "explicit" | "toeplitz"
    entries: np.ndarray | None
    pattern: tuple[int, ...] | None

    def materialize(self, n: int | None = None) -> CommutationMatrix:
        """Build the commutation matrix.

        Explicit files ignore ``n``.  Banded files materialize their
        n x n prefix; when ``n`` is omitted the default is twice the
        pattern length (at least 2), enough to show the full band.
        """
        if self.kind == "explicit":
            return commutation_matrix(self.p, self.entries)
        size = n if n is not None else max(2, 2 * len(self.pattern))
        return toeplitz_matrix(self.p, self.pattern, size)


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if stripped:
            out.append((lineno, stripped))
    return out


def _ints(tokens: list[str], lineno: int) -> list[int]:
    values = []
    for tok in tokens:
        try:
            values.append(int(tok))
        except ValueError:
            raise MatrixFormatError(f"expected an integer, got {tok!r}", lineno)
    return values


def parse_matrix_file(text: str) -> ParsedMatrixFile:
    """Parse matrix file text; raises MatrixFormatError with a line number."""
    lines = _content_lines(text)
    if not lines:
        raise MatrixFormatError("empty matrix file", 1)
    header_line, header = lines[0]
    tokens = header.split()
    if len(tokens) == 3 and tokens[1] == "toeplitz":
        p = _ints([tokens[0]], header_line)[0]
        m = _ints([tokens[2]], header_line)[0]
        if m < 0:
            raise MatrixFormatError("pattern length must be nonnegative", header_line)
        values: list[int] = []
        for lineno, line in lines[1:]:
            for v in _ints(line.split(), lineno):
                if not 0 <= v < p:
                    raise MatrixFormatError(
                        f"pattern value {v} out of range [0, {p})", lineno
                    )
                values.append(v)
            if len(values) > m:
                raise MatrixFormatError(
                    f"more than {m} pattern values", lineno
                )
        if len(values) != m:
            raise MatrixFormatError(
                f"expected {m} pattern values, got {len(values)}", header_line
            )
        try:
            toeplitz_matrix(p, values, max(2, m + 1))
        except ValueError as exc:
            raise MatrixFormatError(str(exc), header_line)
        return ParsedMatrixFile(p, "toeplitz", None, tuple(values))
    if len(tokens) != 2:
        raise MatrixFormatError(
            "header must be 'p n' or 'p toeplitz m'", header_line
        )
    p, n = _ints(tokens, header_line)
    if n < 1:
        raise MatrixFormatError("matrix size must be at least 1", header_line)
    body = lines[1:]
    if len(body) != n:
        raise MatrixFormatError(
            f"expected {n} matrix rows, got {len(body)}",
            body[-1][0] if body else header_line,
        )
    rows = []
    for i, (lineno, line) in enumerate(body):
        row = _ints(line.split(), lineno)
        if len(row) != n:
            raise MatrixFormatError(
                f"row has {len(row)} entries, expected {n}", lineno
            )
        for v in row:
            if not 0 <= v < p:
                raise MatrixFormatError(f"entry {v} out of range [0, {p})", lineno)
        if row[i] != 0:
            raise MatrixFormatError("diagonal entry must be zero", lineno)
        rows.append(row)
    entries = np.array(rows, dtype=np.int64)
    bad = np.nonzero((entries + entries.T) % p)
    if bad[0].size:
        i = int(bad[0][0])
        raise MatrixFormatError(
            f"entry ({i}, {int(bad[1][0])}) breaks skew-symmetry c_ji = -c_ij",
            body[i][0],
        )
    try:
        commutation_matrix(p, entries)
    except ValueError as exc:
        raise MatrixFormatError(str(exc), header_line)
    return ParsedMatrixFile(p, "explicit", entries, None)


def format_matrix_file(mat: CommutationMatrix) -> str:
    """Explicit matrix file text; parses back to an equal matrix.
    (A banded source is written out in materialized form.)"""
    lines = [f"{mat.p} {mat.n}"]
    for row in mat.entries:
        lines.append(" ".join(str(int(v)) for v in row))
    return "\n".join(lines) + "\n"


def parse_basis_file(text: str, p: int, n: int) -> list[np.ndarray]:
    """Rows of n integers (comments allowed): basis vectors over GF(p)."""
    vectors = []
    for lineno, line in _content_lines(text):
        row = _ints(line.split(), lineno)
        if len(row) != n:
            raise MatrixFormatError(
                f"vector has {len(row)} entries, expected {n}", lineno
            )
        if any(not 0 <= v < p for v in row):
            raise MatrixFormatError(f"entries out of range [0, {p})", lineno)
        vectors.append(np.array(row, dtype=np.int64))
    if not vectors:
        raise MatrixFormatError("basis file contains no vectors", 1)
    return vectors


# ---------------------------------------------------------------------------
# JSON documents


def _vec(v: np.ndarray) -> list[int]:
    return [int(t) for t in v]


def invariant_to_dict(f: StandardInvariant) -> dict:
    return {
        "kernel_basis": [_vec(k) for k in f.kernel_basis],
        "values_exp_mod_p2": list(f.values),
    }


def invariant_from_dict(doc: dict, mat: CommutationMatrix) -> StandardInvariant:
    try:
        basis = [np.array(k, dtype=np.int64) for k in doc["kernel_basis"]]
        values = [int(v) for v in doc["values_exp_mod_p2"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise MatrixFormatError(f"bad invariant document: {exc}")
    return StandardInvariant(mat, tuple(basis), tuple(values))


def basis_to_dict(mat: CommutationMatrix, basis: SymplecticBasis) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "p": mat.p,
        "n": mat.n,
        "r": basis.r,
        "d": basis.d,
        "e": [_vec(v) for v in basis.e],
        "f": [_vec(v) for v in basis.f],
        "kernel": [_vec(v) for v in basis.kernel],
    }


def representation_to_dict(rep: Representation) -> dict:
    return {
        "p": rep.mat.p,
        "n": rep.mat.n,
        "dim": rep.dim,
        "generators": [
            {"perm": _vec(g.perm), "phase_exps": _vec(g.phases)}
            for g in rep.generators
        ],
    }


def representation_from_dict(
    doc: dict, mat: CommutationMatrix, kind: str = "loaded"
) -> Representation:
    try:
        if int(doc["p"]) != mat.p or int(doc["n"]) != mat.n:
            raise MatrixFormatError(
                "representation document does not match the matrix (p or n differ)"
            )
        gens = tuple(
            MonomialMatrix(
                mat.p,
                np.array(g["perm"], dtype=np.int64),
                np.array(g["phase_exps"], dtype=np.int64),
            )
            for g in doc["generators"]
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise MatrixFormatError(f"bad representation document: {exc}")
    if len(gens) != mat.n:
        raise MatrixFormatError("wrong number of generators")
    return Representation(mat, gens, kind)


def report_to_dict(report: StructureReport) -> dict:
    doc = {
        "schema": SCHEMA_VERSION,
        "tool": "spinlab",
        "version": __version__,
        "p": report.p,
        "n": report.n,
        "rank": report.rank,
        "kernel_dim": report.kernel_dim,
        "kernel_basis": [_vec(k) for k in report.kernel_basis],
        "center_dim": report.center_dim,
        "matrix_factor": report.matrix_factor,
        "descriptor": report.descriptor,
        "simple": report.simple,
        "class_count": report.class_count,
        "source": "toeplitz" if report.pattern is not None else "explicit",
    }
    if report.pattern is not None:
        doc["pattern"] = list(report.pattern)
        doc["prefix_ranks"] = list(report.prefix_ranks)
        doc["infinite_rank_conjectured"] = report.infinite_rank_conjectured
    return doc


def classification_to_dict(
    mat: CommutationMatrix, invariants: list[StandardInvariant]
) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "p": mat.p,
        "n": mat.n,
        "kernel_dim": invariants[0].d if invariants else 0,
        "class_count": len(invariants),
        "invariants": [invariant_to_dict(f) for f in invariants],
    }


def grow_to_dict(mat: CommutationMatrix, report: StructureReport) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "p": mat.p,
        "pattern": list(report.pattern),
        "n_max": mat.n,
        "ranks": [
            {"n": k + 1, "rank": r} for k, r in enumerate(report.prefix_ranks)
        ],
        "infinite_rank_conjectured": report.infinite_rank_conjectured,
    }


def dense_matrix_to_json(m: np.ndarray) -> list[list[list[float]]]:
    """Row-major export of a dense complex matrix as [re, im] pairs."""
    return [[[float(z.real), float(z.imag)] for z in row] for row in m]
