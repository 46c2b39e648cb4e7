"""Commutation matrices and their bilinear forms over GF(p).

A commutation matrix C is alternating: zero diagonal and c_ji = -c_ij
(mod p).  It induces two forms on coordinate vectors:

    omega(x, y) = x^T C y          (commutation form, skew-symmetric)
    q_form(x, y) = x^T L y         (Weyl/reordering form, L = strict
                                    lower triangle of C)

oriented so that omega(u_i, u_j) = c_ij on standard unit vectors and
omega = q_form - q_form^T holds identically.  With this orientation the
word and matrix layers of the package reproduce the generator relation
u_i u_j = zeta^{c_ij} u_j u_i exactly for every prime, including odd p
where transposition flips signs.

The constructive basis algorithm splits GF(p)^n into ker(omega) plus
hyperbolic pairs (e_i, f_i) with omega(e_i, f_j) = delta_ij, choosing
every pivot deterministically.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import gf


@dataclass(frozen=True, eq=False)
class CommutationMatrix:
    """An n x n alternating matrix over GF(p).

    ``pattern`` records the banded (Toeplitz) source when the matrix was
    materialized from one: pattern[k-1] is the entry at separation k on
    the upper triangle, the lower triangle carrying the negated mirror.
    """

    p: int
    entries: np.ndarray
    pattern: tuple[int, ...] | None = None

    def __post_init__(self):
        gf.validate_prime(self.p)
        ent = np.array(self.entries, dtype=np.int64)  # private copy, frozen below
        if ent.ndim != 2 or ent.shape[0] != ent.shape[1]:
            raise ValueError(f"entries must be square, got shape {ent.shape}")
        if ent.shape[0] == 0:
            raise ValueError("empty commutation matrix")
        if ((ent < 0) | (ent >= self.p)).any():
            raise ValueError(f"entries must lie in [0, {self.p})")
        if np.diagonal(ent).any():
            raise ValueError("diagonal entries must be zero")
        if ((ent + ent.T) % self.p).any():
            raise ValueError("matrix must satisfy c_ji = -c_ij mod p")
        ent.flags.writeable = False
        object.__setattr__(self, "entries", ent)

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    def __eq__(self, other) -> bool:
        if not isinstance(other, CommutationMatrix):
            return NotImplemented
        return (
            self.p == other.p
            and np.array_equal(self.entries, other.entries)
            and self.pattern == other.pattern
        )

    def prefix(self, k: int) -> "CommutationMatrix":
        """The upper-left k x k corner, keeping the pattern source."""
        if not 1 <= k <= self.n:
            raise ValueError(f"prefix size {k} out of range 1..{self.n}")
        return CommutationMatrix(self.p, self.entries[:k, :k].copy(), self.pattern)


def commutation_matrix(p: int, entries) -> CommutationMatrix:
    """Validate and wrap an explicit entry grid."""
    return CommutationMatrix(p, np.asarray(entries, dtype=np.int64))


def toeplitz_matrix(p: int, pattern, n: int) -> CommutationMatrix:
    """Materialize the n x n prefix of a banded commutation matrix.

    ``pattern`` lists the values at separations 1..m; separations beyond
    the pattern are zero.  The upper triangle takes the pattern value,
    the lower triangle its negation mod p.
    """
    gf.validate_prime(p)
    pat = [int(v) for v in pattern]
    if any(v < 0 or v >= p for v in pat):
        raise ValueError(f"pattern values must lie in [0, {p})")
    ent = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(i + 1, n):
            sep = j - i
            if sep <= len(pat):
                ent[i, j] = pat[sep - 1]
                ent[j, i] = (-pat[sep - 1]) % p
    return CommutationMatrix(p, ent, pattern=tuple(pat))


def clifford_matrix(p: int, n: int) -> CommutationMatrix:
    """All-ones off the diagonal: the matrix of n pairwise anticommuting
    self-adjoint unitaries.  Defined in characteristic 2 only."""
    if p != 2:
        raise ValueError("the Clifford matrix is defined for p = 2 only")
    ent = np.ones((n, n), dtype=np.int64) - np.eye(n, dtype=np.int64)
    return CommutationMatrix(2, ent)


def standard_form(p: int, r: int, d: int = 0) -> CommutationMatrix:
    """Block matrix of r hyperbolic 2x2 blocks [[0,1],[-1,0]] plus a d x d
    zero block: the standard model of rank 2r and kernel dimension d."""
    n = 2 * r + d
    ent = np.zeros((n, n), dtype=np.int64)
    for i in range(r):
        ent[2 * i, 2 * i + 1] = 1
        ent[2 * i + 1, 2 * i] = (-1) % p
    return CommutationMatrix(p, ent)


def random_alternating(p: int, n: int, seed: int) -> CommutationMatrix:
    """Uniformly random alternating matrix, deterministic per seed.

    The strict upper triangle is filled i.i.d. uniform over [0, p) in
    row-major order and mirrored with negation.  Uses the stdlib
    Mersenne generator so byte-level reproducibility does not depend on
    the numpy version.
    """
    import random

    rng = random.Random(seed)
    ent = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(i + 1, n):
            c = rng.randrange(p)
            ent[i, j] = c
            ent[j, i] = (-c) % p
    return CommutationMatrix(p, ent)


def _check_length(mat: CommutationMatrix, *vecs) -> list[np.ndarray]:
    out = []
    for v in vecs:
        a = gf.as_gf_array(v, mat.p)
        if a.shape != (mat.n,):
            raise ValueError(f"vector length {a.shape} does not match n={mat.n}")
        out.append(a)
    return out


def omega(mat: CommutationMatrix, x, y) -> int:
    """The commutation form x^T C y mod p; omega(u_i, u_j) = c_ij."""
    x, y = _check_length(mat, x, y)
    return int(x @ mat.entries @ y % mat.p)


def q_form(mat: CommutationMatrix, x, y) -> int:
    """The word-reordering form x^T L y mod p, L the strict lower
    triangle of C.  Satisfies omega(x,y) = q_form(x,y) - q_form(y,x)."""
    x, y = _check_length(mat, x, y)
    return int(x @ np.tril(mat.entries, -1) @ y % mat.p)


def form_kernel(mat: CommutationMatrix) -> list[np.ndarray]:
    """Deterministic basis of ker(omega) = {x : Cx = 0}."""
    return gf.kernel_basis(mat.entries, mat.p)


def form_rank(mat: CommutationMatrix) -> int:
    """Rank of the form: n minus the kernel dimension.  Always even."""
    return mat.n - len(form_kernel(mat))


@dataclass(frozen=True, eq=False)
class SymplecticBasis:
    """Hyperbolic pairs plus a kernel basis spanning GF(p)^n.

    omega(e_i, e_j) = omega(f_i, f_j) = 0 and omega(e_i, f_j) = delta_ij;
    the kernel vectors span ker(omega) and e + f + kernel is a basis.
    """

    e: tuple[np.ndarray, ...]
    f: tuple[np.ndarray, ...]
    kernel: tuple[np.ndarray, ...]

    @property
    def r(self) -> int:
        return len(self.e)

    @property
    def d(self) -> int:
        return len(self.kernel)

    def column_matrix(self) -> np.ndarray:
        """Columns (e_1, f_1, ..., e_r, f_r, k_1, ..., k_d)."""
        cols = []
        for ei, fi in zip(self.e, self.f):
            cols.extend([ei, fi])
        cols.extend(self.kernel)
        return np.stack(cols, axis=1)


def _pair_up(
    mat: CommutationMatrix, comp: list[np.ndarray]
) -> tuple[list[np.ndarray], list[np.ndarray]]:
    """Greedy hyperbolic pairing inside span(comp).

    Requires omega restricted to span(comp) to be nondegenerate; each
    round takes the first basis vector as e, solves for a partner f with
    omega(e, f) = 1 (free variables zero), and restricts the basis to
    the symplectic complement of the new pair.  Terminates with comp
    empty because the restricted form stays nondegenerate.
    """
    p, ent = mat.p, mat.entries
    e_list: list[np.ndarray] = []
    f_list: list[np.ndarray] = []
    while comp:
        e = comp[0]
        b = np.stack(comp, axis=0)
        row = (b @ ent.T @ e) % p  # row[i] = omega(e, comp[i])
        t = gf.solve(row.reshape(1, -1), np.array([1]), p)
        assert t is not None, "partner must exist in a nondegenerate block"
        f = (t @ b) % p
        e_list.append(e)
        f_list.append(f)
        constraints = np.stack([(b @ ent @ e) % p, (b @ ent @ f) % p], axis=0)
        comp = [(t @ b) % p for t in gf.kernel_basis(constraints, p)]
    return e_list, f_list


def symplectic_basis(mat: CommutationMatrix) -> SymplecticBasis:
    """Constructive decomposition GF(p)^n = ker(omega) + hyperbolic pairs.

    The kernel complement is spanned by the standard unit vectors at the
    pivot columns of the elimination, and pairing proceeds greedily, so
    the result is deterministic.
    """
    kernel = form_kernel(mat)
    _, pivots = gf.rref(mat.entries, mat.p)
    eye = np.eye(mat.n, dtype=np.int64)
    comp = [eye[j] for j in pivots]
    e_list, f_list = _pair_up(mat, comp)
    return SymplecticBasis(tuple(e_list), tuple(f_list), tuple(kernel))


def extend_symplectic_basis(
    mat: CommutationMatrix, existing: SymplecticBasis
) -> SymplecticBasis:
    """Grow a basis to a larger matrix that extends the old one.

    ``mat`` must have the same modulus and contain the old matrix as its
    upper-left block.  Relations among zero-padded old pairs evaluate on
    unchanged coordinates, so every old pair stays valid verbatim; the
    new basis keeps them as a prefix of e/f and recomputes the kernel.
    """
    n = mat.n
    old_vecs = list(existing.e) + list(existing.f) + list(existing.kernel)
    n_old = 2 * existing.r + existing.d
    if old_vecs and old_vecs[0].shape != (n_old,):
        raise ValueError("existing basis is inconsistent")
    if n < n_old:
        raise ValueError(f"matrix size {n} smaller than existing basis {n_old}")
    pad = lambda v: np.concatenate([v, np.zeros(n - n_old, dtype=np.int64)])
    e_list = [pad(v) for v in existing.e]
    f_list = [pad(v) for v in existing.f]

    kernel = form_kernel(mat)
    # Symplectic complement T of the span of the old pairs, which contains
    # the new kernel; pairing happens in a complement of the kernel inside T.
    if e_list:
        constraints = np.stack(
            [(mat.entries @ v) % mat.p for v in e_list + f_list], axis=0
        )
        t_basis = gf.kernel_basis(constraints, mat.p)
    else:
        t_basis = [np.eye(n, dtype=np.int64)[j] for j in range(n)]
    comp: list[np.ndarray] = []
    span = list(kernel)
    span_rank = len(kernel)
    for v in t_basis:
        if gf.rank(np.stack(span + [v], axis=0), mat.p) > span_rank:
            span.append(v)
            span_rank += 1
            comp.append(v)
    new_e, new_f = _pair_up(mat, comp)
    return SymplecticBasis(
        tuple(e_list + new_e), tuple(f_list + new_f), tuple(kernel)
    )


def _prefix_match(big: CommutationMatrix, small: CommutationMatrix) -> None:
    if big.p != small.p:
        raise ValueError(f"modulus mismatch: {big.p} vs {small.p}")
    if big.n < small.n:
        raise ValueError(f"prefix larger than matrix: {small.n} > {big.n}")
    if not np.array_equal(big.entries[: small.n, : small.n], small.entries):
        raise ValueError("upper-left block does not match the existing prefix")


def grow_basis(
    big: CommutationMatrix, small: CommutationMatrix, existing: SymplecticBasis
) -> SymplecticBasis:
    """extend_symplectic_basis with an explicit prefix-matrix check."""
    _prefix_match(big, small)
    return extend_symplectic_basis(big, existing)


def congruence_to_standard(mat: CommutationMatrix) -> np.ndarray:
    """Invertible T with T^T C T equal to the standard block form.

    Columns are (e_1, f_1, ..., e_r, f_r, k_1, ..., k_d), so T^T C T is
    a direct sum of r blocks [[0,1],[-1,0]] followed by a zero block,
    exactly over GF(p).
    """
    return symplectic_basis(mat).column_matrix()


def matrix_from_basis(ref: CommutationMatrix, vectors) -> CommutationMatrix:
    """The commutation matrix of a family of vectors under omega_ref:
    entry (i, j) is omega_ref(v_i, v_j).  Alternating by construction;
    nondegenerate whenever the vectors form a basis and ref does."""
    v = np.stack([gf.as_gf_array(x, ref.p) for x in vectors], axis=0)
    if v.shape[1] != ref.n:
        raise ValueError(f"vectors must have length n={ref.n}")
    ent = (v @ ref.entries @ v.T) % ref.p
    return CommutationMatrix(ref.p, ent)
