"""Exact monomial-matrix representations of spin systems.

Generators, words, and all relation checks live on monomial matrices:
one nonzero entry per row and column, each a p^2-th root of unity kept
as an integer exponent.  Products, tensor products, and powers are
therefore integer-exact, so the generator relations, orders, and kernel
scalars are verified with zero tolerance.  Dense complex matrices enter
only where sums are unavoidable: spectral projections (matrix units)
and the commutant solve.

Two constructions are provided:

* ``prop11_rep``: the tensor-ladder solution on p^n dimensions, which
  realizes any commutation matrix (usually reducibly);
* ``irreducible_rep``: the minimal p^r-dimensional irreducible model
  built from a hyperbolic-pair basis, one clock/shift slot per pair,
  with a prescribed standard invariant (p = 2).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import gf
from .errors import InvariantError, SizeBoundError
from .forms import CommutationMatrix, form_kernel, form_rank, symplectic_basis
from .words import (
    StandardInvariant,
    count_classes,
    phase_shift_invariant,
    realize_invariant,
)

DEFAULT_MAX_DIM = 1 << 20
COMMUTANT_MAX_DIM = 256


@dataclass(frozen=True, eq=False)
class MonomialMatrix:
    """A unitary with entry exp(2*pi*i*phases[j]/p^2) at (perm[j], j)."""

    p: int
    perm: np.ndarray
    phases: np.ndarray

    def __post_init__(self):
        perm = np.array(self.perm, dtype=np.int64)  # private copy, frozen below
        phases = np.asarray(self.phases, dtype=np.int64) % (self.p ** 2)
        if perm.ndim != 1 or phases.shape != perm.shape:
            raise ValueError("perm and phases must be 1-d of equal length")
        check = np.zeros(perm.shape[0], dtype=bool)
        check[perm] = True
        if not check.all():
            raise ValueError("perm is not a permutation")
        perm.flags.writeable = False
        phases.flags.writeable = False
        object.__setattr__(self, "perm", perm)
        object.__setattr__(self, "phases", phases)

    @property
    def dim(self) -> int:
        return self.perm.shape[0]

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonomialMatrix):
            return NotImplemented
        return (
            self.p == other.p
            and np.array_equal(self.perm, other.perm)
            and np.array_equal(self.phases, other.phases)
        )


def mono_identity(dim: int, p: int) -> MonomialMatrix:
    return MonomialMatrix(p, np.arange(dim), np.zeros(dim, dtype=np.int64))


def clock(p: int) -> MonomialMatrix:
    """V = diag(1, zeta, ..., zeta^{p-1}), zeta = e^{2*pi*i/p}."""
    gf.validate_prime(p)
    return MonomialMatrix(p, np.arange(p), p * np.arange(p))


def shift(p: int) -> MonomialMatrix:
    """S with S e_j = e_{j-1 mod p}; satisfies S V = zeta V S and
    S V^k = zeta^k V^k S, with S^p = V^p = 1."""
    gf.validate_prime(p)
    return MonomialMatrix(p, (np.arange(p) - 1) % p, np.zeros(p, dtype=np.int64))


def mono_mul(a: MonomialMatrix, b: MonomialMatrix) -> MonomialMatrix:
    if a.p != b.p or a.dim != b.dim:
        raise ValueError("dimension or modulus mismatch")
    return MonomialMatrix(a.p, a.perm[b.perm], b.phases + a.phases[b.perm])


def mono_tensor(a: MonomialMatrix, b: MonomialMatrix) -> MonomialMatrix:
    if a.p != b.p:
        raise ValueError("modulus mismatch")
    nb = b.dim
    perm = (a.perm[:, None] * nb + b.perm[None, :]).reshape(-1)
    phases = (a.phases[:, None] + b.phases[None, :]).reshape(-1)
    return MonomialMatrix(a.p, perm, phases)


def mono_inverse(a: MonomialMatrix) -> MonomialMatrix:
    inv = np.argsort(a.perm)
    return MonomialMatrix(a.p, inv, -a.phases[inv])


def mono_pow(a: MonomialMatrix, k: int) -> MonomialMatrix:
    if k < 0:
        return mono_pow(mono_inverse(a), -k)
    acc = mono_identity(a.dim, a.p)
    for _ in range(k):
        acc = mono_mul(acc, a)
    return acc


def mono_scale(a: MonomialMatrix, exp: int) -> MonomialMatrix:
    """Multiply by the p^2-th root of unity with the given exponent."""
    return MonomialMatrix(a.p, a.perm, a.phases + exp)


def is_scalar(a: MonomialMatrix) -> int | None:
    """The common phase exponent if a is a scalar multiple of the
    identity, else None."""
    if not np.array_equal(a.perm, np.arange(a.dim)):
        return None
    if not (a.phases == a.phases[0]).all():
        return None
    return int(a.phases[0])


def to_dense(a: MonomialMatrix) -> np.ndarray:
    """Complex matrix; for verification oracles only."""
    m = np.zeros((a.dim, a.dim), dtype=np.complex128)
    m[a.perm, np.arange(a.dim)] = np.exp(2j * np.pi * a.phases / a.p ** 2)
    return m


@dataclass(frozen=True, eq=False)
class Representation:
    """Monomial generators satisfying the commutation matrix exactly."""

    mat: CommutationMatrix
    generators: tuple[MonomialMatrix, ...]
    kind: str  # "prop11" | "irreducible" | "loaded"
    invariant: StandardInvariant | None = None

    @property
    def dim(self) -> int:
        return self.generators[0].dim if self.generators else 1


def _check_dim(dim: int, max_dim: int, what: str) -> None:
    if dim > max_dim:
        raise SizeBoundError(f"{what} needs dimension {dim} > bound {max_dim}")


def prop11_rep(mat: CommutationMatrix, max_dim: int = DEFAULT_MAX_DIM) -> Representation:
    """Tensor-ladder generators on p^n dimensions.

    Slot k carries the cyclic shift; slots i < k carry the clock raised
    to c_ik.  Orders and pairwise relations hold entry-exact for every
    alternating matrix; the representation is faithful on words (the
    only scalar word matrix is the empty word) but usually reducible.
    """
    p, n = mat.p, mat.n
    _check_dim(p ** n, max_dim, "prop11 representation")
    s, v = shift(p), clock(p)
    gens = []
    for k in range(n):
        g = mono_identity(1, p)
        for i in range(k):
            g = mono_tensor(g, mono_pow(v, int(mat.entries[i, k])))
        g = mono_tensor(g, s)
        if n - k - 1:
            g = mono_tensor(g, mono_identity(p ** (n - k - 1), p))
        gens.append(g)
    return Representation(mat, tuple(gens), "prop11")


def word_matrix(rep: Representation, x) -> MonomialMatrix:
    """Ordered product of generator powers U_1^{x_1} ... U_n^{x_n}."""
    x = gf.as_gf_array(x, rep.mat.p)
    if x.shape != (rep.mat.n,):
        raise ValueError(f"vector length {x.shape} != n={rep.mat.n}")
    acc = mono_identity(rep.dim, rep.mat.p)
    for k in range(rep.mat.n):
        for _ in range(int(x[k])):
            acc = mono_mul(acc, rep.generators[k])
    return acc


def extract_invariant(rep: Representation) -> StandardInvariant:
    """Read the standard invariant off the kernel-basis word scalars.

    Raises InvariantError when some kernel word is not scalar, which
    signals a reducible representation whose invariant is undefined.
    """
    kernel = form_kernel(rep.mat)
    values = []
    for k in kernel:
        s = is_scalar(word_matrix(rep, k))
        if s is None:
            raise InvariantError(
                "kernel word is not scalar; representation is reducible and "
                "its standard invariant is undefined"
            )
        values.append(s)
    return StandardInvariant(rep.mat, tuple(kernel), tuple(values))


def irreducible_rep(
    mat: CommutationMatrix,
    invariant: StandardInvariant | None = None,
    max_dim: int = DEFAULT_MAX_DIM,
) -> Representation:
    """Irreducible generators on p^r dimensions with a prescribed
    standard invariant.

    Each generator coordinate vector is decomposed against the
    hyperbolic-pair basis; pair i acts on tensor slot i with the shift
    standing for e_i and the clock for f_i, so the pair relations come
    out with omega(e_i, f_j) = delta_ij.  A canonical per-generator
    phase makes every generator order p; for p = 2 the result is then
    sign-shifted onto the requested invariant (any valid invariant is
    reachable this way).  For odd p no retargeting is defined and only
    ``invariant=None`` is accepted; the achieved invariant is recorded
    on the result.

    Raises SizeBoundError past ``max_dim`` and InvariantError when the
    requested invariant violates the square law or its basis does not
    match the computed kernel basis.
    """
    p = mat.p
    basis = symplectic_basis(mat)
    r = basis.r
    _check_dim(p ** r, max_dim, "irreducible representation")
    tinv = gf.inverse(basis.column_matrix(), p)
    s, v = shift(p), clock(p)
    gens = []
    for j in range(mat.n):
        coords = tinv[:, j]
        alpha = coords[0 : 2 * r : 2]
        beta = coords[1 : 2 * r : 2]
        g = mono_identity(1, p)
        for i in range(r):
            slot = mono_mul(mono_pow(s, int(alpha[i])), mono_pow(v, int(beta[i])))
            g = mono_tensor(g, slot)
        mu = int(alpha @ beta) % 2 if p == 2 else 0
        gens.append(mono_scale(g, mu))
    rep = Representation(mat, tuple(gens), "irreducible")
    achieved = extract_invariant(rep)
    rep = Representation(mat, rep.generators, "irreducible", achieved)
    if p != 2:
        if invariant is not None and not (
            invariant.mat == mat
            and invariant.values == achieved.values
            and len(invariant.kernel_basis) == len(achieved.kernel_basis)
            and all(
                np.array_equal(a, b)
                for a, b in zip(invariant.kernel_basis, achieved.kernel_basis)
            )
        ):
            raise InvariantError(
                "retargeting is defined for p = 2 only; for odd p only the "
                "achieved invariant is accepted"
            )
        return rep
    target = invariant if invariant is not None else achieved
    gamma = realize_invariant(target, achieved)
    return phase_shift_rep(rep, gamma)


def phase_shift_rep(rep: Representation, gamma) -> Representation:
    """Flip generator signs: generator k is multiplied by (-1)^{gamma_k}.
    Relations are preserved and the invariant picks up (-1)^{gamma . x}
    on kernel vectors.  p = 2."""
    if rep.mat.p != 2:
        raise InvariantError("phase shifting is defined for p = 2 only")
    g = gf.as_gf_array(gamma, 2)
    if g.shape != (rep.mat.n,):
        raise ValueError(f"gamma length {g.shape} != n={rep.mat.n}")
    gens = tuple(
        mono_scale(u, 2 * int(gk)) for u, gk in zip(rep.generators, g)
    )
    inv = (
        phase_shift_invariant(rep.invariant, g)
        if rep.invariant is not None
        else None
    )
    return Representation(rep.mat, gens, rep.kind, inv)


@dataclass(frozen=True)
class RelationReport:
    """Outcome of the entry-exact relation check.  Indices are 0-based
    generator positions."""

    pair_failures: tuple[tuple[int, int], ...]
    order_failures: tuple[int, ...]

    @property
    def ok(self) -> bool:
        return not self.pair_failures and not self.order_failures


def verify_relations(rep: Representation) -> RelationReport:
    """Check U_i U_j = zeta^{c_ij} U_j U_i for all pairs and U_k^p = 1
    for all generators, entry-exact on monomial matrices."""
    p, n = rep.mat.p, rep.mat.n
    pair_failures = []
    for i in range(n):
        for j in range(i + 1, n):
            lhs = mono_mul(rep.generators[i], rep.generators[j])
            rhs = mono_scale(
                mono_mul(rep.generators[j], rep.generators[i]),
                p * int(rep.mat.entries[i, j]),
            )
            if lhs != rhs:
                pair_failures.append((i, j))
    ident = mono_identity(rep.dim, p)
    order_failures = tuple(
        k for k in range(n) if mono_pow(rep.generators[k], p) != ident
    )
    return RelationReport(tuple(pair_failures), order_failures)


def commutant_dim(rep: Representation, max_dim: int = COMMUTANT_MAX_DIM) -> int:
    """Dimension of {X : X U_k = U_k X for all k}.

    Computed from the stacked linear system over complex doubles:
    candidate null directions come from the eigendecomposition of the
    normal matrix sum_k A_k^* A_k, and each candidate's true stacked
    singular value is then measured as a direct residual norm (the
    normal equations alone would square the threshold into the noise
    floor).  Singular values below 1e-8 * dim count as zero.  Equals 1
    iff the generators form an irreducible set.  Memory is O(dim^4);
    intended for dims well inside the 256 cap.
    """
    n_dim = rep.dim
    _check_dim(n_dim, max_dim, "commutant computation")
    dense = [to_dense(g) for g in rep.generators]
    eye = np.eye(n_dim)
    s = np.zeros((n_dim * n_dim, n_dim * n_dim), dtype=np.complex128)
    for u in dense:
        a = np.kron(u, eye) - np.kron(eye, u.T)
        s += a.conj().T @ a
    lam, vecs = np.linalg.eigh(s)
    tau = 1e-8 * n_dim
    # eigh of the normal equations squares the singular values, halving
    # precision near zero; take every eigendirection below the noise
    # floor as a candidate and measure its true stacked-system residual.
    cut = max(tau * tau, 64 * np.finfo(float).eps * float(lam[-1]))
    count = 0
    for idx in np.nonzero(lam < cut)[0]:
        x = vecs[:, idx].reshape(n_dim, n_dim)
        residual_sq = sum(
            np.linalg.norm(u @ x - x @ u, "fro") ** 2 for u in dense
        )
        if np.sqrt(residual_sq) < tau:
            count += 1
    return count


def matrix_units(v: MonomialMatrix, w: MonomialMatrix) -> list[np.ndarray]:
    """The p^2 matrix units generated by a Weyl pair.

    Requires, and checks exactly, V^p = W^p = 1 and V W = zeta W V.
    P_j = (1/p) sum_k zeta^{-jk} W^k projects onto the zeta^j eigenspace
    of W, and e_ij = V^{j-i} P_j (V lowers the eigenvalue index for this
    orientation of the Weyl relation; at p = 2 this is the same as
    V^{i-j} P_j).  Returned row-major: e_00, e_01, ..., e_{p-1,p-1},
    satisfying the product/adjoint/sum laws to high precision.
    """
    p = v.p
    if w.p != p or w.dim != v.dim:
        raise ValueError("V and W must share modulus and dimension")
    ident = mono_identity(v.dim, p)
    if mono_pow(v, p) != ident or mono_pow(w, p) != ident:
        raise ValueError("V and W must have order p")
    if mono_mul(v, w) != mono_scale(mono_mul(w, v), p):
        raise ValueError("V W = zeta W V must hold exactly")
    zeta = np.exp(2j * np.pi / p)
    w_pows = [to_dense(mono_pow(w, k)) for k in range(p)]
    projections = [
        sum(zeta ** (-j * k) * w_pows[k] for k in range(p)) / p for j in range(p)
    ]
    units = []
    for i in range(p):
        for j in range(p):
            units.append(to_dense(mono_pow(v, (j - i) % p)) @ projections[j])
    return units


@dataclass(frozen=True, eq=False)
class StructureReport:
    """Shape of the algebra generated by a truncated spin system."""

    p: int
    n: int
    rank: int
    kernel_dim: int
    kernel_basis: tuple[np.ndarray, ...]
    center_dim: int
    matrix_factor: str
    descriptor: str
    simple: bool
    class_count: int | None
    pattern: tuple[int, ...] | None
    prefix_ranks: tuple[int, ...] | None
    infinite_rank_conjectured: bool | None


def structure_report(mat: CommutationMatrix) -> StructureReport:
    """Report the algebra structure C(X) (x) M_{p^r} of the truncation.

    The center has dimension p^d (spanned by the central words), the
    matrix factor is M_{p^r} with 2r the form rank, and the algebra is
    simple iff the kernel is trivial.  The class count 2^d applies to
    p = 2 only.  For a banded source the rank-growth table over all
    prefixes is included, with an explicitly heuristic flag set when the
    rank is still growing at the end of the table (finite prefixes can
    never prove infinite rank).
    """
    kernel = form_kernel(mat)
    d = len(kernel)
    rank = mat.n - d
    r = rank // 2
    descriptor_parts = []
    if d > 0:
        descriptor_parts.append(f"C(X_{mat.p ** d})")
    if r > 0:
        descriptor_parts.append(f"M_{mat.p ** r}")
    prefix_ranks = None
    conjectured = None
    if mat.pattern is not None:
        prefix_ranks = tuple(form_rank(mat.prefix(k)) for k in range(1, mat.n + 1))
        tail = prefix_ranks[-3] if len(prefix_ranks) >= 3 else prefix_ranks[0]
        conjectured = prefix_ranks[-1] > tail
    return StructureReport(
        p=mat.p,
        n=mat.n,
        rank=rank,
        kernel_dim=d,
        kernel_basis=tuple(kernel),
        center_dim=mat.p ** d,
        matrix_factor=f"M_{mat.p ** r}",
        descriptor=" ⊗ ".join(descriptor_parts),
        simple=d == 0,
        class_count=count_classes(d) if mat.p == 2 else None,
        pattern=mat.pattern,
        prefix_ranks=prefix_ranks,
        infinite_rank_conjectured=conjectured,
    )
