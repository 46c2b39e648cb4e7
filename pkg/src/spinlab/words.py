"""Exact arithmetic in the algebra of phased words.

A word is lambda * u_1^{x_1} ... u_n^{x_n} for an exponent vector x over
GF(p) and a scalar lambda in the p^2-th roots of unity, stored as an
integer exponent mod p^2.  With zeta = e^{2*pi*i/p} (exponent p) the
product rule is

    w_x w_y = zeta^{Q(x, y)} w_{x+y}

with Q the strict-lower-triangle form of the commutation matrix, and
two words commute up to zeta^{omega(x, y)}.  Everything here is integer
arithmetic; no floats appear anywhere.

Standard invariants live on ker(omega): the scalar values taken by
central words in an irreducible system, stored on an ordered kernel
basis and extended to the whole kernel through the product rule.  The
classification operations (square law, gamma shifts, enumeration) are
defined for p = 2 only and refuse other moduli.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import gf
from .errors import InvariantError, SizeBoundError
from .forms import CommutationMatrix, form_kernel, omega, q_form, symplectic_basis


@dataclass(frozen=True, eq=False)
class Word:
    """phase * u_1^{x_1} ... u_n^{x_n}; phase is an exponent mod p^2."""

    phase: int
    x: np.ndarray
    mat: CommutationMatrix

    def __post_init__(self):
        p2 = self.mat.p ** 2
        object.__setattr__(self, "phase", int(self.phase) % p2)
        x = gf.as_gf_array(self.x, self.mat.p)
        if x.shape != (self.mat.n,):
            raise ValueError(f"exponent vector length {x.shape} != n={self.mat.n}")
        x.flags.writeable = False
        object.__setattr__(self, "x", x)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return (
            self.mat == other.mat
            and self.phase == other.phase
            and np.array_equal(self.x, other.x)
        )

    @property
    def is_identity(self) -> bool:
        return self.phase == 0 and not self.x.any()


def identity_word(mat: CommutationMatrix) -> Word:
    return Word(0, np.zeros(mat.n, dtype=np.int64), mat)


def word_mul(a: Word, b: Word) -> Word:
    """Product of two words; associative and exact."""
    if a.mat is not b.mat and a.mat != b.mat:
        raise ValueError("words belong to different commutation matrices")
    p = a.mat.p
    phase = (a.phase + b.phase + p * q_form(a.mat, a.x, b.x)) % (p * p)
    return Word(phase, (a.x + b.x) % p, a.mat)


def word_pow(w: Word, k: int) -> Word:
    if k < 0:
        raise ValueError("negative word powers are not needed or supported")
    acc = identity_word(w.mat)
    for _ in range(k):
        acc = word_mul(acc, w)
    return acc


def commutation_phase(x, y, mat: CommutationMatrix) -> int:
    """Exponent (mod p^2) by which w_x w_y and w_y w_x differ:
    p * omega(x, y).  Zero exactly when the words commute."""
    p = mat.p
    return (p * omega(mat, x, y)) % (p * p)


def normalize(x, mat: CommutationMatrix) -> Word:
    """The canonical word lambda_x w_x whose p-th power is the identity.

    For p = 2 the scalar is i^{Q(x,x)}; for odd p the plain word already
    has w_x^p = 1, so lambda_x = 1.
    """
    if mat.p == 2:
        return Word(q_form(mat, x, x) % 2, x, mat)
    return Word(0, x, mat)


def is_central(x, mat: CommutationMatrix) -> bool:
    """True iff w_x commutes with every word, i.e. x is in ker(omega)."""
    x = gf.as_gf_array(x, mat.p)
    if x.shape != (mat.n,):
        raise ValueError(f"vector length {x.shape} != n={mat.n}")
    return not ((mat.entries @ x) % mat.p).any()


@dataclass(frozen=True, eq=False)
class StandardInvariant:
    """A function on ker(omega), stored as phase exponents (mod p^2) on
    an ordered kernel basis and extended through the word product rule."""

    mat: CommutationMatrix
    kernel_basis: tuple[np.ndarray, ...]
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.kernel_basis) != len(self.values):
            raise ValueError("one value per kernel basis vector required")
        p2 = self.mat.p ** 2
        vecs = []
        for k in self.kernel_basis:
            a = gf.as_gf_array(k, self.mat.p)
            if a.shape != (self.mat.n,):
                raise ValueError("kernel basis vector of wrong length")
            a.flags.writeable = False
            vecs.append(a)
        object.__setattr__(self, "kernel_basis", tuple(vecs))
        object.__setattr__(
            self, "values", tuple(int(v) % p2 for v in self.values)
        )

    @property
    def d(self) -> int:
        return len(self.kernel_basis)

    def __eq__(self, other) -> bool:
        if not isinstance(other, StandardInvariant):
            return NotImplemented
        return (
            self.mat == other.mat
            and len(self.kernel_basis) == len(other.kernel_basis)
            and all(
                np.array_equal(a, b)
                for a, b in zip(self.kernel_basis, other.kernel_basis)
            )
            and self.values == other.values
        )


def _same_kernel_basis(f: StandardInvariant, g: StandardInvariant) -> None:
    if f.mat != g.mat or len(f.kernel_basis) != len(g.kernel_basis) or not all(
        np.array_equal(a, b) for a, b in zip(f.kernel_basis, g.kernel_basis)
    ):
        raise InvariantError("invariants are stored on different kernel bases")


def kernel_coordinates(f: StandardInvariant, x) -> np.ndarray:
    """Coordinates of x in the stored kernel basis; raises if x is not
    in the kernel span."""
    p = f.mat.p
    x = gf.as_gf_array(x, p)
    if not f.kernel_basis:
        if x.any():
            raise InvariantError("vector is not in ker(omega)")
        return np.zeros(0, dtype=np.int64)
    cols = np.stack(f.kernel_basis, axis=1)
    coords = gf.solve(cols, x, p)
    if coords is None:
        raise InvariantError("vector is not in ker(omega)")
    return coords


def evaluate_invariant(f: StandardInvariant, x) -> int:
    """Value of f at a kernel vector, as an exponent mod p^2.

    Expands x in the stored basis, multiplies the corresponding plain
    words in fixed basis order to pick up the exact reordering phase
    zeta^E, and combines with the stored values: the scalar of
    W_x = zeta^{-E} prod_i W_{k_i}^{a_i} is sum_i a_i f(k_i) - p E.
    The result satisfies f(x)f(y) = zeta^{Q(x,y)} f(x+y) for all kernel
    pairs, and f(0) = 1.
    """
    coords = kernel_coordinates(f, x)
    p = f.mat.p
    acc = identity_word(f.mat)
    stored = 0
    for a_i, k_i, v_i in zip(coords, f.kernel_basis, f.values):
        stored += int(a_i) * v_i
        for _ in range(int(a_i)):
            acc = word_mul(acc, Word(0, k_i, f.mat))
    assert np.array_equal(acc.x, gf.as_gf_array(x, p))
    return (stored - acc.phase) % (p * p)


def _require_char2(mat: CommutationMatrix, what: str) -> None:
    if mat.p != 2:
        raise InvariantError(f"{what} is defined for p = 2 only (got p={mat.p})")


def invariant_square_check(f: StandardInvariant) -> bool:
    """True iff f(k)^2 = (-1)^{Q(k,k)} on every stored basis vector;
    a necessary and sufficient condition for f to satisfy the kernel
    functional equation.  p = 2 only."""
    _require_char2(f.mat, "the square law")
    return all(
        (2 * v) % 4 == (2 * q_form(f.mat, k, k)) % 4
        for k, v in zip(f.kernel_basis, f.values)
    )


def phase_shift_invariant(f: StandardInvariant, gamma) -> StandardInvariant:
    """The invariant of the sign-flipped system: each stored value is
    multiplied by (-1)^{gamma . k}.  p = 2 only."""
    _require_char2(f.mat, "phase shifting")
    g = gf.as_gf_array(gamma, 2)
    if g.shape != (f.mat.n,):
        raise ValueError(f"gamma length {g.shape} != n={f.mat.n}")
    values = tuple(
        (v + 2 * (int(g @ k) % 2)) % 4 for k, v in zip(f.kernel_basis, f.values)
    )
    return StandardInvariant(f.mat, f.kernel_basis, values)


def invariants_equal(f: StandardInvariant, g: StandardInvariant) -> bool:
    """Equality as functions on the kernel: equal values on the shared
    basis.  Raises if the invariants live on different bases."""
    _same_kernel_basis(f, g)
    return f.values == g.values


def gammas_equivalent(gamma1, gamma2, kernel_basis, p: int = 2) -> bool:
    """True iff gamma1 and gamma2 induce the same linear functional on
    the kernel, i.e. (gamma1 - gamma2) . k = 0 for every basis vector."""
    g1 = gf.as_gf_array(gamma1, p)
    g2 = gf.as_gf_array(gamma2, p)
    return all(int((g1 - g2) @ k) % p == 0 for k in kernel_basis)


def realize_invariant(
    target: StandardInvariant, reference: StandardInvariant
) -> np.ndarray:
    """A deterministic gamma with phase_shift_invariant(reference, gamma)
    equal to target.

    The ratio target/reference must be +-1 on every basis vector (both
    sides of the square law); the resulting 0/1 exponents are extended
    to a linear functional on all of GF(2)^n.  Raises InvariantError if
    some ratio is not a sign, which happens exactly when target violates
    the square law relative to a valid reference.
    """
    _require_char2(target.mat, "gamma realization")
    _same_kernel_basis(target, reference)
    theta = []
    for t, r in zip(target.values, reference.values):
        diff = (t - r) % 4
        if diff == 0:
            theta.append(0)
        elif diff == 2:
            theta.append(1)
        else:
            raise InvariantError(
                "target/reference ratio is not a sign on the kernel basis; "
                "the target violates the square law"
            )
    return gf.extend_functional(list(target.kernel_basis), theta, target.mat.n, 2)


def count_classes(d: int) -> int:
    """Number of equivalence classes of irreducible systems with kernel
    dimension d over GF(2): exactly 2^d.  (For an infinite-dimensional
    kernel the class count is the cardinality of the continuum; this
    artifact only handles finite truncations.)"""
    if d < 0:
        raise ValueError("kernel dimension must be nonnegative")
    return 2 ** d


def reference_invariant(mat: CommutationMatrix) -> StandardInvariant:
    """The invariant achieved by the canonical irreducible construction.

    Each generator coordinate vector splits as kernel part plus a
    combination of hyperbolic pairs; the generator is modelled on the
    pair coordinates with a canonical normalizing phase (i^{alpha.beta}
    for p = 2, trivial for odd p).  The value on a kernel basis vector
    is the exact scalar of the corresponding ordered generator product,
    tracked symbolically in pair coordinates where the merge phase of
    two factors is -beta . alpha'.
    """
    p = mat.p
    p2 = p * p
    basis = symplectic_basis(mat)
    r = basis.r
    tinv = gf.inverse(basis.column_matrix(), p)
    alphas = []
    betas = []
    mus = []
    for j in range(mat.n):
        coords = tinv[:, j]
        alpha = coords[0 : 2 * r : 2]
        beta = coords[1 : 2 * r : 2]
        alphas.append(alpha)
        betas.append(beta)
        mus.append(int(alpha @ beta) % 2 if p == 2 else 0)
    values = []
    for k in basis.kernel:
        phase = 0
        acc_a = np.zeros(r, dtype=np.int64)
        acc_b = np.zeros(r, dtype=np.int64)
        for j in range(mat.n):
            for _ in range(int(k[j])):
                merge = (-(acc_b @ alphas[j])) % p
                phase = (phase + mus[j] + p * merge) % p2
                acc_a = (acc_a + alphas[j]) % p
                acc_b = (acc_b + betas[j]) % p
        assert not acc_a.any() and not acc_b.any()
        values.append(phase)
    return StandardInvariant(mat, basis.kernel, tuple(values))


def enumerate_invariants(
    mat: CommutationMatrix, max_kernel_dim: int = 16
) -> list[StandardInvariant]:
    """All 2^d standard invariants of a GF(2) commutation matrix:
    the reference invariant shifted by every linear functional on the
    kernel, in increasing functional order (bit i of the index flips the
    sign on basis vector i)."""
    _require_char2(mat, "invariant enumeration")
    f0 = reference_invariant(mat)
    d = f0.d
    if d > max_kernel_dim:
        raise SizeBoundError(
            f"kernel dimension {d} exceeds the enumeration bound {max_kernel_dim}"
        )
    out = []
    for mask in range(2 ** d):
        values = tuple(
            (v + 2 * ((mask >> i) & 1)) % 4 for i, v in enumerate(f0.values)
        )
        out.append(StandardInvariant(mat, f0.kernel_basis, values))
    return out
