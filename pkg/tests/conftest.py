"""Shared brute-force oracles and hypothesis strategies.

The oracles here are deliberately naive (exhaustive enumeration, explicit
double loops, dense complex arithmetic) and independent of the library's
elimination/monomial code paths, so they can vouch for derived expected
values.
"""

import itertools

import numpy as np
from hypothesis import strategies as st

import spinlab as sl


def enum_vectors(p, n):
    """All p^n coordinate vectors over GF(p)."""
    for tup in itertools.product(range(p), repeat=n):
        yield np.array(tup, dtype=np.int64)


def brute_kernel_set(entries, p):
    """The set {v : Mv = 0} by exhaustive search, as tuples."""
    m = np.asarray(entries) % p
    return {
        tuple(v)
        for v in enum_vectors(p, m.shape[1])
        if not ((m @ v) % p).any()
    }


def brute_rank(entries, p):
    """log_p of the image size, by exhaustive search."""
    m = np.asarray(entries) % p
    image = {tuple((m @ v) % p) for v in enum_vectors(p, m.shape[1])}
    r = 0
    while p ** r < len(image):
        r += 1
    assert p ** r == len(image)
    return r


def span_set(vectors, p, n):
    """All linear combinations of the given vectors, as tuples."""
    out = set()
    for coeffs in itertools.product(range(p), repeat=len(vectors)):
        v = np.zeros(n, dtype=np.int64)
        for c, vec in zip(coeffs, vectors):
            v = (v + c * np.asarray(vec)) % p
        out.add(tuple(v))
    return out


def omega_sum_oracle(mat, x, y):
    """Direct double-loop evaluation of sum_ij x_i c_ij y_j."""
    total = 0
    for i in range(mat.n):
        for j in range(mat.n):
            total += int(x[i]) * int(mat.entries[i, j]) * int(y[j])
    return total % mat.p


def q_sum_oracle(mat, x, y):
    """Direct evaluation of the strict-lower-triangle sum."""
    total = 0
    for i in range(mat.n):
        for j in range(i):
            total += int(mat.entries[i, j]) * int(x[i]) * int(y[j])
    return total % mat.p


def alternating_from_upper(p, n, upper):
    """Alternating matrix from a flat list of strict-upper entries."""
    ent = np.zeros((n, n), dtype=np.int64)
    it = iter(upper)
    for i in range(n):
        for j in range(i + 1, n):
            c = next(it) % p
            ent[i, j] = c
            ent[j, i] = (-c) % p
    return sl.commutation_matrix(p, ent)


@st.composite
def commutation_matrices(draw, primes=(2, 3, 5), min_n=1, max_n=5):
    p = draw(st.sampled_from(primes))
    n = draw(st.integers(min_n, max_n))
    count = n * (n - 1) // 2
    upper = draw(st.lists(st.integers(0, p - 1), min_size=count, max_size=count))
    return alternating_from_upper(p, n, upper)


@st.composite
def matrices_with_vectors(draw, k=2, primes=(2, 3, 5), max_n=5):
    mat = draw(commutation_matrices(primes=primes, max_n=max_n))
    vecs = [
        np.array(
            draw(st.lists(st.integers(0, mat.p - 1), min_size=mat.n, max_size=mat.n)),
            dtype=np.int64,
        )
        for _ in range(k)
    ]
    return (mat, *vecs)


def check_symplectic_relations(mat, basis):
    """Assert the defining relations of a hyperbolic-pair basis."""
    for i, ei in enumerate(basis.e):
        for j, fj in enumerate(basis.f):
            assert sl.omega(mat, ei, fj) == (1 if i == j else 0)
    for a in basis.e:
        for b in basis.e:
            assert sl.omega(mat, a, b) == 0
    for a in basis.f:
        for b in basis.f:
            assert sl.omega(mat, a, b) == 0
    for k in basis.kernel:
        assert not ((mat.entries @ k) % mat.p).any()
