"""Word algebra: products, phases, normalization, standard invariants."""

import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import spinlab as sl
from spinlab.errors import InvariantError, SizeBoundError

from conftest import commutation_matrices, enum_vectors, matrices_with_vectors

PAULI = sl.commutation_matrix(2, [[0, 1], [1, 0]])
CLIFF3 = sl.clifford_matrix(2, 3)
ZERO2 = sl.commutation_matrix(2, np.zeros((2, 2), dtype=int))


def plain(x, mat):
    return sl.Word(0, np.asarray(x), mat)


# --- products -------------------------------------------------------------


def test_identity_word_is_neutral():
    w = plain([1, 0], PAULI)
    assert sl.word_mul(sl.identity_word(PAULI), w) == w
    assert sl.word_mul(w, sl.identity_word(PAULI)) == w


def test_word_mul_pauli_example():
    # w_{u2} w_{u1} = zeta^{c_21} w_{(1,1)}; for p=2 the phase is -1 (exp 2)
    out = sl.word_mul(plain([0, 1], PAULI), plain([1, 0], PAULI))
    assert out.phase == 2
    assert out.x.tolist() == [1, 1]


def test_word_square_is_sign():
    for x in enum_vectors(2, 3):
        sq = sl.word_mul(plain(x, CLIFF3), plain(x, CLIFF3))
        assert not sq.x.any()
        assert sq.phase == (2 * sl.q_form(CLIFF3, x, x)) % 4


def test_word_mul_context_mismatch():
    with pytest.raises(ValueError, match="different"):
        sl.word_mul(plain([0, 1], PAULI), plain([0, 1], ZERO2))


def test_word_mul_associative_exhaustive_p2():
    mats = [PAULI, CLIFF3, ZERO2]
    for mat in mats:
        vecs = list(enum_vectors(2, mat.n))
        for x, y, z in itertools.product(vecs, repeat=3):
            a, b, c = plain(x, mat), plain(y, mat), plain(z, mat)
            assert sl.word_mul(sl.word_mul(a, b), c) == sl.word_mul(a, sl.word_mul(b, c))


@settings(deadline=None)
@given(matrices_with_vectors(k=3, primes=(3, 5), max_n=5))
def test_word_mul_associative_odd_p(case):
    mat, x, y, z = case
    a, b, c = plain(x, mat), plain(y, mat), plain(z, mat)
    assert sl.word_mul(sl.word_mul(a, b), c) == sl.word_mul(a, sl.word_mul(b, c))


@settings(deadline=None)
@given(matrices_with_vectors(k=2))
def test_commutation_phase_links_the_two_orders(case):
    mat, x, y = case
    p2 = mat.p ** 2
    ab = sl.word_mul(plain(x, mat), plain(y, mat))
    ba = sl.word_mul(plain(y, mat), plain(x, mat))
    assert np.array_equal(ab.x, ba.x)
    assert ab.phase == (ba.phase + sl.commutation_phase(x, y, mat)) % p2


def test_commutation_phase_examples():
    assert sl.commutation_phase([1, 0], [1, 0], PAULI) == 0
    eye = np.eye(3, dtype=np.int64)
    for i, j in itertools.product(range(3), repeat=2):
        assert sl.commutation_phase(eye[i], eye[j], CLIFF3) == (
            2 * CLIFF3.entries[i, j]
        ) % 4
    # central vector commutes with everything
    for y in enum_vectors(2, 3):
        assert sl.commutation_phase([1, 1, 1], y, CLIFF3) == 0


# --- normalization --------------------------------------------------------


def test_normalize_zero_vector():
    assert sl.normalize(np.zeros(3, dtype=int), CLIFF3) == sl.identity_word(CLIFF3)


def test_normalize_clifford_example():
    w = sl.normalize(np.array([1, 1, 1]), CLIFF3)
    assert w.phase == 1  # lambda = i since Q(x, x) = 1
    assert sl.word_pow(w, 2).is_identity


@settings(deadline=None)
@given(matrices_with_vectors(k=1))
def test_normalize_pth_power_is_identity(case):
    mat, x = case
    assert sl.word_pow(sl.normalize(x, mat), mat.p).is_identity


def test_is_central():
    assert sl.is_central(np.zeros(3, dtype=int), CLIFF3)
    assert sl.is_central([1, 1, 1], CLIFF3)
    assert not sl.is_central([1, 0, 0], CLIFF3)


# --- standard invariants ---------------------------------------------------


def _invariant(mat, values):
    return sl.StandardInvariant(mat, tuple(sl.form_kernel(mat)), tuple(values))


def test_evaluate_invariant_basics():
    f = _invariant(CLIFF3, [1])
    assert sl.evaluate_invariant(f, np.zeros(3, dtype=int)) == 0
    assert sl.evaluate_invariant(f, [1, 1, 1]) == 1
    with pytest.raises(InvariantError, match="not in ker"):
        sl.evaluate_invariant(f, [1, 0, 0])


def test_evaluate_invariant_two_dim_kernel():
    # zero matrix: Q vanishes, so f is multiplicative on the kernel
    f = _invariant(ZERO2, [2, 0])
    assert sl.evaluate_invariant(f, [1, 1]) == 2


def test_evaluate_invariant_satisfies_functional_equation():
    cases = [sl.random_alternating(2, 6, seed) for seed in range(25)]
    # the zero matrix pins the exhaustive d = 6 case
    cases.append(sl.commutation_matrix(2, np.zeros((6, 6), dtype=int)))
    for mat in cases:
        f = sl.reference_invariant(mat)
        kernel_span = []
        for coeffs in itertools.product(range(2), repeat=f.d):
            x = np.zeros(6, dtype=np.int64)
            for c, k in zip(coeffs, f.kernel_basis):
                x = (x + c * k) % 2
            kernel_span.append(x)
        for x, y in itertools.product(kernel_span, repeat=2):
            lhs = (sl.evaluate_invariant(f, x) + sl.evaluate_invariant(f, y)) % 4
            rhs = (
                2 * sl.q_form(mat, x, y) + sl.evaluate_invariant(f, (x + y) % 2)
            ) % 4
            assert lhs == rhs


def test_square_check():
    assert sl.invariant_square_check(_invariant(CLIFF3, [1]))  # i^2 = -1 = (-1)^1
    assert sl.invariant_square_check(_invariant(CLIFF3, [3]))
    assert not sl.invariant_square_check(_invariant(CLIFF3, [0]))
    assert sl.invariant_square_check(_invariant(PAULI, []))  # vacuous


def test_square_check_odd_p_refused():
    mat = sl.commutation_matrix(3, np.zeros((2, 2), dtype=int))
    with pytest.raises(InvariantError, match="p = 2"):
        sl.invariant_square_check(_invariant(mat, [0, 0]))


def test_phase_shift_invariant():
    f = _invariant(CLIFF3, [1])
    assert sl.invariants_equal(sl.phase_shift_invariant(f, [0, 0, 0]), f)
    assert sl.phase_shift_invariant(f, [1, 0, 0]).values == (3,)
    assert sl.phase_shift_invariant(f, [1, 1, 0]).values == (1,)


def test_invariants_equal_requires_same_basis():
    with pytest.raises(InvariantError, match="bases"):
        sl.invariants_equal(_invariant(CLIFF3, [1]), _invariant(PAULI, []))


def test_gammas_equivalent():
    kernel = [np.array([1, 1, 1])]
    assert sl.gammas_equivalent([1, 0, 0], [1, 0, 0], kernel)
    assert sl.gammas_equivalent([1, 0, 0], [0, 1, 0], kernel)
    assert not sl.gammas_equivalent([1, 0, 0], [0, 0, 0], kernel)


def test_realize_invariant_examples():
    f = _invariant(CLIFF3, [1])
    g = _invariant(CLIFF3, [3])
    assert sl.realize_invariant(f, f).tolist() == [0, 0, 0]
    gamma = sl.realize_invariant(g, f)
    assert gamma.tolist() == [1, 0, 0]
    assert sl.invariants_equal(sl.phase_shift_invariant(f, gamma), g)
    with pytest.raises(InvariantError, match="square"):
        sl.realize_invariant(_invariant(CLIFF3, [0]), f)


def test_count_classes():
    assert sl.count_classes(0) == 1
    assert sl.count_classes(1) == 2
    assert sl.count_classes(10) == 1024
    with pytest.raises(ValueError):
        sl.count_classes(-1)


def test_reference_invariant_clifford_value():
    # canonical construction gives W_{(1,1,1)} = -i on the Clifford triple
    f0 = sl.reference_invariant(CLIFF3)
    assert f0.values == (3,)
    assert sl.invariant_square_check(f0)


def test_enumerate_invariants_examples():
    assert len(sl.enumerate_invariants(PAULI)) == 1
    cliff_invs = sl.enumerate_invariants(CLIFF3)
    assert sorted(f.values[0] for f in cliff_invs) == [1, 3]  # +-i
    zero_invs = sl.enumerate_invariants(ZERO2)
    assert len(zero_invs) == 4
    assert len({f.values for f in zero_invs}) == 4


def test_enumerate_invariants_all_satisfy_square_law():
    for seed in range(10):
        mat = sl.random_alternating(2, 5, seed)
        for f in sl.enumerate_invariants(mat):
            assert sl.invariant_square_check(f)


def test_enumerate_invariants_bounds_and_parity():
    big = sl.commutation_matrix(2, np.zeros((5, 5), dtype=int))
    with pytest.raises(SizeBoundError):
        sl.enumerate_invariants(big, max_kernel_dim=4)
    odd = sl.commutation_matrix(3, np.zeros((2, 2), dtype=int))
    with pytest.raises(InvariantError, match="p = 2"):
        sl.enumerate_invariants(odd)


@settings(deadline=None, max_examples=30)
@given(commutation_matrices(primes=(2,), max_n=5), st.integers(0, 2 ** 16))
def test_phase_shift_equality_iff_gamma_trivial_on_kernel(mat, seed):
    f = sl.reference_invariant(mat)
    gamma = np.random.default_rng(seed).integers(0, 2, size=mat.n)
    shifted = sl.phase_shift_invariant(f, gamma)
    same = sl.invariants_equal(shifted, f)
    assert same == sl.gammas_equivalent(gamma, np.zeros(mat.n, dtype=int), f.kernel_basis)
