import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from finesep.errors import InvalidMub, InvalidMum, InvalidPovm, NotOrthonormal, NotPrime, RangeError
from finesep.measurements import (
    MubSet,
    MumSet,
    Povm,
    basis_to_povm,
    generalized_pauli,
    max_probability,
    measure,
    mum_residuals,
    prime_mub_set,
    smooth_mum,
)
from finesep.composer import qutrit_suite
from finesep.scenarios import target_ket, werner_family
from finesep.states import DensityMatrix, completely_mixed, pure_state, random_separable

W3 = np.exp(2j * np.pi / 3)
WS = W3.conjugate()

# the four qutrit bases as printed, kets as rows
PAPER_BASES = [
    np.eye(3),
    np.array([[1, 1, 1], [1, WS, W3], [1, W3, WS]]) / np.sqrt(3),
    np.array([[1, W3, 1], [1, 1, W3], [W3, 1, 1]]) / np.sqrt(3),
    np.array([[1, 1, WS], [WS, 1, 1], [1, WS, 1]]) / np.sqrt(3),
]


def random_povm(n, d, rng):
    g = [(lambda a: a @ a.conj().T)(rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))) for _ in range(n)]
    s = sum(g)
    w, v = np.linalg.eigh(s)
    s_inv_half = (v / np.sqrt(w)) @ v.conj().T
    return Povm([s_inv_half @ x @ s_inv_half for x in g])


def test_generalized_pauli_qutrit():
    z, x = generalized_pauli(3)
    np.testing.assert_allclose(z, np.diag([1, W3, WS]), atol=1e-15)
    np.testing.assert_array_equal(x, [[0, 0, 1], [1, 0, 0], [0, 1, 0]])
    np.testing.assert_allclose(z @ x - W3 * x @ z, 0, atol=1e-14)


def test_generalized_pauli_qubit():
    z, x = generalized_pauli(2)
    np.testing.assert_allclose(z, np.diag([1, -1]), atol=1e-15)
    np.testing.assert_array_equal(x, [[0, 1], [1, 0]])


@pytest.mark.parametrize("d", [2, 3, 5, 7])
def test_commutation(d):
    z, x = generalized_pauli(d)
    np.testing.assert_allclose(z @ x, np.exp(2j * np.pi / d) * x @ z, atol=1e-14)


def test_qutrit_mubs_match_printed_bases():
    mubs = prime_mub_set(3)
    assert len(mubs) == 4
    for ours, theirs in zip(mubs.bases, PAPER_BASES):
        for u, v in zip(ours, theirs):
            assert abs(abs(np.vdot(u, v)) - 1) < 1e-12


def test_qutrit_mub_eigenvalue_order():
    z, x = generalized_pauli(3)
    ops = [z, x, z @ x, z @ x @ x]
    for op, basis in zip(ops, prime_mub_set(3).bases):
        for k, ket in enumerate(basis):
            np.testing.assert_allclose(op @ ket, W3**k * ket, atol=1e-12)


def test_phase_convention():
    for basis in prime_mub_set(5).bases:
        for ket in basis:
            first = ket[np.argmax(np.abs(ket) > 1e-12)]
            assert abs(first.imag) < 1e-14 and first.real > 0


def test_qubit_mubs_are_pauli_eigenbases():
    mubs = prime_mub_set(2)
    sx = np.array([[0, 1], [1, 0]])
    sy = np.array([[0, -1j], [1j, 0]])
    sz = np.diag([1, -1])
    for basis, op in zip(mubs.bases, (sz, sx, sy)):
        for ket in basis:
            v = op @ ket
            assert abs(abs(np.vdot(ket, v)) - 1) < 1e-12


@pytest.mark.parametrize("d", [2, 3, 5, 7])
def test_prime_mub_invariants_brute_force(d):
    bases = prime_mub_set(d).bases
    assert len(bases) == d + 1
    for a, b in itertools.combinations(range(d + 1), 2):
        for i in range(d):
            for j in range(d):
                assert abs(abs(np.vdot(bases[a][i], bases[b][j])) ** 2 - 1 / d) < 1e-10


def test_non_prime_rejected():
    with pytest.raises(NotPrime):
        prime_mub_set(6)


def test_basis_to_povm():
    p = basis_to_povm(np.eye(3))
    np.testing.assert_array_equal(p.elements[1], np.diag([0, 1, 0]))
    px = basis_to_povm(PAPER_BASES[1])
    for e in px.elements:
        np.testing.assert_allclose(np.diag(e), [1 / 3] * 3, atol=1e-15)
    np.testing.assert_allclose(px.elements.sum(axis=0), np.eye(3), atol=1e-12)
    with pytest.raises(NotOrthonormal):
        basis_to_povm(np.ones((2, 2)))


def test_povm_validation():
    with pytest.raises(InvalidPovm):
        Povm([np.diag([1, 0]), np.diag([0, 0.9])])
    with pytest.raises(InvalidPovm):
        Povm([np.diag([1.2, 0.5]), np.diag([-0.2, 0.5])])


def brute_kappa(mum):
    return [np.trace(e @ e).real for p in mum.povms for e in p.elements]


def test_smooth_mum_examples():
    mubs = prime_mub_set(3)
    mum1 = smooth_mum(mubs, 1.0)
    assert mum1.kappa == 1.0
    np.testing.assert_allclose(mum1.povms[1].elements, basis_to_povm(mubs.bases[1]).elements)
    mum = smooth_mum(mubs, 0.5)
    np.testing.assert_allclose(brute_kappa(mum), 0.5, atol=1e-12)
    assert mum.kappa == pytest.approx(0.5, abs=1e-15)
    for p, q in itertools.combinations(mum.povms, 2):
        for a in p.elements:
            for b in q.elements:
                assert abs(np.trace(a @ b) - 1 / 3) < 1e-12


@pytest.mark.parametrize("mu", np.round(np.arange(0.1, 1.01, 0.1), 10))
def test_smooth_mum_kappa_formula(mu):
    for d in (2, 3, 5):
        mum = smooth_mum(prime_mub_set(d), mu)
        assert max(abs(k - mum.kappa) for k in brute_kappa(mum)) < 1e-12
        assert all(v < 1e-12 for v in mum_residuals(mum.povms, mum.kappa).values())


def test_smooth_mum_range():
    with pytest.raises(RangeError):
        smooth_mum(prime_mub_set(3), 0.0)


def test_mum_rejects_wrong_kappa():
    mum = smooth_mum(prime_mub_set(3), 0.5)
    with pytest.raises(InvalidMum):
        MumSet(mum.povms, 0.51)


def test_measure_completely_mixed():
    rng = np.random.default_rng(0)
    p = random_povm(4, 3, rng)
    np.testing.assert_allclose(measure(p, completely_mixed(3)), np.trace(p.elements, axis1=1, axis2=2).real / 3)


def test_measure_suite_on_target():
    rho = pure_state(target_ket(3, "mqtr"), (3, 3))
    suite = qutrit_suite()
    np.testing.assert_allclose(measure(suite[0], rho), [1, 0, 0], atol=1e-12)
    np.testing.assert_allclose(measure(suite[3], rho), [1 / 3] * 3, atol=1e-12)


def test_max_probability_ties():
    rho = completely_mixed(2)
    val, arg = max_probability(basis_to_povm(np.eye(2)), rho)
    assert val == 0.5 and arg == ("0", "1")


def test_max_probability_werner_linear():
    s = 0.5
    rho = werner_family(3, "mqtr", "mixed")(s)
    for m in qutrit_suite()[:3]:
        assert max_probability(m, rho)[0] == pytest.approx((1 + 2 * s) / 3, abs=1e-12)


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), lam=st.floats(0, 1), n=st.integers(2, 5))
def test_convexity_of_pmax(seed, lam, n):
    rng = np.random.default_rng(seed)
    povm = random_povm(n, 4, rng)
    r1 = random_separable(2, 2, 3, int(rng.integers(2**31)))
    g = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    r2 = DensityMatrix(g @ g.conj().T / np.trace(g @ g.conj().T).real)
    mix = DensityMatrix(lam * r1.matrix + (1 - lam) * r2.matrix)
    lhs = max_probability(povm, mix)[0]
    rhs = lam * max_probability(povm, r1)[0] + (1 - lam) * max_probability(povm, r2)[0]
    assert lhs <= rhs + 1e-10
    assert abs(measure(povm, mix).sum() - 1) < 1e-9


def test_mubset_rejects_biased():
    with pytest.raises(InvalidMub):
        MubSet(np.array([np.eye(2), np.eye(2)]))
