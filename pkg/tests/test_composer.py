import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from finesep.composer import (
    compose_povm,
    cyclic_partition,
    cyclic_suite,
    make_partition,
    qutrit_suite,
)
from finesep.errors import IntersectingPairs, NotAPartition, ShapeMismatch
from finesep.measurements import Povm, basis_to_povm, generalized_pauli, max_probability, measure, prime_mub_set, smooth_mum
from finesep.scenarios import target_ket
from finesep.states import DensityMatrix, completely_mixed, paired_entangled, pure_state, random_separable

from helpers import random_partition, random_povm, random_pure_product

W3 = np.exp(2j * np.pi / 3)
X_BASIS = np.array([[1, 1, 1], [1, W3.conjugate(), W3], [1, W3, W3.conjugate()]]) / np.sqrt(3)


def test_make_partition_zz_grouping():
    fam = make_partition((2, 2), [[(0, 0), (1, 1)], [(0, 1), (1, 0)]])
    assert fam.compliant and len(fam) == 2


def test_make_partition_rejects_intersecting():
    subsets = [[(0, 0), (1, 0), (1, 1)], [(0, 1)]]
    with pytest.raises(IntersectingPairs):
        make_partition((2, 2), subsets)
    fam = make_partition((2, 2), subsets, enforce=False)
    assert not fam.compliant


def test_make_partition_rejects_non_partition():
    with pytest.raises(NotAPartition):
        make_partition((2, 2), [[(0, 0), (1, 1)], [(0, 1)]])
    with pytest.raises(NotAPartition):
        make_partition((2, 2), [[(0, 0), (1, 1)], [(0, 1), (1, 0), (0, 0)]])
    with pytest.raises(NotAPartition):
        make_partition((2, 2), [[(0, 0), (1, 1)], [(0, 1), (2, 0)], [(1, 0)]])


def test_cyclic_partition():
    assert cyclic_partition(2).subsets == (((0, 0), (1, 1)), ((0, 1), (1, 0)))
    fam = cyclic_partition(3)
    assert set(fam.subsets[0]) == {(0, 0), (1, 2), (2, 1)}
    assert set(fam.subsets[1]) == {(0, 1), (1, 0), (2, 2)}
    assert [len(s) for s in fam.subsets] == [3, 3, 3]


def laf_projectors():
    """Composite projectors for Z(x)X written out term by term."""
    z = np.eye(3)
    groups = [[(0, 0), (1, 2), (2, 1)], [(0, 1), (1, 0), (2, 2)], [(0, 2), (1, 1), (2, 0)]]
    out = []
    for g in groups:
        kets = [np.kron(z[i], X_BASIS[j]) for i, j in g]
        out.append(sum(np.outer(k, k.conj()) for k in kets))
    return out


def test_compose_reproduces_laf():
    m = compose_povm(basis_to_povm(np.eye(3)), basis_to_povm(X_BASIS), cyclic_partition(3))
    for ours, theirs in zip(m.elements, laf_projectors()):
        np.testing.assert_allclose(ours, theirs, atol=1e-14)
        assert np.trace(ours).real == pytest.approx(3)
    np.testing.assert_allclose(qutrit_suite()[0].elements, m.elements, atol=1e-12)


def test_compose_trivial():
    one = Povm([np.eye(2)])
    m = compose_povm(one, one, make_partition((1, 1), [[(0, 0)]]))
    np.testing.assert_array_equal(m.elements[0], np.eye(4))


def test_compose_smoothed_mums():
    mum = smooth_mum(prime_mub_set(3), 0.5)
    m = compose_povm(mum.povms[0], mum.povms[1], cyclic_partition(3))
    assert len(m) == 3
    assert np.max(np.abs(m.elements.sum(axis=0) - np.eye(9))) < 1e-12


def test_compose_shape_mismatch():
    with pytest.raises(ShapeMismatch):
        compose_povm(basis_to_povm(np.eye(2)), basis_to_povm(np.eye(3)), cyclic_partition(2))


def test_qutrit_suite_on_target():
    rho = pure_state(target_ket(3, "mqtr"), (3, 3))
    suite = qutrit_suite()
    assert [m.labels for m in suite] == [("w^0", "w^1", "w^2")] * 4
    p, arg = max_probability(suite[0], rho)
    assert p == pytest.approx(1.0) and arg == ("w^0",)
    p, arg = max_probability(suite[2], rho)
    assert p == pytest.approx(1.0) and arg == ("w^1",)
    np.testing.assert_allclose(measure(suite[3], rho), [1 / 3] * 3, atol=1e-12)


def test_qutrit_suite_spectral_decomposition():
    # element k is the eigenprojector of A(x)B for eigenvalue w^k
    z, x = generalized_pauli(3)
    ops = [np.kron(z, x), np.kron(x, z), np.kron(z @ x, z @ x), np.kron(z @ x @ x, z @ x @ x)]
    for op, m in zip(ops, qutrit_suite()):
        recon = sum(W3**k * e for k, e in enumerate(m.elements))
        np.testing.assert_allclose(recon, op, atol=1e-12)


def test_cyclic_suite_sizes():
    assert len(cyclic_suite(2)) == 3
    assert len(cyclic_suite(5)) == 6


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), m=st.integers(1, 4), n=st.integers(1, 4), da=st.integers(2, 3), db=st.integers(2, 3))
def test_composed_max_on_product_states(seed, m, n, da, db):
    rng = np.random.default_rng(seed)
    p, q = random_povm(m, da, rng), random_povm(n, db, rng)
    fam = random_partition(m, n, rng)
    assert fam.compliant
    ra, rb = random_pure_product(da, db, rng)
    total = compose_povm(p, q, fam)
    pm = max_probability(total, DensityMatrix(np.kron(ra, rb), (da, db)))[0]
    pa = max_probability(p, DensityMatrix(ra))[0]
    pb = max_probability(q, DensityMatrix(rb))[0]
    assert pm <= min(pa, pb) + 1e-10


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), terms=st.integers(1, 5))
def test_composed_max_on_separable_mixtures(seed, terms):
    rng = np.random.default_rng(seed)
    p, q = random_povm(3, 3, rng), random_povm(3, 3, rng)
    total = compose_povm(p, q, random_partition(3, 3, rng))
    rho = random_separable(3, 3, terms, seed)
    pm = max_probability(total, rho)[0]
    la = max(max_probability(p, DensityMatrix(ra))[0] for _, ra, _ in rho.decomposition)
    lb = max(max_probability(q, DensityMatrix(rb))[0] for _, _, rb in rho.decomposition)
    assert pm <= min(la, lb) + 1e-10


def test_intersecting_counterexample():
    z = basis_to_povm(np.eye(2))
    fam = make_partition((2, 2), [[(0, 0), (1, 0), (1, 1)], [(0, 1)]], enforce=False)
    m = compose_povm(z, z, fam)
    p = measure(m, completely_mixed(4, (2, 2)))
    assert p[0] == pytest.approx(0.75)
    assert max_probability(z, completely_mixed(2))[0] == 0.5


def test_entangled_escape():
    bell = paired_entangled(np.eye(2), np.eye(2))
    z = basis_to_povm(np.eye(2))
    zz = compose_povm(z, z, cyclic_partition(2))
    assert max_probability(zz, pure_state(bell, (2, 2)))[0] == pytest.approx(1.0)
    reduced = DensityMatrix(pure_state(bell, (2, 2)).reduced("A"))
    assert max_probability(z, reduced)[0] == pytest.approx(0.5)
