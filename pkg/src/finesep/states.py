"""Bipartite quantum states.

Kets are plain 1-D complex arrays. Density matrices are wrapped in
:class:`DensityMatrix`, which validates on construction and carries its
bipartite split so partial operations never need it passed again.
"""

from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .errors import (
    DimensionMismatch,
    InvalidState,
    NotNormalized,
    NotOrthonormal,
    NotPermutation,
    RangeError,
)

STATE_TOL = 1e-10


def state_residuals(matrix):
    """Residuals of the density-matrix conditions, keyed by condition name."""
    m = np.asarray(matrix, dtype=complex)
    herm = linalg.hermiticity_residual(m)
    w = np.linalg.eigvalsh(0.5 * (m + linalg.dagger(m)))
    return {
        "hermitian": herm,
        "psd": max(0.0, -float(w[0])),
        "trace": abs(complex(np.trace(m)) - 1.0),
    }


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """A validated density matrix on ``C^{d_A} (x) C^{d_B}``.

    ``decomposition``, when present, is a tuple of ``(weight, rho_a, rho_b)``
    triples whose weighted tensor-product sum equals ``matrix``; it is kept by
    the random separable generator so tests can reason about the mixture.
    """

    matrix: np.ndarray
    dims: tuple = None
    decomposition: tuple = field(default=None, repr=False)

    def __post_init__(self):
        m = linalg.as_square(self.matrix)
        dims = self.dims if self.dims is not None else (m.shape[0], 1)
        dims = tuple(int(x) for x in dims)
        if len(dims) != 2 or dims[0] * dims[1] != m.shape[0]:
            raise DimensionMismatch(f"dims {dims} do not match matrix of size {m.shape[0]}")
        res = state_residuals(m)
        bad = {k: v for k, v in res.items() if v > STATE_TOL}
        if bad:
            raise InvalidState(f"not a density matrix: {bad}")
        m = m.copy()
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "dims", dims)

    @property
    def dim(self):
        return self.matrix.shape[0]

    def reduced(self, keep="A"):
        return linalg.partial_trace(self.matrix, self.dims, keep)


def _as_ket(k):
    v = np.asarray(k, dtype=complex).reshape(-1)
    if abs(np.linalg.norm(v) - 1.0) > STATE_TOL:
        raise NotNormalized(f"ket norm is {np.linalg.norm(v):.12g}")
    return v


def pure_state(k, dims=None):
    """``|k><k|`` as a :class:`DensityMatrix`."""
    v = _as_ket(k)
    return DensityMatrix(np.outer(v, v.conj()), dims)


def paired_entangled(basis_a, basis_b, pairing=None):
    """Maximally entangled ket ``d^{-1/2} sum_i a_i (x) b_{pairing(i)}``.

    Parameters
    ----------
    basis_a, basis_b : array_like, shape (d, d)
        Orthonormal bases; row ``i`` is the ``i``-th ket.
    pairing : sequence of int, optional
        A permutation of ``0..d-1``. Identity when omitted.
    """
    a = np.asarray(basis_a, dtype=complex)
    b = np.asarray(basis_b, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape != b.shape:
        raise DimensionMismatch(f"bases must be d x d of equal size, got {a.shape} and {b.shape}")
    d = a.shape[0]
    pairing = list(range(d)) if pairing is None else [int(x) for x in pairing]
    if sorted(pairing) != list(range(d)):
        raise NotPermutation(f"{pairing} is not a permutation of 0..{d - 1}")
    for basis in (a, b):
        if np.max(np.abs(basis.conj() @ basis.T - np.eye(d))) > STATE_TOL:
            raise NotOrthonormal("basis rows are not orthonormal")
    psi = sum(np.kron(a[i], b[pairing[i]]) for i in range(d)) / np.sqrt(d)
    return _as_ket(psi)


def werner_mixture(sep, psi, s):
    """``(1 - s) sep + s |psi><psi|``."""
    if not 0.0 <= s <= 1.0:
        raise RangeError(f"mixing weight s={s} outside [0, 1]")
    v = _as_ket(psi)
    if v.shape[0] != sep.dim:
        raise DimensionMismatch(f"ket of length {v.shape[0]} vs state of dim {sep.dim}")
    m = (1.0 - s) * sep.matrix + s * np.outer(v, v.conj())
    return DensityMatrix(m, sep.dims)


def completely_mixed(d, dims=None):
    if d < 1:
        raise RangeError("dimension must be positive")
    return DensityMatrix(np.eye(d, dtype=complex) / d, dims)


def classically_correlated(d=3):
    """Equal mixture of ``|ii><ii|`` in the standard basis."""
    m = np.zeros((d * d, d * d), dtype=complex)
    for i in range(d):
        m[i * d + i, i * d + i] = 1.0 / d
    return DensityMatrix(m, (d, d))


def classically_correlated_qutrit():
    return classically_correlated(3)


def random_ket(d, rng):
    """Unitarily invariant random pure state from complex Gaussians."""
    z = rng.standard_normal(d) + 1j * rng.standard_normal(d)
    return z / np.linalg.norm(z)


def random_separable(d_a, d_b, n_terms, seed):
    """Random separable state with an explicit product decomposition.

    Weights are uniform on the simplex and every factor is a random pure
    state, so ``n_terms=1`` gives a pure product state.
    """
    if n_terms < 1:
        raise RangeError("n_terms must be at least 1")
    rng = np.random.default_rng(seed)
    q = rng.dirichlet(np.ones(n_terms)) if n_terms > 1 else np.ones(1)
    terms = []
    m = np.zeros((d_a * d_b, d_a * d_b), dtype=complex)
    for w in q:
        u, v = random_ket(d_a, rng), random_ket(d_b, rng)
        ra, rb = np.outer(u, u.conj()), np.outer(v, v.conj())
        terms.append((float(w), ra, rb))
        m += w * np.kron(ra, rb)
    return DensityMatrix(m, (d_a, d_b), decomposition=tuple(terms))
