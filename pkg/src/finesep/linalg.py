"""Dense complex linear algebra used throughout the package.

All functions take and return ``numpy`` arrays of dtype ``complex128``.
Bipartite operators are ordered with the first subsystem as the major
index, matching ``numpy.kron``.
"""

import numpy as np

from .errors import DimensionMismatch, NotHermitian, NotPSD

RECONSTRUCTION_TOL = 1e-10
PSD_TOL = 1e-10


def as_square(a):
    """Return ``a`` as a finite, square complex matrix."""
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix has non-finite entries")
    return m


def dagger(a):
    return np.conj(np.swapaxes(a, -1, -2))


def hermiticity_residual(a):
    a = np.asarray(a, dtype=complex)
    return float(np.max(np.abs(a - dagger(a)))) if a.size else 0.0


def tensor_product(a, b):
    """Kronecker product with ``a`` as the major (outer) index."""
    return np.kron(as_square(a), as_square(b))


def hermitian_eigensystem(h, tol=1e-10):
    """Eigen-decompose a Hermitian matrix.

    Parameters
    ----------
    h : array_like
        Square matrix, Hermitian up to ``tol`` in max norm.
    tol : float
        Allowed deviation ``max|h - h^dagger|``.

    Returns
    -------
    eigenvalues : ndarray
        Real, ascending.
    eigenvectors : ndarray
        Columns are the orthonormal eigenvectors.
    """
    h = as_square(h)
    if hermiticity_residual(h) > tol:
        raise NotHermitian(f"max |h - h^dagger| = {hermiticity_residual(h):.3e} > {tol:g}")
    hs = 0.5 * (h + dagger(h))
    w, v = np.linalg.eigh(hs)
    # post-verify: the solver is trusted but checked
    scale = max(1.0, float(np.max(np.abs(hs))))
    recon = v @ np.diag(w) @ dagger(v)
    if np.max(np.abs(recon - hs)) > RECONSTRUCTION_TOL * scale:
        raise ArithmeticError("eigendecomposition failed reconstruction check")
    if np.max(np.abs(dagger(v) @ v - np.eye(len(w)))) > RECONSTRUCTION_TOL:
        raise ArithmeticError("eigenvectors are not orthonormal")
    return w, v


def spectral_norm(a):
    """Largest singular value, via the top eigenvalue of ``a^dagger a``."""
    a = as_square(a)
    if a.shape[0] == 0:
        return 0.0
    w = np.linalg.eigvalsh(dagger(a) @ a)
    return float(np.sqrt(max(w[-1], 0.0)))


def psd_sqrt(p, tol=PSD_TOL):
    """Positive square root of a positive semidefinite matrix.

    Eigenvalues in ``[-tol, 0)`` are treated as rounding noise and clamped
    to zero; anything more negative raises ``NotPSD``.
    """
    w, v = hermitian_eigensystem(p, tol)
    if w[0] < -tol:
        raise NotPSD(f"min eigenvalue {w[0]:.3e} < -{tol:g}")
    root = np.sqrt(np.clip(w, 0.0, None))
    return (v * root) @ dagger(v)


def _check_dims(m, dims):
    m = as_square(m)
    d_a, d_b = (int(x) for x in dims)
    if d_a < 1 or d_b < 1 or d_a * d_b != m.shape[0]:
        raise DimensionMismatch(f"dims {dims} do not factor a {m.shape[0]}x{m.shape[0]} matrix")
    return m, d_a, d_b


def _subsystem_index(label):
    if label in (0, "A", "a"):
        return 0
    if label in (1, "B", "b"):
        return 1
    raise ValueError(f"unknown subsystem label {label!r}; use 'A' or 'B'")


def partial_trace(m, dims, keep="A"):
    """Trace out one factor of a bipartite operator, keeping ``keep``."""
    m, d_a, d_b = _check_dims(m, dims)
    t = m.reshape(d_a, d_b, d_a, d_b)
    if _subsystem_index(keep) == 0:
        return np.einsum("ijkj->ik", t)
    return np.einsum("ijil->jl", t)


def partial_transpose(m, dims, subsystem="B"):
    """Transpose one factor of a bipartite operator."""
    m, d_a, d_b = _check_dims(m, dims)
    t = m.reshape(d_a, d_b, d_a, d_b)
    if _subsystem_index(subsystem) == 0:
        t = t.transpose(2, 1, 0, 3)
    else:
        t = t.transpose(0, 3, 2, 1)
    return t.reshape(d_a * d_b, d_a * d_b)


def random_unitary(d, rng):
    """Haar-distributed unitary via QR of a complex Ginibre matrix."""
    z = (rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    ph = np.diag(r) / np.abs(np.diag(r))
    return q * ph
