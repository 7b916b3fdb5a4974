"""POVMs, mutually unbiased bases and mutually unbiased measurements.

Bases are stored as ``(d, d)`` arrays whose *rows* are the kets.
"""

from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import (
    DimensionMismatch,
    InvalidMub,
    InvalidMum,
    InvalidPovm,
    NotOrthonormal,
    NotPrime,
    RangeError,
)

POVM_TOL = 1e-10
MUB_TOL = 1e-10
MUM_TOL = 1e-10
PROB_CLAMP = 1e-10


def povm_residuals(elements):
    """Worst-case residuals of the POVM conditions.

    ``hermitian`` and ``psd`` are maxima over elements; ``completeness`` is
    ``max|sum_i M_i - I|``.
    """
    e = np.asarray(elements, dtype=complex)
    d = e.shape[-1]
    herm = max(linalg.hermiticity_residual(m) for m in e)
    min_eig = min(float(np.linalg.eigvalsh(0.5 * (m + m.conj().T))[0]) for m in e)
    compl = float(np.max(np.abs(e.sum(axis=0) - np.eye(d))))
    return {"hermitian": herm, "psd": max(0.0, -min_eig), "completeness": compl}


@dataclass(frozen=True, eq=False)
class Povm:
    """A resolution of the identity.

    Parameters
    ----------
    elements : array_like, shape (n, d, d)
    labels : sequence of str, optional
        Outcome names; defaults to ``"0".."n-1"``.
    dims : tuple, optional
        Bipartite split of ``d`` for POVMs on a product space.
    """

    elements: np.ndarray
    labels: tuple = None
    dims: tuple = None

    def __post_init__(self):
        e = np.array(self.elements, dtype=complex)
        if e.ndim != 3 or e.shape[1] != e.shape[2] or e.shape[0] == 0:
            raise DimensionMismatch(f"POVM elements must have shape (n, d, d), got {e.shape}")
        if not np.all(np.isfinite(e)):
            raise InvalidPovm("non-finite POVM entries")
        res = povm_residuals(e)
        bad = {k: v for k, v in res.items() if v > POVM_TOL}
        if bad:
            raise InvalidPovm(f"POVM conditions violated: {bad}")
        labels = tuple(str(i) for i in range(e.shape[0])) if self.labels is None else tuple(map(str, self.labels))
        if len(labels) != e.shape[0]:
            raise InvalidPovm(f"{len(labels)} labels for {e.shape[0]} elements")
        dims = self.dims if self.dims is not None else (e.shape[1], 1)
        dims = tuple(int(x) for x in dims)
        if dims[0] * dims[1] != e.shape[1]:
            raise DimensionMismatch(f"dims {dims} do not match POVM dimension {e.shape[1]}")
        e.setflags(write=False)
        object.__setattr__(self, "elements", e)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "dims", dims)

    @property
    def dim(self):
        return self.elements.shape[1]

    def __len__(self):
        return self.elements.shape[0]


def mub_residuals(bases):
    """Orthonormality and unbiasedness residuals for a stack of bases."""
    b = np.asarray(bases, dtype=complex)
    n, d = b.shape[0], b.shape[1]
    ortho = 0.0
    for basis in b:
        ortho = max(ortho, float(np.max(np.abs(basis.conj() @ basis.T - np.eye(d)))))
    unbiased = 0.0
    for s in range(n):
        for t in range(s + 1, n):
            ov = np.abs(b[s].conj() @ b[t].T) ** 2
            unbiased = max(unbiased, float(np.max(np.abs(ov - 1.0 / d))))
    return {"orthonormal": ortho, "unbiased": unbiased}


@dataclass(frozen=True, eq=False)
class MubSet:
    """A set of mutually unbiased bases in dimension ``d``."""

    bases: np.ndarray

    def __post_init__(self):
        b = np.array(self.bases, dtype=complex)
        if b.ndim != 3 or b.shape[1] != b.shape[2]:
            raise DimensionMismatch(f"bases must have shape (n, d, d), got {b.shape}")
        res = mub_residuals(b)
        bad = {k: v for k, v in res.items() if v > MUB_TOL}
        if bad:
            raise InvalidMub(f"MUB conditions violated: {bad}")
        b.setflags(write=False)
        object.__setattr__(self, "bases", b)

    @property
    def dim(self):
        return self.bases.shape[1]

    def __len__(self):
        return self.bases.shape[0]

    def povms(self):
        return [basis_to_povm(b) for b in self.bases]


def mum_residuals(povms, kappa):
    """Residuals of the MUM trace conditions for the given efficiency.

    Keys: ``trace_one`` (every element has unit trace), ``cross`` (elements
    of different POVMs overlap with trace ``1/d``), ``same`` (overlaps
    within one POVM match ``kappa``), ``kappa_range`` (distance outside
    ``(1/d, 1]``, zero when inside).
    """
    e = [np.asarray(p.elements if isinstance(p, Povm) else p, dtype=complex) for p in povms]
    d = e[0].shape[-1]
    off = (1.0 - kappa) / (d - 1)
    tr1 = max(float(np.max(np.abs(np.trace(x, axis1=1, axis2=2) - 1.0))) for x in e)
    same = 0.0
    for x in e:
        g = np.einsum("iab,jba->ij", x, x)
        target = np.where(np.eye(len(x), dtype=bool), kappa, off)
        same = max(same, float(np.max(np.abs(g - target))))
    cross = 0.0
    for s in range(len(e)):
        for t in range(s + 1, len(e)):
            g = np.einsum("iab,jba->ij", e[s], e[t])
            cross = max(cross, float(np.max(np.abs(g - 1.0 / d))))
    if kappa <= 1.0 / d:
        kr = 1.0 / d - kappa + np.finfo(float).eps
    else:
        kr = max(0.0, kappa - 1.0)
    return {"trace_one": tr1, "cross": cross, "same": same, "kappa_range": float(kr)}


@dataclass(frozen=True, eq=False)
class MumSet:
    """Mutually unbiased measurements with efficiency ``kappa``."""

    povms: tuple
    kappa: float

    def __post_init__(self):
        povms = tuple(self.povms)
        if not povms:
            raise InvalidMum("empty MUM set")
        d = povms[0].dim
        if any(p.dim != d or len(p) != d for p in povms):
            raise InvalidMum("every POVM must have d elements of dimension d")
        res = mum_residuals(povms, self.kappa)
        bad = {k: v for k, v in res.items() if v > MUM_TOL}
        if bad:
            raise InvalidMum(f"MUM conditions violated: {bad}")
        object.__setattr__(self, "povms", povms)
        object.__setattr__(self, "kappa", float(self.kappa))

    @property
    def dim(self):
        return self.povms[0].dim

    def __len__(self):
        return len(self.povms)


def generalized_pauli(d):
    """Clock ``Z = diag(1, w, ..., w^{d-1})`` and shift ``X|i> = |i+1>``."""
    if d < 2:
        raise RangeError("d must be at least 2")
    omega = np.exp(2j * np.pi / d)
    z = np.diag(omega ** np.arange(d))
    x = np.roll(np.eye(d, dtype=complex), 1, axis=0)
    return z, x


def is_prime(n):
    if n < 2:
        return False
    return all(n % p for p in range(2, int(n**0.5) + 1))


def _fix_phase(v):
    k = int(np.argmax(np.abs(v) > 1e-12))
    return v * (abs(v[k]) / v[k])


def eigenbasis_of_unitary(u):
    """Eigenbasis of a unitary with non-degenerate spectrum ``c^{1/d} w^k``.

    Uses the fact that ``u^d`` is a multiple of the identity for the
    operators handled here, so the eigenvalues are known in closed form and
    each eigenvector comes from a Lagrange spectral projector. Kets are
    ordered by eigenvalue phase in ``[0, 2pi)`` and their global phase is
    fixed so the first non-vanishing amplitude is real positive.
    """
    u = np.asarray(u, dtype=complex)
    d = u.shape[0]
    ud = np.linalg.matrix_power(u, d)
    c = ud[0, 0]
    if np.max(np.abs(ud - c * np.eye(d))) > 1e-10:
        raise ValueError("u^d is not proportional to the identity")
    lam = np.exp(1j * np.angle(c) / d) * np.exp(2j * np.pi * np.arange(d) / d)
    lam = lam[np.argsort(np.mod(np.angle(lam) + 1e-9, 2 * np.pi))]
    kets = []
    eye = np.eye(d, dtype=complex)
    for k, lk in enumerate(lam):
        proj = eye.copy()
        for j, lj in enumerate(lam):
            if j != k:
                proj = proj @ (u - lj * eye) / (lk - lj)
        col = proj[:, int(np.argmax(np.linalg.norm(proj, axis=0)))]
        kets.append(_fix_phase(col / np.linalg.norm(col)))
    return np.array(kets)


def _mub_operators(d):
    z, x = generalized_pauli(d)
    ops = [z, x]
    for m in range(1, d):
        ops.append(z @ np.linalg.matrix_power(x, m))
    return ops


def prime_mub_set(d):
    """Complete set of ``d + 1`` MUBs for prime ``d``.

    Basis 0 is the standard basis (eigenbasis of ``Z``), basis 1 the
    eigenbasis of ``X``, and basis ``m + 1`` the eigenbasis of ``Z X^m`` for
    ``m = 1 .. d-1``. For ``d = 3`` this gives ``Z, X, ZX, ZX^2``.
    """
    if not is_prime(d):
        raise NotPrime(f"{d} is not prime")
    bases = [np.eye(d, dtype=complex)]
    bases += [eigenbasis_of_unitary(op) for op in _mub_operators(d)[1:]]
    return MubSet(np.array(bases))


def basis_to_povm(basis, labels=None):
    """Rank-one projective measurement onto the kets (rows) of ``basis``."""
    b = np.asarray(basis, dtype=complex)
    d = b.shape[0]
    if b.shape != (d, d) or np.max(np.abs(b.conj() @ b.T - np.eye(d))) > POVM_TOL:
        raise NotOrthonormal("basis rows are not orthonormal")
    return Povm(np.einsum("ia,ib->iab", b, b.conj()), labels)


def smooth_mum(mubs, mu):
    """Depolarise every MUB projector: ``mu |e><e| + (1 - mu) I/d``.

    The result satisfies the MUM trace conditions with
    ``kappa = mu^2 + (1 - mu^2)/d``.
    """
    if not 0.0 < mu <= 1.0:
        raise RangeError(f"mu={mu} outside (0, 1]")
    d = mubs.dim
    eye = np.eye(d) / d
    povms = []
    for b in mubs.bases:
        proj = np.einsum("ia,ib->iab", b, b.conj())
        povms.append(Povm(mu * proj + (1.0 - mu) * eye))
    kappa = mu**2 + (1.0 - mu**2) / d
    return MumSet(tuple(povms), kappa)


def probabilities(povm, rho_matrix):
    """Raw ``Tr(M_i rho)`` for a plain matrix, without clamping."""
    return np.einsum("iab,ba->i", povm.elements, rho_matrix)


def measure(povm, rho):
    """Outcome probabilities ``p_i = Tr(M_i rho)``.

    Values within ``1e-10`` outside ``[0, 1]`` are clamped; larger
    excursions, imaginary parts or a bad total raise ``ValueError``.
    """
    if povm.dim != rho.dim:
        raise DimensionMismatch(f"POVM dim {povm.dim} vs state dim {rho.dim}")
    p = probabilities(povm, rho.matrix)
    if np.max(np.abs(p.imag)) > PROB_CLAMP:
        raise ValueError(f"complex probability, imaginary part {np.max(np.abs(p.imag)):.3e}")
    p = p.real
    if p.min() < -PROB_CLAMP or p.max() > 1.0 + PROB_CLAMP:
        raise ValueError(f"probability outside [0, 1]: {p}")
    p = np.clip(p, 0.0, 1.0)
    if abs(p.sum() - 1.0) > 1e-9:
        raise ValueError(f"probabilities sum to {p.sum():.12g}")
    return p


def max_probability(povm, rho, tol=1e-9):
    """Largest outcome probability and every label within ``tol`` of it."""
    p = measure(povm, rho)
    top = float(p.max())
    return top, tuple(lbl for lbl, pi in zip(povm.labels, p) if top - pi <= tol)
