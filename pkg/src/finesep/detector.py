"""Entanglement detection by violation of a separability bound.

The verdict is one-sided: a report either certifies entanglement
(``violated``) or is inconclusive. It never certifies separability.
"""

from dataclasses import dataclass

import numpy as np

from . import linalg
from .bounds import BoundValue
from .errors import DimensionMismatch, NoSignChange
from .measurements import max_probability, probabilities
from .states import DensityMatrix, random_ket

VIOLATION_TOL = 1e-9
PPT_TOL = 1e-10


@dataclass(frozen=True)
class MeasurementResult:
    name: str
    p_max: float
    argmax: tuple


@dataclass(frozen=True)
class DetectionReport:
    per_measurement: tuple
    sum_pmax: float
    bound: BoundValue
    violated: bool
    margin: float

    @property
    def verdict(self):
        return "entangled" if self.violated else "inconclusive"

    def as_dict(self):
        return {
            "per_measurement": [
                {"id": r.name, "p_max": r.p_max, "argmax": list(r.argmax)} for r in self.per_measurement
            ],
            "sum_pmax": self.sum_pmax,
            "bound": {"name": self.bound.name, "value": float(self.bound.value), "params": dict(self.bound.params)},
            "violated": self.violated,
            "margin": self.margin,
            "verdict": self.verdict,
        }


@dataclass(frozen=True)
class ThresholdResult:
    s_star: float
    bracket: tuple
    bound: BoundValue
    iterations: int


def evaluate(state, suite, bound, names=None):
    """Sum the maximal probabilities of ``suite`` on ``state`` and compare to ``bound``."""
    names = names or [f"M{t}" for t in range(len(suite))]
    results = []
    for name, povm in zip(names, suite):
        if povm.dim != state.dim:
            raise DimensionMismatch(f"measurement {name} has dim {povm.dim}, state has {state.dim}")
        p, arg = max_probability(povm, state)
        results.append(MeasurementResult(name, float(p), arg))
    total = float(sum(r.p_max for r in results))
    margin = total - bound.value
    return DetectionReport(tuple(results), total, bound, bool(margin > VIOLATION_TOL), float(margin))


def informative_subset(suite, target, tol=1e-9):
    """Indices of measurements whose maximal probability on ``target`` exceeds ``1/n_outcomes``."""
    keep = []
    for t, povm in enumerate(suite):
        p, _ = max_probability(povm, target)
        if p > 1.0 / len(povm) + tol:
            keep.append(t)
    return keep


def _bisect(detects, lo, hi, tol):
    """Shrink ``[lo, hi]`` keeping ``detects(lo)`` false and ``detects(hi)`` true."""
    it = 0
    while abs(hi - lo) > tol:
        mid = 0.5 * (lo + hi)
        if detects(mid):
            hi = mid
        else:
            lo = mid
        it += 1
    return lo, hi, it


def threshold_bisect(family, suite, bound, tol=1e-8, interval=(0.0, 1.0)):
    """Locate the parameter at which a one-parameter family starts violating ``bound``.

    ``family`` maps ``s`` to a :class:`DensityMatrix`. Both endpoints are
    evaluated first; if they agree, ``NoSignChange`` is raised.
    """
    a, b = interval

    def detects(s):
        return evaluate(family(s), suite, bound).violated

    da, db = detects(a), detects(b)
    if da == db:
        raise NoSignChange(f"detection is {'on' if da else 'off'} at both s={a} and s={b}")
    lo, hi = (a, b) if db else (b, a)
    lo, hi, it = _bisect(detects, lo, hi, tol)
    return ThresholdResult(0.5 * (lo + hi), (min(lo, hi), max(lo, hi)), bound, it)


def ppt_check(state):
    """Minimum eigenvalue of the partial transpose and the resulting PPT verdict."""
    if not isinstance(state, DensityMatrix) or state.dims[1] == 1:
        raise DimensionMismatch("ppt_check needs a bipartite DensityMatrix")
    pt = linalg.partial_transpose(state.matrix, state.dims, "B")
    w = np.linalg.eigvalsh(0.5 * (pt + linalg.dagger(pt)))
    lam = float(w[0])
    return lam, lam < -PPT_TOL


def ppt_threshold(family, tol=1e-8, interval=(0.0, 1.0)):
    """Parameter where the partial transpose of ``family(s)`` first goes negative."""
    a, b = interval

    def detects(s):
        return ppt_check(family(s))[1]

    if detects(a) == detects(b):
        raise NoSignChange("PPT verdict does not change over the interval")
    lo, hi = (a, b) if detects(b) else (b, a)
    lo, hi, _ = _bisect(detects, lo, hi, tol)
    return 0.5 * (lo + hi)


def _reshaped(suite):
    d_a, d_b = suite[0].dims
    for p in suite:
        if p.dims != (d_a, d_b):
            raise DimensionMismatch("suite members disagree on the bipartite split")
    return d_a, d_b, [p.elements.reshape(len(p), d_a, d_b, d_a, d_b) for p in suite]


def _product_sum(blocks, ra, rb, argmax_out=None):
    total = 0.0
    for t, e in enumerate(blocks):
        p = np.einsum("kabcd,ca,db->k", e, ra, rb).real
        k = int(np.argmax(p))
        if argmax_out is not None:
            argmax_out.append(k)
        total += p[k]
    return total


def _top_ket(h):
    w, v = np.linalg.eigh(0.5 * (h + h.conj().T))
    return v[:, -1]


def seesaw_max_product(suite, restarts=64, seed=0, max_iter=500, tol=1e-12):
    """Alternating maximisation of ``sum_t p_max`` over pure product states.

    Returns
    -------
    best_sum : float
        A lower bound on the true product-state maximum.
    witness : tuple of ndarray
        The local kets ``(u, v)`` attaining ``best_sum``.
    """
    if not suite:
        raise ValueError("empty suite")
    d_a, d_b, blocks = _reshaped(suite)
    rng = np.random.default_rng(seed)
    best, witness = -np.inf, None
    for _ in range(restarts):
        u, v = random_ket(d_a, rng), random_ket(d_b, rng)
        ra, rb = np.outer(u, u.conj()), np.outer(v, v.conj())
        current = _product_sum(blocks, ra, rb)
        for _ in range(max_iter):
            ks = []
            _product_sum(blocks, ra, rb, ks)
            h_a = sum(np.einsum("abcd,db->ac", e[k], rb) for e, k in zip(blocks, ks))
            u = _top_ket(h_a)
            ra = np.outer(u, u.conj())
            ks = []
            _product_sum(blocks, ra, rb, ks)
            h_b = sum(np.einsum("abcd,ca->bd", e[k], ra) for e, k in zip(blocks, ks))
            v = _top_ket(h_b)
            rb = np.outer(v, v.conj())
            new = _product_sum(blocks, ra, rb)
            if new - current < tol:
                current = max(current, new)
                break
            current = new
        if current > best:
            best, witness = current, (u, v)
    return float(best), witness
