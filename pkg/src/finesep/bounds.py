"""Upper bounds on the sum of maximal probabilities for separable states.

Each bound holds for every separable state measured with ``N`` composed
POVMs built from local unbiased measurements; exceeding it certifies
entanglement.
"""

from dataclasses import dataclass, field
from itertools import permutations

import numpy as np

from .errors import DimensionMismatch, RangeError
from .linalg import psd_sqrt, spectral_norm


@dataclass(frozen=True)
class BoundValue:
    name: str
    value: float
    params: dict = field(default_factory=dict, compare=False)


def _check(n, d):
    if int(n) != n or n < 1:
        raise RangeError(f"N must be a positive integer, got {n}")
    if int(d) != d or d < 2:
        raise RangeError(f"d must be an integer >= 2, got {d}")


def bound_fngef(n, d):
    """``(N/d)(1 + (d - 1)/sqrt(N))``: MUB bound from the local fine-grained relation."""
    _check(n, d)
    return n / d * (1.0 + (d - 1) / np.sqrt(n))


def bound_fnmim6(n, d):
    """``1 + sqrt((N^2 - N)/d)``: MUB bound from the spectral-norm relation."""
    _check(n, d)
    return 1.0 + np.sqrt((n * n - n) / d)


def bound_fngpq(n, d, kappa):
    """``(N/d)(1 + sqrt((d - 1)(kappa d - 1)/N))`` for MUMs of efficiency ``kappa``."""
    _check(n, d)
    if not 1.0 / d < kappa <= 1.0:
        raise RangeError(f"kappa={kappa} outside (1/{d}, 1]")
    return n / d * (1.0 + np.sqrt((d - 1) * (kappa * d - 1.0) / n))


def bound_qutrit_three():
    """``1 + (2/sqrt 3) cos(pi/18)``, valid for any three of the four qutrit MUBs."""
    return 1.0 + 2.0 / np.sqrt(3.0) * np.cos(np.pi / 18.0)


def bound_imai_generic(elements):
    """Generic bound from pairwise spectral norms of square-rooted elements.

    Parameters
    ----------
    elements : sequence of array_like
        One selected POVM element per measurement, all of the same size.

    Returns
    -------
    float
        ``1 + sqrt(sum_{s != t} ||sqrt(M_s) sqrt(M_t)||^2)`` over ordered pairs.
    """
    mats = [np.asarray(m, dtype=complex) for m in elements]
    if len({m.shape for m in mats}) > 1:
        raise DimensionMismatch("selected elements act on different spaces")
    roots = [psd_sqrt(m) for m in mats]
    total = sum(spectral_norm(roots[s] @ roots[t]) ** 2 for s, t in permutations(range(len(roots)), 2))
    return 1.0 + float(np.sqrt(total))


def imai_generic_from_povms(povms, selection):
    if len(povms) != len(selection):
        raise DimensionMismatch("need one selected index per POVM")
    return bound_imai_generic([p.elements[i] for p, i in zip(povms, selection)])


def best_bound(n, d, kappa=None, qutrit3=False):
    """Most restrictive applicable bound.

    ``kappa`` of ``None`` or ``1`` means rank-one MUBs, for which both MUB
    bounds apply; ``kappa < 1`` leaves only the MUM bound. ``qutrit3`` must
    be set explicitly and is honoured only for ``N = 3`` and ``d = 3``.
    """
    params = {"N": n, "d": d}
    if kappa is None or kappa == 1.0:
        cands = [
            BoundValue("fngef", bound_fngef(n, d), params),
            BoundValue("fnmim6", bound_fnmim6(n, d), params),
        ]
    else:
        cands = [BoundValue("fngpq", bound_fngpq(n, d, kappa), {**params, "kappa": kappa})]
    if qutrit3 and n == 3 and d == 3:
        cands.append(BoundValue("qutrit3", bound_qutrit_three(), params))
    return min(cands, key=lambda b: b.value)


def named_bound(name, n, d, kappa=None):
    """Look up one bound by name (``fngef``, ``fnmim6``, ``fngpq``, ``qutrit3``)."""
    params = {"N": n, "d": d}
    if name == "fngef":
        return BoundValue(name, bound_fngef(n, d), params)
    if name == "fnmim6":
        return BoundValue(name, bound_fnmim6(n, d), params)
    if name == "fngpq":
        if kappa is None:
            raise RangeError("fngpq needs kappa")
        return BoundValue(name, bound_fngpq(n, d, kappa), {**params, "kappa": kappa})
    if name == "qutrit3":
        if (n, d) != (3, 3):
            raise RangeError("qutrit3 bound applies to three measurements on qutrits only")
        return BoundValue(name, bound_qutrit_three(), params)
    raise ValueError(f"unknown bound {name!r}")
