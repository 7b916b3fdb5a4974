"""Total-system POVMs built from two local POVMs.

A :class:`PartitionFamily` splits the outcome grid ``Omega(P) x Omega(Q)``
into subsets; outcome ``k`` of the composed POVM is
``sum_{(i, j) in subset k} P_i (x) Q_j``. Compliant families use subsets
that are partial matchings (no row or column index repeated), which is
what makes the composed maximal probability bounded by the local ones on
product states.
"""

from dataclasses import dataclass

import numpy as np

from .errors import IntersectingPairs, NotAPartition, ShapeMismatch
from .measurements import Povm, basis_to_povm, prime_mub_set


@dataclass(frozen=True)
class PartitionFamily:
    shape: tuple
    subsets: tuple
    compliant: bool = True

    def __len__(self):
        return len(self.subsets)


def has_intersecting_pairs(subset):
    rows = [i for i, _ in subset]
    cols = [j for _, j in subset]
    return len(set(rows)) != len(rows) or len(set(cols)) != len(cols)


def make_partition(shape, subsets, enforce=True):
    """Validate and freeze a partition of the ``m x n`` outcome grid.

    With ``enforce`` off, subsets may contain intersecting pairs; the
    result is then marked ``compliant=False`` if any of them do.
    """
    m, n = (int(x) for x in shape)
    subs = tuple(tuple((int(i), int(j)) for i, j in s) for s in subsets)
    seen = set()
    for s in subs:
        if not s:
            raise NotAPartition("empty subset")
        for i, j in s:
            if not (0 <= i < m and 0 <= j < n):
                raise NotAPartition(f"pair {(i, j)} outside grid {m}x{n}")
            if (i, j) in seen:
                raise NotAPartition(f"pair {(i, j)} appears twice")
            seen.add((i, j))
    if len(seen) != m * n:
        raise NotAPartition(f"{m * n - len(seen)} grid cells are not covered")
    compliant = not any(has_intersecting_pairs(s) for s in subs)
    if enforce and not compliant:
        bad = next(s for s in subs if has_intersecting_pairs(s))
        raise IntersectingPairs(f"subset {list(bad)} repeats a local outcome")
    return PartitionFamily((m, n), subs, compliant)


def cyclic_partition(d):
    """Subsets ``{(i, k - i mod d)}`` for ``k = 0..d-1``."""
    return make_partition((d, d), [[(i, (k - i) % d) for i in range(d)] for k in range(d)])


def compose_povm(p, q, family, labels=None):
    """POVM on the product space assembled from ``p`` on A and ``q`` on B."""
    if family.shape != (len(p), len(q)):
        raise ShapeMismatch(f"family shape {family.shape} vs outcome counts {(len(p), len(q))}")
    elements = np.array(
        [sum(np.kron(p.elements[i], q.elements[j]) for i, j in s) for s in family.subsets]
    )
    return Povm(elements, labels, dims=(p.dim, q.dim))


def omega_labels(d):
    return tuple(f"w^{k}" for k in range(d))


def cyclic_measurement(basis_a, basis_b, rotation_a=None, rotation_b=None):
    """Projective product-space measurement from two ordered local bases.

    Outcome ``k`` collects ``|e_i f_j>`` with ``i + j = k (mod d)``, i.e. the
    eigenspaces of ``A (x) B`` when ``A`` and ``B`` act as ``w^i`` on the
    ``i``-th ket. Optional unitaries rotate each local basis first.
    """
    a = np.asarray(basis_a, dtype=complex)
    b = np.asarray(basis_b, dtype=complex)
    if rotation_a is not None:
        a = (np.asarray(rotation_a) @ a.T).T
    if rotation_b is not None:
        b = (np.asarray(rotation_b) @ b.T).T
    d = a.shape[0]
    return compose_povm(basis_to_povm(a), basis_to_povm(b), cyclic_partition(d), omega_labels(d))


SUITE_NAMES_3 = ("Z(x)X", "X(x)Z", "ZX(x)ZX", "ZX^2(x)ZX^2")


def cyclic_suite(d, rotation_a=None, rotation_b=None):
    """Measurements ``Z(x)X, X(x)Z, ZX^m(x)ZX^m`` (``m = 1..d-1``) for prime ``d``."""
    bases = prime_mub_set(d).bases
    pairs = [(0, 1), (1, 0)] + [(m + 1, m + 1) for m in range(1, d)]
    return [cyclic_measurement(bases[i], bases[j], rotation_a, rotation_b) for i, j in pairs]


def suite_names(d):
    if d == 3:
        return list(SUITE_NAMES_3)
    return ["Z(x)X", "X(x)Z"] + [f"ZX^{m}(x)ZX^{m}" for m in range(1, d)]


def qutrit_suite(rotation_a=None, rotation_b=None):
    """The four two-qutrit measurements ``Z(x)X, X(x)Z, ZX(x)ZX, ZX^2(x)ZX^2``."""
    return cyclic_suite(3, rotation_a, rotation_b)
