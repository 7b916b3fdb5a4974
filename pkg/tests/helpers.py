"""Random objects shared by the property tests."""

import numpy as np

from finesep.composer import make_partition
from finesep.measurements import Povm


def random_povm(n, d, rng):
    """``n``-outcome POVM from normalised random positive matrices."""
    g = []
    for _ in range(n):
        a = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
        g.append(a @ a.conj().T)
    w, v = np.linalg.eigh(sum(g))
    s = (v / np.sqrt(w)) @ v.conj().T
    return Povm([s @ x @ s for x in g])


def random_partition(m, n, rng):
    """Random valid partition of the ``m x n`` grid.

    Cells are coloured ``(sigma(i) + tau(j)) mod max(m, n)``, a proper edge
    colouring of the complete bipartite graph, so every colour class is a
    partial matching; classes are then split at random.
    """
    c = max(m, n)
    sig, tau = rng.permutation(c)[:m], rng.permutation(c)[:n]
    classes = [[] for _ in range(c)]
    for i in range(m):
        for j in range(n):
            classes[(sig[i] + tau[j]) % c].append((i, j))
    subsets = []
    for cls in classes:
        if not cls:
            continue
        rng.shuffle(cls)
        cuts = sorted(rng.choice(np.arange(1, len(cls)), size=rng.integers(0, len(cls)), replace=False)) if len(cls) > 1 else []
        for part in np.split(np.array(cls), cuts):
            subsets.append([tuple(map(int, p)) for p in part])
    return make_partition((m, n), subsets)


def random_pure_product(d_a, d_b, rng):
    u = rng.standard_normal(d_a) + 1j * rng.standard_normal(d_a)
    v = rng.standard_normal(d_b) + 1j * rng.standard_normal(d_b)
    u, v = u / np.linalg.norm(u), v / np.linalg.norm(v)
    return np.outer(u, u.conj()), np.outer(v, v.conj())
