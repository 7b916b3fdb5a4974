"""
Composing local measurements
============================

A partition of outcome pairs into partial matchings turns two local
measurements into one measurement on the pair. On product states the
composed maximum never beats the smaller local maximum. Entangled states
can do better.
"""

import numpy as np

from finesep import (
    DensityMatrix,
    basis_to_povm,
    compose_povm,
    cyclic_partition,
    make_partition,
    max_probability,
    measure,
    paired_entangled,
    pure_state,
)

z = basis_to_povm(np.eye(2))
zz = compose_povm(z, z, cyclic_partition(2))

# product state |0>|+>: the Z outcome on the second qubit is a coin flip
plus = np.array([1, 1]) / np.sqrt(2)
prod = DensityMatrix(np.kron(np.diag([1.0, 0.0]), np.outer(plus, plus)), (2, 2))
print("product |0+>:", measure(zz, prod))

# a Bell state has perfectly correlated outcomes
bell = pure_state(paired_entangled(np.eye(2), np.eye(2)), (2, 2))
print("Bell state  :", measure(zz, bell), "p_max =", max_probability(zz, bell)[0])

# the reduced state of either half gives a local maximum of only 1/2
half = DensityMatrix(bell.reduced("A"))
print("local p_max :", max_probability(z, half)[0])

# if a subset repeats a local outcome, the composed maximum can exceed it
bad = make_partition((2, 2), [[(0, 0), (1, 0), (1, 1)], [(0, 1)]], enforce=False)
mixed = DensityMatrix(np.eye(4) / 4, (2, 2))
print("intersecting subsets give", measure(compose_povm(z, z, bad), mixed)[0])
