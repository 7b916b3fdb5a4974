"""Separability tests from local fine-grained uncertainty relations."""

from .bounds import (
    BoundValue,
    best_bound,
    bound_fngef,
    bound_fngpq,
    bound_fnmim6,
    bound_imai_generic,
    bound_qutrit_three,
)
from .composer import (
    PartitionFamily,
    compose_povm,
    cyclic_partition,
    cyclic_suite,
    make_partition,
    qutrit_suite,
)
from .detector import (
    DetectionReport,
    ThresholdResult,
    evaluate,
    ppt_check,
    seesaw_max_product,
    threshold_bisect,
)
from .linalg import (
    hermitian_eigensystem,
    partial_trace,
    partial_transpose,
    psd_sqrt,
    spectral_norm,
    tensor_product,
)
from .measurements import (
    MubSet,
    MumSet,
    Povm,
    basis_to_povm,
    generalized_pauli,
    max_probability,
    measure,
    prime_mub_set,
    smooth_mum,
)
from .states import (
    DensityMatrix,
    classically_correlated_qutrit,
    completely_mixed,
    paired_entangled,
    pure_state,
    random_separable,
    werner_mixture,
)

__version__ = "0.1.0"
