"""Named states and Werner-type families used by the CLI and demos."""

from .composer import cyclic_suite, suite_names
from .detector import informative_subset
from .measurements import prime_mub_set
from .states import classically_correlated, completely_mixed, paired_entangled, pure_state, werner_mixture

PSI_CHOICES = ("mqtr", "mqtr1", "phi+")
SEP_CHOICES = ("mixed", "zz")


def target_ket(d, name):
    """Maximally entangled ket by name.

    ``mqtr`` pairs the ``Z`` eigenbasis on A with the ``X`` eigenbasis on B
    as ``i -> -i mod d``; ``mqtr1`` and ``phi+`` both pair the standard
    basis with itself.
    """
    bases = prime_mub_set(d).bases
    if name == "mqtr":
        return paired_entangled(bases[0], bases[1], [(-i) % d for i in range(d)])
    if name in ("mqtr1", "phi+"):
        return paired_entangled(bases[0], bases[0])
    raise ValueError(f"unknown target {name!r}; choose from {PSI_CHOICES}")


def separable_part(d, name):
    if name == "mixed":
        return completely_mixed(d * d, (d, d))
    if name == "zz":
        return classically_correlated(d)
    raise ValueError(f"unknown separable part {name!r}; choose from {SEP_CHOICES}")


def werner_family(d, psi="mqtr", sep="mixed"):
    """``s -> (1 - s) sep + s |psi><psi|`` as a callable."""
    ket = target_ket(d, psi)
    base = separable_part(d, sep)
    return lambda s: werner_mixture(base, ket, s)


def detection_suite(d, target=None, keep_all=False):
    """Cyclic suite for prime ``d``, optionally reduced to informative members.

    Measurements whose maximal probability on ``target`` is only ``1/d``
    are dropped unless ``keep_all`` is set or fewer than two would remain.

    Returns
    -------
    suite, names, indices
    """
    suite = cyclic_suite(d)
    names = suite_names(d)
    idx = list(range(len(suite)))
    if target is not None and not keep_all:
        keep = informative_subset(suite, pure_state(target, (d, d)))
        if len(keep) >= 2:
            idx = keep
    return [suite[i] for i in idx], [names[i] for i in idx], idx
