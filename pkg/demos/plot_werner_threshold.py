"""
Detection threshold for qutrit Werner mixtures
==============================================

Mixes a maximally entangled qutrit pair with noise and locates the
mixing weight where the three aligned measurements start to flag it.
The partial transpose is shown alongside for comparison.
"""

import math

import numpy as np

from finesep import BoundValue, bound_qutrit_three, evaluate, qutrit_suite, threshold_bisect
from finesep.detector import ppt_threshold
from finesep.scenarios import werner_family

suite = qutrit_suite()[:3]
bound = BoundValue("qutrit3", bound_qutrit_three(), {"N": 3, "d": 3})

for sep in ("mixed", "zz"):
    family = werner_family(3, "mqtr", sep)
    for s in np.linspace(0, 1, 6):
        rep = evaluate(family(s), suite, bound)
        print(f"{sep:>5} s={s:.1f} sum={rep.sum_pmax:.4f} {rep.verdict}")
    res = threshold_bisect(family, suite, bound)
    print(f"{sep:>5} threshold s* = {res.s_star:.8f}")

print("closed form    =", math.cos(math.pi / 18) / math.sqrt(3))
print("PPT threshold  =", ppt_threshold(werner_family(3, "mqtr", "mixed")))
