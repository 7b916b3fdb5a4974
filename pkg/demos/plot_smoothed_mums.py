"""
Mutually unbiased measurements
==============================

Mixing each basis projector with white noise gives a family of unbiased
POVMs with efficiency kappa < 1, and a correspondingly smaller bound.
"""

from finesep import bound_fngef, bound_fngpq, prime_mub_set, smooth_mum
from finesep.measurements import mum_residuals

mubs = prime_mub_set(3)
for mu in (0.2, 0.5, 0.8, 1.0):
    mum = smooth_mum(mubs, mu)
    worst = max(mum_residuals(mum.povms, mum.kappa).values())
    print(f"mu={mu:.1f} kappa={mum.kappa:.4f} worst residual={worst:.1e} bound={bound_fngpq(4, 3, mum.kappa):.4f}")

print("kappa = 1 recovers the basis bound:", bound_fngef(4, 3))
