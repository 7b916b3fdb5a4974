"""
Searching product states numerically
====================================

A see-saw over pure product states gives a lower estimate of the largest
probability sum a separable state can reach. It should sit below every
analytic bound.
"""

from finesep import bound_fngef, bound_qutrit_three, qutrit_suite, seesaw_max_product

suite = qutrit_suite()
best3, (u, v) = seesaw_max_product(suite[:3], restarts=64, seed=0)
best4, _ = seesaw_max_product(suite, restarts=64, seed=0)

print(f"three measurements: found {best3:.6f}, bound {bound_qutrit_three():.6f}")
print(f"four measurements : found {best4:.6f}, bound {bound_fngef(4, 3):.6f}")
print("optimal local factors:")
print(u.round(4))
print(v.round(4))
