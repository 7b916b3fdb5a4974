"""
Comparing the separability bounds
=================================

Tabulates the closed-form bounds for a few (N, d) pairs and shows where
each one is the tighter choice.
"""

from finesep import best_bound, bound_fngef, bound_fngpq, bound_fnmim6, bound_qutrit_three

print(f"{'N':>2} {'d':>3} {'fngef':>8} {'fnmim6':>8} {'best':>7}")
for n, d in [(2, 2), (3, 2), (2, 3), (3, 3), (4, 3), (2, 10), (3, 10), (11, 10)]:
    a, b = bound_fngef(n, d), bound_fnmim6(n, d)
    print(f"{n:>2} {d:>3} {a:8.4f} {b:8.4f} {best_bound(n, d).name:>7}")

# three qutrit measurements admit a sharper constant
print("\nqutrit3 =", round(bound_qutrit_three(), 6), "vs fngef(3,3) =", round(bound_fngef(3, 3), 6))

# noisy measurements: the efficiency kappa interpolates down to N/d
for kappa in (0.4, 0.6, 0.8, 1.0):
    print(f"fngpq(4, 3, kappa={kappa}) = {bound_fngpq(4, 3, kappa):.4f}")
