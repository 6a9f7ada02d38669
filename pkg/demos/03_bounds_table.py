"""
Code-size bounds
================

Lower bound from the construction, the pigeonhole upper bound over canonical
subsets, its simplified form, the optical-orthogonal-code lower bound and the
random-code bound, all for w = n.
"""

# %%
from geocodes import bound_set

print(f"{'n':>3} {'lam':>3} {'l_con':>14} {'u_det':>18} {'u_simplified':>14} {'l_ooc':>12} {'u_ran':>9}")
for n in (5, 7, 11, 13):
    for lam in range(2, min(n, 9)):
        b = bound_set(n, lam)
        print(f"{n:>3} {lam:>3} {b.l_con:>14,} {b.u_det:>18,} {b.u_simplified:>14.4g} "
              f"{b.l_ooc:>12,} {b.u_ran:>9,}")

# %%
# The construction and the upper bound differ by a factor that stays bounded
# in n for fixed lambda.
for lam in (2, 3, 4):
    ratios = [bound_set(n, lam).u_det / bound_set(n, lam).l_con for n in (5, 7, 11, 13, 17, 19, 23)]
    print(f"lambda={lam}: u_det / l_con =", ", ".join(f"{r:.1f}" for r in ratios))
