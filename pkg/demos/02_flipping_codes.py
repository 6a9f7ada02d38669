"""
Codes that survive a 180 degree flip
====================================

A flipped polynomial graph lines up with its complement q(x) = -p(-x).
Dropping one polynomial from every complementary pair (and every polynomial
that is its own complement) gives a code that also tolerates flips.
"""

# %%
from geocodes import Code, build_code, build_flipping_code, complement, verify_code
from geocodes.bounds import closed_form_warnings
from geocodes.construction import codeword_to_macrobond
from geocodes.correlation import max_flip_correlation

# %%
# The unfiltered code fails once flips are checked.
plain = build_code(5, 2)
report = verify_code(Code(plain.params, plain), flipping=True)
print("unfiltered (5, 2) with flips:", report.witness)

# %%
# Complementary pairs and their overlap under flip. The shift that aligns
# them pushes the x = 0 patch off the grid, so the overlap is n - 1.
for p in plain.polynomials():
    q = complement(p)
    val, v = max_flip_correlation(codeword_to_macrobond(p), codeword_to_macrobond(q))
    print(f"{p.coeffs} <-> {q.coeffs}: flip overlap {val} at {tuple(v)}")

# %%
for n, lam in [(5, 2), (7, 2), (11, 2), (7, 3)]:
    code = build_flipping_code(n, lam)
    members = list(code)
    ok = verify_code(Code(code.params, members), flipping=True).ok if members else True
    print(f"\n(n={n}, lambda={lam}): {len(members)} members, valid={ok}")
    for msg in closed_form_warnings(n, lam, len(members)):
        print("  ", msg)
