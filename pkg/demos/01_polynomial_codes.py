"""
Polynomial codes over a prime field
===================================

Every codeword is the graph of a polynomial over F_n. We build the smallest
interesting code, draw it, and check its correlations.
"""

# %%
from geocodes import Code, build_code, max_auto_correlation, max_cross_correlation, verify_code


def draw(m):
    rows = []
    for y in reversed(range(m.n)):
        rows.append(" ".join("#" if (x, y) in m else "." for x in range(m.n)))
    return "\n".join(rows)


# %%
# n = 5, lambda = 2 gives the four graphs of a*x^2 for a = 1..4
stream = build_code(5, 2)
print(f"declared size: {len(stream)}")
for p, m in zip(stream.polynomials(), stream):
    print(f"\ncoefficients {p.coeffs}")
    print(draw(m))

# %%
# Every pair overlaps in at most lambda = 2 patches, whatever the shift.
members = list(stream)
print("\nauto-correlation of x^2:", max_auto_correlation(members[0]))
print("cross-correlation of x^2 and 2x^2:", max_cross_correlation(members[0], members[1]))

# %%
# Larger codes are produced lazily; verification checks all pairs at once.
for n, lam in [(7, 3), (7, 4), (11, 3)]:
    stream = build_code(n, lam)
    report = verify_code(Code(stream.params, stream))
    print(f"(n={n}, lambda={lam}): {len(stream)} members, "
          f"max auto {report.max_auto}, max cross {report.max_cross}, valid={report.ok}")
