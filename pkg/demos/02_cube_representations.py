"""
Sums of three cubes at a fixed height
=====================================

R(t, n) counts ordered (x, y, z) with x^3 + y^3 + z^3 = n and x + y + z = t.
Three cheap sieves settle most heights before any divisor is touched.
"""

from threecubes import (
    GIANT_TRIPLE,
    band_count,
    brute_cube_search,
    height_residue,
    rep_count,
    rep_enumerate,
    symmetric_profile,
    verify_giant,
)

# 3 = 1 + 1 + 1 = 64 + 64 - 125, both at height 3
print(rep_count(3, 3))
print(rep_enumerate(3, 3))

# the famous large solution, checked with exact integers
print("giant triple:", GIANT_TRIPLE, verify_giant())

# why a height is empty: the first sieve that fires is reported
for n, t in [(13, 0), (13, -2), (13, 1), (2, 8)]:
    r = rep_count(n, t)
    print(f"n={n} t={t}: {r.kind}, {r.reason.value if r.reason else ''}")

# only heights t = n (mod 6) can carry solutions
print("height class of 36, 35, 13:", [height_residue(n) for n in (36, 35, 13)])

# n = t^3 is the infinite family (t, a, -a)
print(rep_count(8, 2).is_infinite)

# cumulative counts over |t| <= j, and a meet-in-the-middle search to compare
print("band |t|<=12 for n=29:", band_count(29, 12))
print("box search, n=29, |coords|<=4:", brute_cube_search(29, 4))

# symmetric functions of a solution
print(symmetric_profile(4, 4, -5, 3))
