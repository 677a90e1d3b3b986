"""
abc triples from the zero-height equation
=========================================

Positive (x, y) with xy(x + y) = n give abc triples x + y = z.  We rank
them by the constant C that makes z equal the bound
k exp[4 sqrt(3 log k / log log k)(1 + log log log k / (2 log log k) + C / log log k)]
with k = rad(xyz).
"""

import mpmath

from threecubes import (
    AbcTriple,
    hunt_high_quality,
    implied_C,
    mean_z,
    positive_solutions,
    prime_family,
    quality,
    reduced_count,
    rst_bound,
)

# the classic high-quality triple 1 + 80 = 81
t = AbcTriple.from_pair(1, 80)
print(t, "q =", mpmath.nstr(quality(t), 15))
c = implied_C(t)
print("implied C =", mpmath.nstr(c, 15), " round trip:", mpmath.nstr(rst_bound(t.k, c), 30))

# the best coprime triples with y <= 2000
for r in hunt_high_quality(2000, 10):
    print(f"{r.triple.x:5d} + {r.triple.y:5d} = {r.triple.z:5d}  k={r.triple.k:6d}  "
          f"q={mpmath.nstr(r.q, 8)}  C={mpmath.nstr(r.implied_C, 8)}")

# n = 240 has six ordered solutions
print([(a.x, a.y) for a in positive_solutions(240)], "mean z:", mean_z(240))

# the reduced equation xy(x - y - 1) = n always has a solution at p p1 (1 + p + p1)
for e in prime_family(5):
    print(e.nu, e.p, e.p1, e.n, reduced_count(e.n))
