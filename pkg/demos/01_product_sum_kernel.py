"""
Counting integer triples with a given product and sum
=====================================================

Every ordered (A, B, C) with ABC = N and A + B + C = s comes from one
signed divisor d = AB of N: the pair (A, B) are the roots of
X^2 - (s - N/d) X + d, so they exist exactly when the discriminant is a
square.
"""

from threecubes import (
    ProductSumInstance,
    brute_force_count,
    candidates,
    count_triples_delta_form,
    count_triples_formula,
    enumerate_triples,
)

# the shift x = A + t turns x^3 + y^3 + z^3 = 3 at height 3 into this instance
inst = ProductSumInstance(-8, -6)

# one candidate per signed divisor; only square discriminants give triples
for c in candidates(inst):
    tag = "square" if c.k is not None else ""
    print(f"d={c.d:3d}  C={c.third:3d}  disc={c.disc:4d}  {tag}")

print("triples:", enumerate_triples(inst))

# three independent routes to the same number
print("formula", count_triples_formula(inst))
print("delta form", count_triples_delta_form(inst))
print("brute force", brute_force_count(inst))

# a parity fact: odd N with even s never has a solution
print("odd N, even s:", [count_triples_formula(ProductSumInstance(N, 4)) for N in (-9, 15, 105)])
