"""
Height-zero counts, records and the Robin inequality
====================================================

At height zero the problem reduces to xyz = n/3 with x + y + z = 0, so
R(0, n) is nonzero only for n = 0 (mod 6).  Scanning n gives a sequence of
record counts whose growth follows the divisor function.
"""

from threecubes import (
    corollary1_check,
    first_attainments,
    record_jumps,
    record_scan,
    robin_check,
    robin_scan,
    sigma_ratio,
    zero_height_count,
)

print("R(0, 90) =", zero_height_count(90), " divisor test:", corollary1_check(90))

# records up to 10^5 (takes about a second)
entries = record_scan(10**5)
for e in entries:
    if e.is_new_max:
        print(f"  new maximum {e.count:3d} at n={e.n}")
print("first attainments:", first_attainments(entries))
print("jumps other than +6:", record_jumps(entries))

# Robin: sigma(n) < e^gamma n log log n for every n > 5040
print("5040:", robin_check(5040), " 5041:", robin_check(5041))
scan = robin_scan(3, 10**5)
print("violations above 5040:", scan.violations)
print("violations at or below 5040:", scan.out_of_claim)

# how close sigma(n) gets to the bound
for n in (10080, 55440):
    r = sigma_ratio(n)
    print(n, r.sigma1, f"{float(r.ratio):.6f}", r.in_S)
