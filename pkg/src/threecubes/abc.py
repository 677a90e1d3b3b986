"""The reduced cubic xy(x - y - 1) = n and abc-style quality diagnostics.

Positive triples x + y = z with product n = xyz are the height-zero
solutions in disguise: (-x, -y, x + y) has zero sum and product n.  For
such triples we report the usual quality log z / log rad(n) and, more
faithfully to the refined bound

    z < k exp[4 sqrt(3 log k / log log k)
              (1 + log log log k / (2 log log k) + C / log log k)],

the constant C that turns the bound into an equality.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

import mpmath
import numpy as np

from .arith import divisors, exact_square_root, first_primes, rad, rad_table
from .errors import DomainError, ZeroInput
from .productsum import (
    ProductSumInstance,
    ProductSumTriple,
    count_triples_formula,
    enumerate_triples,
)

WORK_DPS = 60
MIN_K = 16


def reduced_count(n: int) -> int:
    """Number of integer (x, y) with xy(x - y - 1) = n.

    Via the product-sum kernel with product -n and sum -1.
    """
    if n == 0:
        raise ZeroInput("xy(x-y-1) = 0 has infinitely many solutions")
    return count_triples_formula(ProductSumInstance(-n, -1))


def reduced_count_indicator(n: int) -> int:
    """Same count from the square-indicator sum written directly in n:

    2 * #{signed d | n : (n/d - 1)^2 - 4d is a square}
      - #{d > 0, d | n : (n/d - 1)^2 = 4d}
    """
    if n == 0:
        raise ZeroInput("n must be nonzero")
    pos = divisors(abs(n))
    squares = 0
    for d0 in pos:
        for d in (d0, -d0):
            if exact_square_root((n // d - 1) ** 2 - 4 * d) is not None:
                squares += 1
    zero = sum(1 for d in pos if (n // d - 1) ** 2 == 4 * d)
    return 2 * squares - zero


def reduced_solutions(n: int) -> list[tuple[int, int]]:
    """All (x, y) with xy(x - y - 1) = n, sorted."""
    # (A, B, C) with ABC = -n, A + B + C = -1 maps to x = -A, y = B
    return sorted((-a, b) for a, b, _ in enumerate_triples(ProductSumInstance(-n, -1)))


@dataclass(frozen=True)
class PrimeFamilyEntry:
    nu: int
    p: int
    p1: int
    n: int
    witness: ProductSumTriple


def prime_family(nu_max: int) -> list[PrimeFamilyEntry]:
    """n_nu = p p1 (1 + p + p1) for consecutive primes p < p1, with witnesses.

    (p, p1, -(1 + p + p1)) has product -n_nu and sum -1, so the reduced
    equation always has a solution at n_nu.
    """
    if nu_max < 1:
        return []
    ps = first_primes(nu_max + 1)
    out = []
    for nu in range(1, nu_max + 1):
        p, p1 = ps[nu - 1], ps[nu]
        n = p * p1 * (1 + p + p1)
        w = ProductSumTriple(p, p1, -(1 + p + p1))
        if w.A * w.B * w.C != -n or w.A + w.B + w.C != -1:
            raise ArithmeticError(f"bad witness at nu={nu}")
        out.append(PrimeFamilyEntry(nu, p, p1, n, w))
    return out


def family_divisor_identity(e: PrimeFamilyEntry) -> bool:
    """delta0 + d0/delta0 - n/d0 == -1 with d0 = p p1, delta0 = p."""
    d0 = e.p * e.p1
    return e.n % d0 == 0 and e.p + d0 // e.p - e.n // d0 == -1


@dataclass(frozen=True)
class AbcTriple:
    x: int
    y: int
    z: int
    n: int
    k: int

    @classmethod
    def from_pair(cls, x: int, y: int, k: int | None = None) -> "AbcTriple":
        if x <= 0 or y <= 0:
            raise DomainError("abc triples need positive x, y")
        z = x + y
        n = x * y * z
        return cls(x, y, z, n, rad(n) if k is None else k)


def positive_solutions(n: int) -> list[AbcTriple]:
    """Ordered positive (x, y) with xy(x + y) = n."""
    if n <= 0:
        raise DomainError("positive_solutions needs n > 0")
    k = rad(n)
    out = []
    for x in divisors(n):
        if x * (x + 1) > n:
            break
        m = n // x  # y(x + y) = m
        r = isqrt(x * x + 4 * m)
        y = (r - x) // 2
        if y > 0 and y * (x + y) == m:
            out.append(AbcTriple(x, y, x + y, n, k))
    out.sort(key=lambda a: (a.x, a.y))
    return out


def mean_z(n: int) -> Fraction | None:
    sols = positive_solutions(n)
    if not sols:
        return None
    return Fraction(sum(a.z for a in sols), len(sols))


def _loglogs(k):
    L = mpmath.log(k)
    LL = mpmath.log(L)
    LLL = mpmath.log(LL)
    return L, LL, LLL


def rst_bound(k: int, C, dps: int = WORK_DPS) -> mpmath.mpf:
    """k exp[4 sqrt(3 log k / log log k)(1 + LLL/(2 LL) + C/LL)]."""
    if k < MIN_K:
        raise DomainError(f"k={k} < {MIN_K}: log log log k undefined")
    with mpmath.workdps(dps):
        L, LL, LLL = _loglogs(mpmath.mpf(k))
        C = mpmath.mpf(C)
        return k * mpmath.exp(4 * mpmath.sqrt(3 * L / LL) * (1 + LLL / (2 * LL) + C / LL))


def implied_C(triple: AbcTriple, dps: int = WORK_DPS) -> mpmath.mpf:
    """The C for which rst_bound(k, C) equals z."""
    k, z = triple.k, triple.z
    if k < MIN_K:
        raise DomainError(f"k={k} < {MIN_K}: log log log k undefined")
    with mpmath.workdps(dps):
        L, LL, LLL = _loglogs(mpmath.mpf(k))
        scale = 4 * mpmath.sqrt(3 * L / LL)
        return LL * (mpmath.log(mpmath.mpf(z) / k) / scale - 1 - LLL / (2 * LL))


def quality(triple: AbcTriple, dps: int = WORK_DPS) -> mpmath.mpf:
    with mpmath.workdps(dps):
        return mpmath.log(triple.z) / mpmath.log(triple.k)


@dataclass(frozen=True)
class AbcReport:
    triple: AbcTriple
    q: mpmath.mpf
    implied_C: mpmath.mpf


def report(triple: AbcTriple) -> AbcReport:
    return AbcReport(triple, quality(triple), implied_C(triple))


def _implied_C_float(z, k):
    L = np.log(k)
    LL = np.log(L)
    LLL = np.log(LL)
    return LL * (np.log(z / k) / (4 * np.sqrt(3 * L / LL)) - 1 - LLL / (2 * LL))


def hunt_high_quality(x_max: int, top: int, coprime: bool = True) -> list[AbcReport]:
    """Best triples x <= y <= x_max ranked by implied C (then q, then x, y).

    Triples with rad(xyz) < 16 have no implied C and are skipped.  By
    default only coprime pairs are scanned: scaling x and y by a common
    prime power grows z at fixed radical, so non-coprime triples make the
    ranking meaningless.  A float64 pass picks candidates; the reported
    values are recomputed at full precision.
    """
    if x_max < 1 or top < 1:
        return []
    radt = rad_table(2 * x_max)
    heap: list[tuple[float, int, int]] = []
    for x in range(1, x_max + 1):
        y = np.arange(x, x_max + 1, dtype=np.int64)
        z = x + y
        if coprime:
            keep = np.gcd(y, x) == 1
            y, z = y[keep], z[keep]
            k = radt[x] * radt[y] * radt[z]
        else:
            k = np.lcm(np.lcm(radt[x], radt[y]), radt[z])
        keep = k >= MIN_K
        y, z, k = y[keep], z[keep], k[keep]
        if y.size == 0:
            continue
        c = _implied_C_float(z.astype(np.float64), k.astype(np.float64))
        # keep a margin so float ties near the cut are resolved exactly later
        for i in np.argsort(-c, kind="stable")[: 2 * top + 8]:
            item = (float(c[i]), -x, -int(y[i]))
            if len(heap) < 4 * top + 16:
                heapq.heappush(heap, item)
            elif item > heap[0]:
                heapq.heapreplace(heap, item)
            else:
                break
    reports = [report(AbcTriple.from_pair(-nx, -ny)) for _, nx, ny in heap]
    reports.sort(key=lambda r: (-r.implied_C, -r.q, r.triple.x, r.triple.y))
    return reports[:top]


def mean_z_statistics(ns) -> list[tuple[int, int, Fraction, int]]:
    """(n, number of positive solutions, mean z, rad n) for n with >1 solution."""
    out = []
    for n in sorted(set(ns)):
        sols = positive_solutions(n)
        if len(sols) > 1:
            out.append((n, len(sols), Fraction(sum(a.z for a in sols), len(sols)), rad(n)))
    return out


@dataclass(frozen=True)
class BoundRow:
    n: int
    max_abs_sum: int
    rad_power: mpmath.mpf
    implied_K: mpmath.mpf


def zero_height_solutions(n: int):
    """Ordered (x, y, z) with x + y + z = 0 and x^3 + y^3 + z^3 = n."""
    if n % 3:
        return []
    return enumerate_triples(ProductSumInstance(n // 3, 0))


def theorem8_bound_report(n_range, epsilon) -> list[BoundRow]:
    """Smallest K with max(|x|+|y|+|z|) <= K rad(n)^(1+eps), per n with solutions."""
    out = []
    with mpmath.workdps(WORK_DPS):
        eps = mpmath.mpf(epsilon)
        if eps <= 0:
            raise DomainError("epsilon must be positive")
        for n in n_range:
            if n == 0:
                continue
            sols = zero_height_solutions(n)
            if not sols:
                continue
            m = max(abs(a) + abs(b) + abs(c) for a, b, c in sols)
            rp = mpmath.power(rad(n), 1 + eps)
            out.append(BoundRow(n, m, rp, m / rp))
    return out


def orbit_count(n: int) -> int:
    """R(0, 3n) rebuilt from the positive solutions: 3 signed triples per ordered (x, y)."""
    return 3 * len(positive_solutions(n))

