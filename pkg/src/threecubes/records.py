"""Height zero: x + y + z = 0, where the cube sum collapses to 3xyz.

R(0, n) is the number of ordered triples with xyz = n/3 and zero sum.
This module counts it, scans for its running maxima, and evaluates the
divisor-sum ratio sigma(n) / (e^gamma n log log n) that the record values
sit close to.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import mpmath
import numpy as np

from .arith import divisors, exact_square_root, robin_check, sigma, sigma_table
from .errors import DomainError, LimitTooLarge, ZeroInput
from .productsum import ProductSumInstance, count_triples_formula

RECORD_LIMIT_MAX = 10**7
ROBIN_FLOOR = 5040


def zero_height_count(n: int) -> int:
    """R(0, n)."""
    if n == 0:
        raise ZeroInput("R(0, 0) is the infinite family x + y + z = 0")
    if n % 3:
        return 0
    N = n // 3
    if N % 2:
        return 0
    return count_triples_formula(ProductSumInstance(N, 0))


def corollary1_check(n: int, signed: bool = True) -> bool:
    """True if n = 0 (mod 6) and some divisor d of n/3 makes n^2/(9d^2) - 4d a square.

    With ``signed=False`` only positive d are tried, which misses
    solutions whose two-coordinate product is negative.
    """
    if n == 0:
        raise ZeroInput("n must be nonzero")
    if n % 6:
        return False
    m = n // 3
    for d0 in divisors(abs(m)):
        for d in ((d0, -d0) if signed else (d0,)):
            q = m // d
            if exact_square_root(q * q - 4 * d) is not None:
                return True
    return False


@dataclass(frozen=True)
class RecordEntry:
    n: int
    count: int
    is_new_max: bool


def _counts_chunk(bounds: tuple[int, int]) -> list[tuple[int, int]]:
    lo, hi = bounds
    out = []
    start = lo + (-lo) % 6
    for n in range(start, hi + 1, 6):
        c = zero_height_count(n)
        if c:
            out.append((n, c))
    return out


def record_scan(limit: int, workers: int | None = 1) -> list[RecordEntry]:
    """Every n in [1, limit] with R(0, n) > 0, flagged where a new maximum is set.

    Only n = 0 (mod 6) can qualify.  With ``workers > 1`` the range is split
    into chunks handled by separate processes; the result does not depend
    on the split.
    """
    if limit > RECORD_LIMIT_MAX:
        raise LimitTooLarge(f"limit {limit} exceeds {RECORD_LIMIT_MAX}")
    if limit < 1:
        return []
    workers = workers or os.cpu_count() or 1
    if workers <= 1:
        rows = _counts_chunk((1, limit))
    else:
        step = max(6, -(-limit // (4 * workers)))
        chunks = [(lo, min(lo + step - 1, limit)) for lo in range(1, limit + 1, step)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = [r for part in pool.map(_counts_chunk, chunks) for r in part]
        rows.sort()
    out = []
    best = 0
    for n, c in rows:
        out.append(RecordEntry(n, c, c > best))
        best = max(best, c)
    return out


def first_attainments(entries: list[RecordEntry]) -> dict[int, int]:
    """count -> smallest n reaching it, for counts that are new maxima."""
    return {e.count: e.n for e in entries if e.is_new_max}


def record_jumps(entries: list[RecordEntry]) -> list[tuple[int, int, int]]:
    """(n, previous max, new max) for each new maximum whose jump is not 6."""
    out = []
    prev = 0
    for e in entries:
        if e.is_new_max:
            if prev and e.count - prev != 6:
                out.append((e.n, prev, e.count))
            prev = e.count
    return out


@dataclass(frozen=True)
class SigmaRatioReport:
    n: int
    sigma1: int
    ratio: mpmath.mpf
    in_S: bool


def robin_ratio(n: int, sigma1: int | None = None, dps: int = 50) -> mpmath.mpf:
    """sigma(n) / (e^gamma n log log n) at `dps` digits."""
    s = sigma(n) if sigma1 is None else sigma1
    with mpmath.workdps(dps + 10):
        r = mpmath.mpf(s) / (mpmath.exp(mpmath.euler) * n * mpmath.log(mpmath.log(n)))
    with mpmath.workdps(dps):
        return +r


def sigma_ratio(n: int, lower: float = 0.85, upper: float = 1.0) -> SigmaRatioReport:
    if n <= ROBIN_FLOOR:
        raise DomainError(f"sigma_ratio is defined for n > {ROBIN_FLOOR}")
    s = sigma(n)
    ratio = robin_ratio(n, s)
    if upper == 1.0:
        # ratio < 1 is the Robin inequality; decide it with the interval check
        below = robin_check(n, s) == "holds"
    else:
        below = ratio < upper
    return SigmaRatioReport(n, s, ratio, bool(below and ratio > lower))


def sigma_ratio_set(a: int, b: int, lower: float = 0.85) -> list[int]:
    """Members of S(a, b): a <= n <= b, n > 5040, lower < ratio < 1."""
    a = max(a, ROBIN_FLOOR + 1)
    if b < a:
        return []
    sig = sigma_table(b)
    ns = np.arange(a, b + 1)
    approx = sig[a:] / (np.exp(np.euler_gamma) * ns * np.log(np.log(ns)))
    out = []
    # float ratio is good to ~1e-13; recheck anything near either threshold
    for n in ns[(approx > lower - 1e-9) & (approx < 1 + 1e-9)]:
        if sigma_ratio(int(n), lower).in_S:
            out.append(int(n))
    return out


@dataclass(frozen=True)
class RobinScan:
    lo: int
    hi: int
    checked: int
    violations: list[int]
    out_of_claim: list[int]
    escalated: int


def robin_scan(lo: int, hi: int) -> RobinScan:
    """Check the Robin inequality for every n in [lo, hi] (n >= 3).

    A float64 pass settles everything with a relative margin above 1e-9;
    the rest goes through the interval check in :func:`robin_check`.
    Violations at n <= 5040 are reported separately as outside the claim.
    """
    lo = max(lo, 3)
    if hi < lo:
        return RobinScan(lo, hi, 0, [], [], 0)
    sig = sigma_table(hi)[lo:].astype(np.float64)
    ns = np.arange(lo, hi + 1, dtype=np.float64)
    bound = np.exp(np.euler_gamma) * ns * np.log(np.log(ns))
    rel = (sig - bound) / bound
    unclear = np.nonzero(np.abs(rel) <= 1e-9)[0]
    violated = set(np.nonzero(rel > 1e-9)[0].tolist())
    for i in unclear.tolist():
        if robin_check(lo + i) == "violated":
            violated.add(i)
    bad = sorted(lo + i for i in violated)
    return RobinScan(
        lo,
        hi,
        hi - lo + 1,
        [n for n in bad if n > ROBIN_FLOOR],
        [n for n in bad if n <= ROBIN_FLOOR],
        len(unclear),
    )
