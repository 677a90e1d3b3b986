"""Ordered integer triples with prescribed product and sum.

Solve ``A*B*C = N``, ``A + B + C = s``.  Fixing the signed divisor
``d = A*B`` pins ``C = N/d`` and turns (A, B) into the roots of
``X^2 - (s - N/d) X + d``, so every solution is found from one divisor and
one exact square root.  Two further counters (a divisor-of-divisor scan
and a raw brute force) exist so the quadratic route can be checked
against routes that share none of its algebra.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, NamedTuple

from .arith import divisors, exact_square_root, factor, signed_divisors
from .errors import ZeroProduct


@dataclass(frozen=True)
class ProductSumInstance:
    N: int
    s: int

    def __post_init__(self):
        if self.N == 0:
            raise ZeroProduct("ABC = 0 admits infinite solution families")


class ProductSumTriple(NamedTuple):
    A: int
    B: int
    C: int


@dataclass(frozen=True)
class FactorCandidate:
    """Quadratic data attached to one signed divisor d = AB of N."""

    d: int
    third: int
    pair_sum: int
    disc: int
    k: int | None

    @property
    def l(self) -> int:
        return -self.pair_sum

    @property
    def roots(self) -> tuple[int, ...]:
        """Distinct integer values of A (B is then pair_sum - A)."""
        if self.k is None:
            return ()
        if self.k == 0:
            return (self.pair_sum // 2,)
        return ((self.pair_sum - self.k) // 2, (self.pair_sum + self.k) // 2)


def _instance(inst_or_n, s=None) -> ProductSumInstance:
    if isinstance(inst_or_n, ProductSumInstance):
        return inst_or_n
    return ProductSumInstance(inst_or_n, s)


def candidates(inst: ProductSumInstance) -> Iterator[FactorCandidate]:
    """One FactorCandidate per signed divisor of N, in divisor order."""
    N, s = inst.N, inst.s
    for d in signed_divisors(factor(N)):
        third = N // d
        pair_sum = s - third
        disc = pair_sum * pair_sum - 4 * d
        yield FactorCandidate(d, third, pair_sum, disc, exact_square_root(disc))


def enumerate_triples(inst, s=None) -> list[ProductSumTriple]:
    """All ordered (A, B, C) with ABC = N and A + B + C = s, sorted."""
    inst = _instance(inst, s)
    out = []
    for c in candidates(inst):
        for a in c.roots:
            out.append(ProductSumTriple(a, c.pair_sum - a, c.third))
    out.sort()
    return out


def count_triples_formula(inst, s=None) -> int:
    """Square-indicator count: 2 per square discriminant, minus the zero ones.

    The subtraction runs over positive divisors of |N| only; a vanishing
    discriminant forces d = pair_sum^2 / 4 > 0.
    """
    inst = _instance(inst, s)
    N, s = inst.N, inst.s
    zero = 0
    for d in divisors(abs(N)):
        pair_sum = s - N // d
        if pair_sum * pair_sum == 4 * d:
            zero += 1
    squares = sum(1 for c in candidates(inst) if c.k is not None)
    return 2 * squares - zero


def count_triples_delta_form(inst, s=None) -> int:
    """Count pairs (d, delta), delta | d | N, with delta + d/delta + N/d = s."""
    inst = _instance(inst, s)
    N, s = inst.N, inst.s
    total = 0
    for d in signed_divisors(N):
        rest = s - N // d
        for delta in signed_divisors(d):
            if delta + d // delta == rest:
                total += 1
    return total


def _trial_divisors(m: int) -> list[int]:
    return [a for a in range(1, m + 1) if m % a == 0]


@lru_cache(maxsize=4096)
def _triple_sums(N: int) -> Counter:
    """Multiset of A + B + C over every ordered (A, B, C) with ABC = N."""
    sums: Counter = Counter()
    for a0 in _trial_divisors(abs(N)):
        for a in (a0, -a0):
            m = N // a
            for b0 in _trial_divisors(abs(m)):
                for b in (b0, -b0):
                    sums[a + b + m // b] += 1
    return sums


def brute_force_count(inst, s=None) -> int:
    """Reference count by exhaustive A | N, B | N/A, C = N/(AB).

    Divisors come from trial division rather than the factorization code,
    and no square roots are taken.
    """
    inst = _instance(inst, s)
    return _triple_sums(inst.N)[inst.s]


def count_triples_factor3(inst, s=None) -> int:
    """Literal evaluation of the factor-3 (d, u, v) closed form.

    Counts (d, u, v) with d a signed divisor of N, uv = d,
    u + v = -(s - N/d), 0 < |u| <= d, 0 < |v| <= d, and multiplies by 3.
    Diagnostic only: this form does not agree with the true count in
    general, see :func:`factor3_disagreements`.
    """
    inst = _instance(inst, s)
    N, s = inst.N, inst.s
    hits = 0
    for c in candidates(inst):
        if c.k is None:
            continue
        for a in c.roots:
            u, v = -a, -(c.pair_sum - a)
            if 0 < abs(u) <= c.d and 0 < abs(v) <= c.d:
                hits += 1
    return 3 * hits


def factor3_disagreements(n_range, s_range) -> list[tuple[int, int, int, int]]:
    """(N, s, true count, factor-3 value) wherever the two differ."""
    out = []
    for N in n_range:
        if N == 0:
            continue
        for s in s_range:
            inst = ProductSumInstance(N, s)
            true = count_triples_formula(inst)
            alt = count_triples_factor3(inst)
            if true != alt:
                out.append((N, s, true, alt))
    return out
