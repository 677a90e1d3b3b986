"""Representations x^3 + y^3 + z^3 = n at a fixed height t = x + y + z.

Shifting ``x = A + t`` (and likewise y, z) turns the pair of equations into
``ABC = (n - t^3)/3``, ``A + B + C = -2t``, which the product-sum solver
handles.  Around that core sit the cheap sieves (divisibility by 3, parity,
mod 9), the height residue table, the mod-18 case tables used to rule out
n = +-4 (mod 9), the (u, v) parametric witnesses, and a meet-in-the-middle
brute force that knows nothing about any of this.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from math import isqrt
from typing import NamedTuple

import numpy as np

from .errors import BoundTooLarge, InfiniteFamily, NotASolution
from .productsum import ProductSumInstance, count_triples_formula, enumerate_triples

BRUTE_BOUND_MAX = 10**4


class CubeTriple(NamedTuple):
    x: int
    y: int
    z: int

    @property
    def height(self) -> int:
        return self.x + self.y + self.z

    @property
    def cube_sum(self) -> int:
        return self.x**3 + self.y**3 + self.z**3


@dataclass(frozen=True)
class RepQuery:
    n: int
    t: int

    @property
    def N1(self) -> int | None:
        diff = self.n - self.t**3
        return diff // 3 if diff % 3 == 0 else None

    @property
    def degenerate(self) -> bool:
        return self.n == self.t**3


class Reason(str, Enum):
    NOT_DIVISIBLE_BY_3 = "NotDivisibleBy3"
    ODD_N1 = "OddN1"
    MOD9_OBSTRUCTION = "Mod9Obstruction"
    NO_WITNESS = "NoWitness"


@dataclass(frozen=True)
class RepResult:
    """Outcome of a (t, n) query.

    ``kind`` is ``"finite"``, ``"infinite"`` or ``"empty"``.  ``count`` is
    None only for the infinite family.
    """

    kind: str
    count: int | None = None
    reason: Reason | None = None
    triples: tuple[CubeTriple, ...] | None = field(default=None, compare=False)

    @classmethod
    def finite(cls, count: int, triples=None) -> "RepResult":
        return cls("finite", count, None, None if triples is None else tuple(triples))

    @classmethod
    def empty(cls, reason: Reason) -> "RepResult":
        return cls("empty", 0, reason, ())

    @classmethod
    def infinite(cls) -> "RepResult":
        return cls("infinite")

    @property
    def is_infinite(self) -> bool:
        return self.kind == "infinite"

    def __int__(self) -> int:
        if self.count is None:
            raise InfiniteFamily("infinite family: n=t^3")
        return self.count


def is_mod9_obstructed(n: int) -> bool:
    return n % 9 in (4, 5)


def _sieve(q: RepQuery) -> RepResult | None:
    """Cheapest applicable sieve, in order divisibility, parity, mod 9."""
    if q.degenerate:
        return RepResult.infinite()
    N1 = q.N1
    if N1 is None:
        return RepResult.empty(Reason.NOT_DIVISIBLE_BY_3)
    if N1 % 2:
        return RepResult.empty(Reason.ODD_N1)
    if is_mod9_obstructed(q.n):
        return RepResult.empty(Reason.MOD9_OBSTRUCTION)
    return None


def _as_query(q, t=None) -> RepQuery:
    if isinstance(q, RepQuery):
        return q
    return RepQuery(q, t)


def rep_count(q, t=None) -> RepResult:
    """Number of ordered (x, y, z) with cube sum n and height t.

    Accepts a RepQuery or ``rep_count(n, t)``.
    """
    q = _as_query(q, t)
    early = _sieve(q)
    if early is not None:
        return early
    count = count_triples_formula(ProductSumInstance(q.N1, -2 * q.t))
    if count == 0:
        return RepResult.empty(Reason.NO_WITNESS)
    return RepResult.finite(count)


def rep_enumerate(q, t=None) -> list[CubeTriple]:
    q = _as_query(q, t)
    early = _sieve(q)
    if early is not None:
        if early.is_infinite:
            raise InfiniteFamily(f"infinite family: n=t^3 (n={q.n}, t={q.t})")
        return []
    t = q.t
    out = [CubeTriple(a + t, b + t, c + t) for a, b, c in enumerate_triples(ProductSumInstance(q.N1, -2 * t))]
    out.sort()
    return out


def band_count(n: int, j: int) -> tuple[int, list[int]]:
    """Representations of n with |height| <= j.

    Heights with n = t^3 contribute 0 and are returned separately.
    """
    total = 0
    infinite = []
    r = n % 6
    for t in range(-j, j + 1):
        if t % 6 != r:
            continue
        res = rep_count(n, t)
        if res.is_infinite:
            infinite.append(t)
        else:
            total += res.count
    return total, infinite


# (n mod 9, k mod 4) -> t mod 6, where n = 9k + (n mod 9)
HEIGHT_CLASS_TABLE: dict[tuple[int, int], int] = {
    (0, 0): 0, (0, 1): 3, (0, 2): 0, (0, 3): 3,
    (1, 0): 1, (1, 1): 4, (1, 2): 1, (1, 3): 4,
    (2, 0): 2, (2, 1): 5, (2, 2): 2, (2, 3): 5,
    (3, 0): 3, (3, 1): 0, (3, 2): 3, (3, 3): 0,
    (6, 0): 0, (6, 1): 3, (6, 2): 0, (6, 3): 3,
    (7, 0): 1, (7, 1): 4, (7, 2): 1, (7, 3): 4,
    (8, 0): 2, (8, 1): 5, (8, 2): 2, (8, 3): 5,
}  # fmt: skip


def height_residue(n: int) -> int | None:
    """The only t (mod 6) a representation of n can have; None if n = +-4 mod 9."""
    k, r = divmod(n, 9)
    return HEIGHT_CLASS_TABLE.get((r, k % 4))


def theorem5_residue_table(t_cubed_mod18: int, six_t_mod18: int, parametrization: str) -> set[int]:
    """Residues n (mod 18) reachable by the (u, v) parametrizations.

    ``"odd"``:  n = 3(2u+1)D - 6t D + t^3,  D = u^2 + u - v^2 - v
    ``"even"``: n = 3(u^2 - v^2)(2u) - 6t(u^2 - v^2) + t^3
    with u, v running over all residues mod 18.
    """
    out = set()
    for u in range(18):
        for v in range(18):
            if parametrization == "odd":
                D = u * u + u - v * v - v
                n = 3 * (2 * u + 1) * D - six_t_mod18 * D + t_cubed_mod18
            elif parametrization == "even":
                D = u * u - v * v
                n = 3 * D * (2 * u) - six_t_mod18 * D + t_cubed_mod18
            else:
                raise ValueError(f"unknown parametrization {parametrization!r}")
            out.add(n % 18)
    return out


# n (mod 18) -> (t^3 mod 18, 6t mod 18) for the four n = +-4 (mod 9) classes
MOD18_CASES = {4: (10, 6), 13: (1, 6), 14: (17, 12), 5: (8, 12)}


class Witness(NamedTuple):
    u: int
    v: int
    form: str


def _roots_v_odd(target: int) -> list[int]:
    # v^2 + v = target
    disc = 1 + 4 * target
    if disc < 0:
        return []
    r = isqrt(disc)
    if r * r != disc:
        return []
    return sorted({(-1 - r) // 2, (-1 + r) // 2})


def _roots_v_even(target: int) -> list[int]:
    # v^2 = target
    if target < 0:
        return []
    r = isqrt(target)
    if r * r != target:
        return []
    return sorted({-r, r})


def parametric_witness(q, u_range, v_range) -> list[Witness]:
    """All (u, v) in the given ranges solving one of the two witness forms.

    odd:  N1 = (2u + 1 - 2t)(u^2 + u - v^2 - v)
    even: N1 = 2(u - t)(u^2 - v^2)

    Each u fixes the second factor, so v comes from one exact square root.
    """
    q = _as_query(q)
    N1 = q.N1
    if N1 is None or N1 == 0:
        raise ValueError("witness search needs 3 | n - t^3 and n != t^3")
    t = q.t
    vs = set(v_range)
    out = []
    for u in u_range:
        a = 2 * u + 1 - 2 * t
        if a and N1 % a == 0:
            D = N1 // a
            for v in _roots_v_odd(u * u + u - D):
                if v in vs:
                    out.append(Witness(u, v, "odd"))
        b = 2 * (u - t)
        if b and N1 % b == 0:
            D = N1 // b
            for v in _roots_v_even(u * u - D):
                if v in vs:
                    out.append(Witness(u, v, "even"))
    out.sort()
    return out


def witness_bound(q) -> int:
    """Box half-width that makes parametric_witness complete."""
    q = _as_query(q)
    return abs(q.N1) + abs(q.t) + 2


def _cube_root_exact(m: int) -> int | None:
    a = abs(m)
    r = round(a ** (1 / 3)) if a < 2**52 else _icbrt(a)
    for c in (r - 1, r, r + 1):
        if c >= 0 and c**3 == a:
            return c if m >= 0 else -c
    return None


def _icbrt(a: int) -> int:
    lo, hi = 0, 1 << (a.bit_length() // 3 + 1)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid**3 <= a:
            lo = mid
        else:
            hi = mid - 1
    return lo


def brute_cube_search(n: int, B: int) -> list[CubeTriple]:
    """Every (x, y, z) with |x|, |y|, |z| <= B and x^3 + y^3 + z^3 = n.

    Meet in the middle: for each x, the vector of n - x^3 - y^3 over all y
    is looked up in the sorted table of cubes.
    """
    if B < 0:
        raise ValueError("B must be nonnegative")
    if B > BRUTE_BOUND_MAX:
        raise BoundTooLarge(f"B={B} exceeds {BRUTE_BOUND_MAX}")
    out = []
    if abs(n) + 3 * B**3 < 2**62:
        zs = np.arange(-B, B + 1, dtype=np.int64)
        cubes = zs**3  # increasing
        for x in range(-B, B + 1):
            w = (n - x**3) - cubes
            idx = np.searchsorted(cubes, w)
            idx[idx > 2 * B] = 2 * B
            hit = np.nonzero(cubes[idx] == w)[0]
            for i in hit:
                out.append(CubeTriple(x, int(zs[i]), int(zs[idx[i]])))
    else:
        table = {z**3: z for z in range(-B, B + 1)}
        for x in range(-B, B + 1):
            for y in range(-B, B + 1):
                z = table.get(n - x**3 - y**3)
                if z is not None:
                    out.append(CubeTriple(x, y, z))
    out.sort()
    return out


GIANT_TRIPLE = CubeTriple(
    569936821221962380720, -569936821113563493509, -472715493453327032
)


def verify_giant(triple=GIANT_TRIPLE, n: int = 3) -> bool:
    """Exact check of a (possibly huge) identity x^3 + y^3 + z^3 = n."""
    x, y, z = triple
    return x**3 + y**3 + z**3 == n


@dataclass(frozen=True)
class SymmetricProfile:
    """Elementary symmetric data of a solution.

    t = x+y+z, r = xy+yz+zx, s = xyz, n1 = x^2+y^2+z^2, p = 3s - n,
    eps = n1 - r.
    """

    t: int
    r: int
    s: int
    n1: int
    p: int
    eps: int

    def check(self, n: int) -> list[str]:
        """Names of the identities that fail (empty when all hold)."""
        t, r, s, n1, p, eps = self.t, self.r, self.s, self.n1, self.p, self.eps
        failed = []
        if t * t - 2 * r != n1:
            failed.append("power-sum")
        if 3 * s - 3 * r * t + t**3 != n:
            failed.append("cube-sum")
        if t * (t * t - 3 * r) != -p:
            failed.append("height-cubic")
        if abs(r) > n1:
            failed.append("|r|<=n1")
        if not 0 <= t * t <= 3 * n1:
            failed.append("t^2<=3n1")
        if eps < 0:
            failed.append("eps>=0")
        return failed


def euler_identity_holds(x: int, y: int, z: int) -> bool:
    lhs = x**3 + y**3 + z**3 - 3 * x * y * z
    rhs = (x + y + z) * (x * x + y * y + z * z - x * y - y * z - z * x)
    return lhs == rhs


def symmetric_profile(x: int, y: int, z: int, n: int) -> SymmetricProfile:
    if x**3 + y**3 + z**3 != n:
        raise NotASolution(f"{x}^3 + {y}^3 + {z}^3 != {n}")
    if not euler_identity_holds(x, y, z):
        raise ArithmeticError("Euler identity failed")
    t = x + y + z
    r = x * y + y * z + z * x
    s = x * y * z
    n1 = x * x + y * y + z * z
    prof = SymmetricProfile(t, r, s, n1, 3 * s - n, n1 - r)
    bad = prof.check(n)
    if bad:
        raise ArithmeticError(f"profile identities failed: {bad}")
    return prof
