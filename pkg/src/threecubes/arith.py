"""Exact integer arithmetic: factorization, divisors, divisor functions.

Everything here works on Python ints, so there is no overflow and no
rounding.  The only real-valued routine is :func:`robin_check`, which uses
interval arithmetic so that its verdict is never an artefact of rounding.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt
from typing import Iterator, Union

from mpmath.ctx_iv import MPIntervalContext

from .errors import DomainError, ZeroInput

TRIAL_LIMIT = 10**6
MATERIALIZE_LIMIT = 10**12

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
# Bases above are a proven deterministic set below this bound.
_MR_DETERMINISTIC = 3317044064679887385961981


@lru_cache(maxsize=None)
def _small_primes(limit: int) -> tuple[int, ...]:
    return tuple(primes_up_to(limit))


def primes_up_to(limit: int) -> list[int]:
    """All primes p <= limit (sieve of Eratosthenes)."""
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, limit + 1, p)))
    return [i for i, flag in enumerate(sieve) if flag]


def first_primes(count: int) -> list[int]:
    """The first `count` primes."""
    if count <= 0:
        return []
    # p_k < k (ln k + ln ln k) for k >= 6
    limit = 15 if count < 6 else int(count * (math.log(count) + math.log(math.log(count)))) + 1
    return primes_up_to(limit)[:count]


def is_prime(n: int) -> bool:
    """Miller-Rabin; deterministic below about 3.3e24, strong probable-prime above."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    bases = list(_MR_BASES)
    if n >= _MR_DETERMINISTIC:
        rng = random.Random(n)
        bases += [rng.randrange(2, n - 1) for _ in range(16)]
    for a in bases:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_brent(n: int) -> int:
    """Return a nontrivial factor of the odd composite n."""
    rng = random.Random(n)
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g


def _split(n: int, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    r = isqrt(n)
    if r * r == n:
        _split(r, out)
        _split(r, out)
        return
    f = _pollard_brent(n)
    _split(f, out)
    _split(n // f, out)


@dataclass(frozen=True)
class Factorization:
    """Signed prime factorization: value = sign * prod(p**e)."""

    sign: int
    factors: tuple[tuple[int, int], ...]

    @property
    def value(self) -> int:
        v = self.sign
        for p, e in self.factors:
            v *= p**e
        return v

    @property
    def abs_value(self) -> int:
        return abs(self.value)

    def __iter__(self):
        return iter(self.factors)


def factor(n: int) -> Factorization:
    """Factor a nonzero integer.

    >>> factor(-8)
    Factorization(sign=-1, factors=((2, 3),))
    """
    if n == 0:
        raise ZeroInput("cannot factor 0")
    sign = 1 if n > 0 else -1
    m = abs(n)
    found: dict[int, int] = {}
    for p in _small_primes(TRIAL_LIMIT):
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            found[p] = e
    if m > 1:
        if m < TRIAL_LIMIT * TRIAL_LIMIT:
            # no prime factor below TRIAL_LIMIT left, so m is prime
            found[m] = found.get(m, 0) + 1
        else:
            _split(m, found)
    return Factorization(sign, tuple(sorted(found.items())))


def _as_factorization(f: Union[Factorization, int]) -> Factorization:
    return f if isinstance(f, Factorization) else factor(f)


def iter_divisors(f: Union[Factorization, int]) -> Iterator[int]:
    """Positive divisors of |value|, unordered, without building a list."""
    f = _as_factorization(f)

    def rec(i: int, acc: int) -> Iterator[int]:
        if i == len(f.factors):
            yield acc
            return
        p, e = f.factors[i]
        for _ in range(e + 1):
            yield from rec(i + 1, acc)
            acc *= p

    return rec(0, 1)


def divisors(f: Union[Factorization, int]) -> list[int]:
    """Sorted positive divisors of |value|."""
    f = _as_factorization(f)
    out = [1]
    for p, e in f.factors:
        out = [d * p**k for d in out for k in range(e + 1)]
    out.sort()
    return out


def signed_divisors(f: Union[Factorization, int]) -> Iterator[int]:
    """All nonzero divisors of N, ascending by |d|, positive before negative."""
    f = _as_factorization(f)
    ds = divisors(f) if f.abs_value <= MATERIALIZE_LIMIT else sorted(iter_divisors(f))
    for d in ds:
        yield d
        yield -d


def tau(f: Union[Factorization, int]) -> int:
    f = _as_factorization(f)
    return math.prod(e + 1 for _, e in f.factors)


def sigma(f: Union[Factorization, int], nu: int = 1) -> int:
    """Sum of nu-th powers of the positive divisors."""
    f = _as_factorization(f)
    if nu < 0:
        raise DomainError("sigma needs nu >= 0")
    if nu == 0:
        return tau(f)
    out = 1
    for p, e in f.factors:
        q = p**nu
        out *= (q ** (e + 1) - 1) // (q - 1)
    return out


def rad(f: Union[Factorization, int]) -> int:
    """Product of the distinct primes dividing |value|."""
    f = _as_factorization(f)
    return math.prod(p for p, _ in f.factors)


def total_product_triples(n: int) -> int:
    """Number of ordered integer triples (A, B, C) with ABC = n.

    Positive solutions are counted by sum of tau over divisors; each comes
    with four sign patterns.
    """
    if n == 0:
        raise ZeroInput("ABC = 0 has infinitely many solutions")
    f = factor(n)
    # sum_{d | m} tau(d) is multiplicative with local factor (e+1)(e+2)/2
    return 4 * math.prod((e + 1) * (e + 2) // 2 for _, e in f.factors)


def exact_square_root(m: int) -> int | None:
    if m < 0:
        return None
    r = isqrt(m)
    return r if r * r == m else None


def is_square(m: int) -> bool:
    return exact_square_root(m) is not None


def robin_bound_interval(n: int, dps: int):
    """Enclosure of e^gamma * n * log log n at `dps` decimal digits."""
    ctx = MPIntervalContext()
    ctx.dps = dps
    return ctx.exp(ctx.euler) * n * ctx.log(ctx.log(ctx.mpf(n)))


def robin_check(n: int, sigma1: int | None = None) -> str:
    """Decide sigma(n) < e^gamma n log log n.

    Returns ``"holds"`` or ``"violated"``.  The bound is enclosed in an
    interval; if sigma(n) falls inside it the precision is raised until it
    does not.
    """
    if n < 3:
        raise DomainError("log log n needs n >= 3")
    s = sigma(n) if sigma1 is None else sigma1
    dps = 30
    while dps <= 4000:
        bound = robin_bound_interval(n, dps)
        if s < bound.a:
            return "holds"
        if s > bound.b:
            return "violated"
        dps *= 2
    raise ArithmeticError(f"could not separate sigma({n}) from the Robin bound")


def sigma_table(limit: int):
    """numpy array a with a[k] = sigma_1(k) for 0 <= k <= limit (a[0] = 0)."""
    import numpy as np

    out = np.zeros(limit + 1, dtype=np.int64)
    for d in range(1, limit + 1):
        out[d::d] += d
    return out


def rad_table(limit: int):
    """numpy array a with a[k] = rad(k) for 1 <= k <= limit (a[0] = 0)."""
    import numpy as np

    out = np.ones(limit + 1, dtype=np.int64)
    out[0] = 0
    for p in primes_up_to(limit):
        out[p::p] *= p
    return out

