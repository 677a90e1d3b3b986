"""Self-check suites: each formula against an independent route.

Every suite returns a list of :class:`Check`; ``fast=True`` shrinks the
ranges so a suite finishes in a second or two.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from .abc import family_divisor_identity, prime_family, reduced_count, reduced_count_indicator
from .productsum import (
    ProductSumInstance,
    brute_force_count,
    count_triples_delta_form,
    count_triples_formula,
    enumerate_triples,
)
from .records import corollary1_check, first_attainments, record_scan, zero_height_count
from .reps import (
    HEIGHT_CLASS_TABLE,
    MOD18_CASES,
    RepQuery,
    brute_cube_search,
    euler_identity_holds,
    height_residue,
    is_mod9_obstructed,
    parametric_witness,
    rep_count,
    rep_enumerate,
    symmetric_profile,
    theorem5_residue_table,
    witness_bound,
)

KNOWN_RECORDS = {12: 90, 18: 720, 24: 19440, 30: 55440, 36: 443520}
MOD18_EXPECTED = {4: {10, 16}, 13: {1, 7}, 14: {11, 17}}


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""


def euler_suite(fast: bool = False) -> list[Check]:
    rng = random.Random(12)
    trials = 10**3 if fast else 10**5
    bad = 0
    for _ in range(trials):
        x, y, z = (rng.randint(-10**9, 10**9) for _ in range(3))
        bad += not euler_identity_holds(x, y, z)
    checks = [Check(f"euler identity on {trials} random triples", bad == 0, f"{bad} failures")]
    bad_profiles = []
    span = 20 if fast else 60
    for n in range(-span, span + 1):
        for t in range(-10, 11):
            res = rep_count(n, t)
            if res.kind != "finite":
                continue
            for x, y, z in rep_enumerate(n, t):
                if symmetric_profile(x, y, z, n).check(n):
                    bad_profiles.append((x, y, z))
    checks.append(Check("symmetric profile identities", not bad_profiles, str(bad_profiles[:3])))
    return checks


def oracle_grid(t_max: int, n_max: int) -> list[tuple[int, int, str, int, int]]:
    """Mismatches (n, t, route, expected, got) over |t| <= t_max, |n| <= n_max."""
    bad = []
    for n in range(-n_max, n_max + 1):
        N1s = [(n - t**3) // 3 for t in range(-t_max, t_max + 1) if (n - t**3) % 3 == 0]
        B = max((abs(N) for N in N1s), default=0) + t_max
        by_height: dict[int, int] = {}
        for x, y, z in brute_cube_search(n, B):
            by_height[x + y + z] = by_height.get(x + y + z, 0) + 1
        for t in range(-t_max, t_max + 1):
            if n == t**3:
                continue
            res = rep_count(n, t)
            got = res.count
            routes = {"cube-search": by_height.get(t, 0), "enumerate": len(rep_enumerate(n, t))}
            if (n - t**3) % 3 == 0:
                inst = ProductSumInstance((n - t**3) // 3, -2 * t)
                routes["formula"] = count_triples_formula(inst)
                routes["delta-form"] = count_triples_delta_form(inst)
                routes["divisor-brute"] = brute_force_count(inst)
                q = RepQuery(n, t)
                box = range(-witness_bound(q), witness_bound(q) + 1)
                has_witness = bool(parametric_witness(q, box, box))
                if has_witness != (got > 0):
                    bad.append((n, t, "witness", got, int(has_witness)))
            for route, value in routes.items():
                if value != got:
                    bad.append((n, t, route, got, value))
    return bad


def oracle_suite(fast: bool = False) -> list[Check]:
    t_max, n_max = (4, 40) if fast else (10, 200)
    bad = oracle_grid(t_max, n_max)
    return [Check(f"oracle agreement |t|<={t_max}, |n|<={n_max}", not bad, str(bad[:5]))]


def mod9_suite(fast: bool = False) -> list[Check]:
    span, t_max, B = (200, 20, 20) if fast else (1000, 60, 50)
    bad_count, bad_search = [], []
    for n in range(-span, span + 1):
        if not is_mod9_obstructed(n):
            continue
        for t in range(-t_max, t_max + 1):
            if rep_count(n, t).count:
                bad_count.append((n, t))
        if brute_cube_search(n, B):
            bad_search.append(n)
    return [
        Check(f"rep_count = 0 for n = +-4 mod 9, |n|<={span}, |t|<={t_max}", not bad_count, str(bad_count[:5])),
        Check(f"no cube-search hits with B={B}", not bad_search, str(bad_search[:5])),
    ]


def lemma1_suite(fast: bool = False) -> list[Check]:
    table_ok = len(HEIGHT_CLASS_TABLE) == 28 and all(
        t6 == (9 * k + r) % 6 for (r, k), t6 in HEIGHT_CLASS_TABLE.items()
    )
    closed = all(
        height_residue(n) == (None if is_mod9_obstructed(n) else n % 6) for n in range(-2000, 2001)
    )
    span, B = (100, 10) if fast else (1000, 30)
    bad = []
    for n in range(-span, span + 1):
        for x, y, z in brute_cube_search(n, B):
            if (x + y + z - n) % 6:
                bad.append((n, x, y, z))
    return [
        Check("28-row table equals t = n (mod 6)", table_ok),
        Check("height_residue matches closed form on |n|<=2000", closed),
        Check(f"cube-search solutions (|n|<={span}, B={B}) obey t = n (mod 6)", not bad, str(bad[:3])),
    ]


def theorem5_suite(fast: bool = False) -> list[Check]:
    out = []
    for m, expected in MOD18_EXPECTED.items():
        t3, six_t = MOD18_CASES[m]
        for form in ("odd", "even"):
            got = theorem5_residue_table(t3, six_t, form)
            out.append(Check(f"n = {m} mod 18, {form} form -> {sorted(expected)}", got == expected, str(sorted(got))))
    return out


def records_suite(fast: bool = False) -> list[Check]:
    limit = 10**5 if fast else 5 * 10**5
    entries = record_scan(limit)
    firsts = first_attainments(entries)
    expect = {c: n for c, n in KNOWN_RECORDS.items() if n <= limit}
    out = [Check(f"first attainments up to {limit}", all(firsts.get(c) == n for c, n in expect.items()), str(firsts))]
    mismatch = [e.n for e in entries if e.n <= 3000 and rep_count(e.n, 0).count != e.count]
    out.append(Check("record counts equal rep_count(n, t=0)", not mismatch, str(mismatch[:5])))
    top = 2000 if fast else 10**4
    bad = [n for n in range(6, top + 1, 6) if corollary1_check(n) != (zero_height_count(n) > 0)]
    out.append(Check(f"divisor criterion matches R(0, n) > 0 for n <= {top}", not bad, str(bad[:5])))
    return out


def family_suite(fast: bool = False) -> list[Check]:
    fam = prime_family(100 if fast else 10**4)
    ident = [e.nu for e in fam if not family_divisor_identity(e)]
    counted = [e.nu for e in fam[:100] if reduced_count(e.n) < 1]
    witness = [
        e.nu for e in fam[:100] if tuple(e.witness) not in set(enumerate_triples(ProductSumInstance(-e.n, -1)))
    ]
    span = 100 if fast else 500
    cross = [n for n in range(-span, span + 1) if n and reduced_count(n) != reduced_count_indicator(n)]
    return [
        Check(f"divisor identity for nu <= {len(fam)}", not ident, str(ident[:5])),
        Check("reduced_count(n_nu) >= 1 for nu <= 100", not counted, str(counted[:5])),
        Check("constructed witness is among the enumerated solutions", not witness, str(witness[:5])),
        Check(f"indicator form equals kernel count, 0<|n|<={span}", not cross, str(cross[:5])),
    ]


SUITES: dict[str, Callable[[bool], list[Check]]] = {
    "euler": euler_suite,
    "oracle": oracle_suite,
    "mod9": mod9_suite,
    "lemma1": lemma1_suite,
    "theorem5": theorem5_suite,
    "records": records_suite,
    "family": family_suite,
}


def run_suite(name: str, fast: bool = False) -> list[Check]:
    return SUITES[name](fast)
