import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from threecubes.errors import BoundTooLarge, InfiniteFamily, NotASolution
from threecubes.reps import (
    GIANT_TRIPLE,
    HEIGHT_CLASS_TABLE,
    MOD18_CASES,
    CubeTriple,
    Reason,
    RepQuery,
    band_count,
    brute_cube_search,
    euler_identity_holds,
    height_residue,
    parametric_witness,
    rep_count,
    rep_enumerate,
    symmetric_profile,
    theorem5_residue_table,
    verify_giant,
    witness_bound,
)

from oracles import cube_solutions_box


def test_query_fields():
    assert RepQuery(3, 3).N1 == -8
    assert RepQuery(4, 0).N1 is None
    assert RepQuery(8, 2).degenerate


def test_count_n3_t3():
    assert rep_count(3, 3).count == 4
    # brute-force oracle over a small box
    assert len([s for s in cube_solutions_box(3, 5) if sum(s) == 3]) == 4


def test_count_infinite_and_empty():
    assert rep_count(1, 1).is_infinite
    r = rep_count(4, -2)
    assert r.kind == "empty" and r.count == 0
    assert rep_count(4, 0).reason is Reason.NOT_DIVISIBLE_BY_3
    # n=3, t=0: N1 = 1 is odd
    assert rep_count(3, 0).reason is Reason.ODD_N1
    # n=2, t=8: N1 = -170, passes every sieve, no solution
    assert rep_count(2, 8).reason is Reason.NO_WITNESS
    assert [s for s in brute_cube_search(2, 178) if sum(s) == 8] == []
    assert rep_count(RepQuery(3, 3)).kind == "finite"


def test_sieve_order_reports_cheapest():
    # n = 13 = 4 (mod 9)
    assert rep_count(13, 0).reason is Reason.NOT_DIVISIBLE_BY_3
    assert rep_count(13, -2).reason is Reason.ODD_N1
    assert rep_count(13, 1).reason is Reason.MOD9_OBSTRUCTION


def test_enumerate_examples():
    assert rep_enumerate(3, 3) == [(-5, 4, 4), (1, 1, 1), (4, -5, 4), (4, 4, -5)]
    assert rep_enumerate(2, 2) == [(0, 1, 1), (1, 0, 1), (1, 1, 0)]
    assert rep_enumerate(6, 0) == [(-1, -1, 2), (-1, 2, -1), (2, -1, -1)]
    for n, t in ((2, 2), (6, 0)):
        assert rep_enumerate(n, t) == [s for s in cube_solutions_box(n, 4) if sum(s) == t]
    with pytest.raises(InfiniteFamily):
        rep_enumerate(8, 2)


def test_band_examples():
    assert band_count(2, 2) == (3, [])
    assert band_count(4, 10) == (0, [])
    assert band_count(8, 2) == (0, [2])


def test_band_nondecreasing():
    for n in range(-60, 61, 7):
        prev = -1
        for j in range(0, 25):
            c, _ = band_count(n, j)
            assert c >= prev
            prev = c


def test_band_matches_per_height_sum():
    for n in (2, 3, 29, 30, -17):
        c, inf = band_count(n, 12)
        direct = sum(rep_count(n, t).count or 0 for t in range(-12, 13))
        assert c == direct
        assert inf == [t for t in range(-12, 13) if t**3 == n]


def test_height_residue_examples():
    assert height_residue(36) == 0
    assert height_residue(35) == 5
    assert height_residue(13) is None


def test_height_class_table_closed_form():
    assert len(HEIGHT_CLASS_TABLE) == 28
    assert {r for r, _ in HEIGHT_CLASS_TABLE} == {0, 1, 2, 3, 6, 7, 8}
    for (r, k), t6 in HEIGHT_CLASS_TABLE.items():
        # any n realizing (r, k mod 4) has n mod 6 == t6
        for k1 in range(-3, 4):
            assert (9 * (4 * k1 + k) + r) % 6 == t6
    for n in range(-3000, 3001):
        expected = None if n % 9 in (4, 5) else n % 6
        assert height_residue(n) == expected


def test_mod18_tables():
    assert theorem5_residue_table(10, 6, "odd") == {10, 16}
    assert theorem5_residue_table(10, 6, "even") == {10, 16}
    assert theorem5_residue_table(1, 6, "odd") == {1, 7}
    assert theorem5_residue_table(1, 6, "even") == {1, 7}
    assert theorem5_residue_table(17, 12, "odd") == {11, 17}
    assert theorem5_residue_table(17, 12, "even") == {11, 17}
    with pytest.raises(ValueError):
        theorem5_residue_table(1, 6, "neither")


def test_mod18_case_parameters():
    # n = 4 and 13 (mod 18): the tabulated (t^3, 6t) mod 18 come from t = n (mod 6)
    for m in (4, 13):
        t3, six_t = MOD18_CASES[m]
        assert {(t**3 % 18, 6 * t % 18) for t in range(m % 6, 18, 6)} == {(t3, six_t)}
    # n = 14 and 5 (mod 18) are tabulated with the two height classes swapped;
    # using t = n (mod 6) instead still leaves n unreachable
    for form in ("odd", "even"):
        assert theorem5_residue_table(8, 12, form) == {2, 8}  # n = 14, t = 2 (mod 6)
        assert theorem5_residue_table(17, 12, form) == {11, 17}  # n = 5, t = 5 (mod 6)
    for m, (t3, six_t) in MOD18_CASES.items():
        for form in ("odd", "even"):
            assert m not in theorem5_residue_table(t3, six_t, form)


def _box_witnesses(q, lo, hi):
    """Plain double loop over the box, for checking the fast search."""
    N1, t = q.N1, q.t
    out = []
    for u in range(lo, hi + 1):
        for v in range(lo, hi + 1):
            D = u * u + u - v * v - v
            if N1 == (2 * u + 1) * D - 2 * t * D:
                out.append((u, v, "odd"))
            E = u * u - v * v
            if N1 == 2 * u * E - 2 * t * E:
                out.append((u, v, "even"))
    return sorted(out)


@pytest.mark.parametrize("n, t", [(3, 3), (6, 0), (2, 2), (29, 5), (-2, -2), (30, 0), (4, -2)])
def test_witness_search_matches_box_loop(n, t):
    q = RepQuery(n, t)
    assert parametric_witness(q, range(-12, 13), range(-12, 13)) == _box_witnesses(q, -12, 12)


def test_witness_examples():
    box10 = range(-10, 11)
    assert parametric_witness(RepQuery(3, 3), box10, box10)
    assert parametric_witness(RepQuery(4, -2), box10, box10) == []
    box5 = range(-5, 6)
    assert parametric_witness(RepQuery(6, 0), box5, box5)


def test_witness_equivalence_grid():
    for n in range(-80, 81):
        for t in range(-6, 7):
            q = RepQuery(n, t)
            if q.N1 is None or q.N1 == 0:
                continue
            b = witness_bound(q)
            box = range(-b, b + 1)
            assert bool(parametric_witness(q, box, box)) == (rep_count(q).count > 0), (n, t)


def test_brute_cube_search_examples():
    assert brute_cube_search(3, 5) == rep_enumerate(3, 3)
    assert brute_cube_search(4, 100) == []
    sols = brute_cube_search(29, 4)
    assert sols == cube_solutions_box(29, 4)
    assert {tuple(sorted(s)) for s in sols} == {(1, 1, 3), (-3, -2, 4)}
    with pytest.raises(BoundTooLarge):
        brute_cube_search(1, 10**4 + 1)


def test_brute_cube_search_matches_triple_loop():
    for n in range(-40, 41):
        assert brute_cube_search(n, 6) == cube_solutions_box(n, 6)


def test_brute_cube_search_big_n_path():
    # |n| beyond int64 takes the dictionary path
    n = 10**30 + 3
    assert brute_cube_search(n, 3) == []
    x = 10**6
    assert brute_cube_search(x**3 + 2, 2) == []


def test_rep_count_matches_cube_search():
    for n in range(-60, 61):
        for t in range(-5, 6):
            q = RepQuery(n, t)
            if q.degenerate:
                continue
            B = abs(q.N1 or 0) + abs(t)
            hits = [s for s in brute_cube_search(n, B) if sum(s) == t]
            assert rep_count(q).count == len(hits) == len(rep_enumerate(q)), (n, t)


def test_height_congruence_of_solutions():
    for n in range(-100, 101):
        for s in brute_cube_search(n, 12):
            assert (sum(s) - n) % 6 == 0


def test_giant_identity():
    assert verify_giant()
    x, y, z = GIANT_TRIPLE
    assert not verify_giant(CubeTriple(x + 1, y, z))
    assert verify_giant(CubeTriple(1, 1, 1))


def test_symmetric_profile_examples():
    p = symmetric_profile(1, 1, 1, 3)
    assert (p.t, p.r, p.s, p.n1, p.p, p.eps) == (3, 3, 1, 3, 0, 0)
    p = symmetric_profile(4, 4, -5, 3)
    assert (p.t, p.r, p.s, p.n1, p.p, p.eps) == (3, -24, -80, 57, -243, 81)
    p = symmetric_profile(1, 0, -1, 0)
    assert (p.t, p.r, p.s, p.n1, p.p, p.eps) == (0, -1, 0, 2, 0, 3)
    with pytest.raises(NotASolution):
        symmetric_profile(1, 1, 1, 4)


def test_symmetric_profile_giant():
    p = symmetric_profile(*GIANT_TRIPLE, 3)
    assert p.check(3) == []


@given(st.integers(-10**9, 10**9), st.integers(-10**9, 10**9), st.integers(-10**9, 10**9))
def test_euler_identity(x, y, z):
    assert euler_identity_holds(x, y, z)
    n = x**3 + y**3 + z**3
    assert symmetric_profile(x, y, z, n).check(n) == []


def test_profiles_on_enumerated_solutions():
    rng = random.Random(5)
    for _ in range(300):
        n, t = rng.randint(-300, 300), rng.randint(-12, 12)
        if n == t**3:
            continue
        for s in rep_enumerate(n, t):
            assert symmetric_profile(*s, n).check(n) == []
