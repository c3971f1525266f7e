import itertools
from math import comb

import pytest
from hypothesis import given, strategies as st

from mutual_borders import lattice
from mutual_borders.lattice import (
    LatticePath,
    LatticePoint,
    OddComposition,
    OverlapGeometry,
    binomial,
    composition_triple_count,
    enumerate_odd_compositions,
    fan_pair_brute,
    fan_pair_count,
    path_count,
    small_gamma_triple_count,
    triple_count_brute,
    triple_count_closed,
    word_has_abelian_border_k,
)
from mutual_borders.words import BinaryWord, all_words, shortest_abelian_border


def all_paths(a, b):
    dx, dy = b[0] - a[0], b[1] - a[1]
    if dx < 0 or dy < 0:
        return
    for ups in itertools.combinations(range(dx + dy), dy):
        bits = sum(1 << t for t in ups)
        yield LatticePath(LatticePoint(*a), BinaryWord(dx + dy, bits))


def triple_full_enumeration(a, b, c):
    """Enumerate p and q outright; p' is determined by p."""
    total = 0
    for p in all_paths(a, c):
        pts_p = set(p.points())
        pts_shadow = set(LatticePath(LatticePoint(*b), p.word).points())
        for q in all_paths(b, c):
            pts_q = set(q.points())
            if pts_p & pts_q == {tuple(c)} and pts_q & pts_shadow == {tuple(b)}:
                total += 1
    return total


@pytest.mark.parametrize("n, k, expected", [(4, 2, 6), (3, 5, 0), (5, -1, 0), (-1, 0, 0), (0, 0, 1)])
def test_binomial(n, k, expected):
    assert binomial(n, k) == expected


@pytest.mark.parametrize("a, b, expected", [((0, 0), (2, 3), 10), ((0, 0), (-1, 2), 0), ((3, 4), (3, 4), 1)])
def test_path_count(a, b, expected):
    assert path_count(a, b) == expected


@given(st.integers(-3, 3), st.integers(-3, 3), st.integers(0, 4), st.integers(0, 4))
def test_path_count_matches_enumeration(x, y, dx, dy):
    assert path_count((x, y), (x + dx, y + dy)) == sum(1 for _ in all_paths((x, y), (x + dx, y + dy)))


def test_lattice_path_end():
    path = LatticePath(LatticePoint(1, -1), BinaryWord.parse("abbab"))
    assert path.end == path.points()[-1] == (3, 2)


def test_fan_pair_examples():
    assert fan_pair_count(1, 2, 1, 0) == 1
    assert fan_pair_count(2, 2, 2, 0) == 1
    steps, l1, l2 = 5, 3, 1
    assert fan_pair_count(l1 - l2, steps, l1, l2) == (l1 - l2) * comb(steps, l1) * comb(steps, l2) // steps


@pytest.mark.parametrize("steps", range(1, 9))
def test_fan_pair_matches_enumeration(steps):
    for lo in range(steps + 1):
        for hi in range(lo + 1, steps + 1):
            assert fan_pair_count(hi - lo, steps, hi, lo) == fan_pair_brute(steps, hi, lo)


def test_fan_pair_rejects_inexact_use():
    with pytest.raises(ArithmeticError):
        fan_pair_count(1, 6, 3, 3)
    with pytest.raises(ValueError):
        fan_pair_count(0, 4, 2, 2)


def test_odd_compositions_example():
    got = {c.parts for c in enumerate_odd_compositions(5, 4, 2)}
    assert got == {(1, 1, 3), (3, 1, 1), (2, 1, 2)}
    assert list(enumerate_odd_compositions(3, 3, 2)) == []
    assert [c.parts for c in enumerate_odd_compositions(4, 2, 2)] == [(1, 2, 1)]


@pytest.mark.parametrize("total", range(1, 11))
def test_odd_composition_cardinality(total):
    for odd_sum in range(total + 1):
        for r in range(2, 6):
            comps = list(enumerate_odd_compositions(total, odd_sum, r))
            assert len(comps) == binomial(odd_sum - 1, r - 1) * binomial(total - odd_sum - 1, r - 2)
            assert len(set(comps)) == len(comps)
            for c in comps:
                assert sum(c.parts) == total and sum(c.odd_parts) == odd_sum
                assert len(c.parts) == 2 * r - 1


def test_odd_composition_validation():
    assert OddComposition((2, 1, 2)).word() == "aabaa"
    with pytest.raises(ValueError):
        OddComposition((1, 2))
    with pytest.raises(ValueError):
        OddComposition((1, 0, 1))


def test_geometry_points():
    g = OverlapGeometry(n=11, i=6, j=10, l1=4, l2=1, k=5)
    assert g.gamma_len == 5
    assert (g.a_l1, g.a_l2, g.a_k) == ((4, 1), (1, 4), (5, 5))
    assert g.k_prime - g.k == g.l1 - g.l2
    assert g.a_k_prime == (8, 2)
    assert g.e1 == (4, 2) and g.e2 == (5, 4)
    assert not g.flat
    with pytest.raises(ValueError):
        OverlapGeometry(n=11, i=6, j=10, l1=1, l2=4, k=5)


def test_triple_closed_worked_examples():
    first = OverlapGeometry.from_points((1, 4), (4, 1), (5, 5))
    assert triple_count_closed(first) == 7
    flat = OverlapGeometry.from_points((1, 4), (5, 0), (9, 4))
    assert flat.flat
    assert triple_count_closed(flat) == 15 == binomial(6, 4)


def test_composition_contributions():
    assert [composition_triple_count(p, 3, 1) for p in [(1, 1, 3), (3, 1, 1), (2, 1, 2)]] == [2, 2, 3]


def test_triple_closed_gamma3():
    # n=9, i=5 gives gamma=3 with j=7
    assert triple_count_closed(OverlapGeometry(9, 5, 7, 2, 0, 2)) == 1
    assert triple_count_closed(OverlapGeometry(9, 5, 7, 2, 0, 3)) == 1
    assert triple_count_closed(OverlapGeometry(9, 5, 7, 3, 0, 3)) == 1


def test_triple_closed_preconditions():
    with pytest.raises(ValueError):
        triple_count_closed(OverlapGeometry(9, 5, 6, 2, 0, 2))
    with pytest.raises(ValueError):
        triple_count_closed(OverlapGeometry(9, 5, 7, 1, 0, 2))


def test_small_gamma_rule():
    assert small_gamma_triple_count(OverlapGeometry(5, 3, 3, 1, 0, 1)) == 1
    assert small_gamma_triple_count(OverlapGeometry(6, 3, 5, 1, 0, 2)) == 0
    for g in (1, 2):
        for c in range(1, 6):
            n = c + g + 3
            i, j = n - c, c + g
            for l2 in range(c):
                for l1 in range(l2 + 1, c + 1):
                    for k in range(l1, l2 + g + 1):
                        geo = OverlapGeometry(n, i, j, l1, l2, k)
                        assert small_gamma_triple_count(geo) == triple_count_brute(geo.a_l2, geo.a_l1, geo.a_k)


def test_triple_brute_examples():
    assert triple_count_brute((1, 4), (4, 1), (5, 5)) == 7
    assert triple_count_brute((-2, 2), (0, 0), (0, 2)) == 1
    assert triple_count_brute((0, 0), (1, 0), (0, 3)) == 0
    with pytest.raises(ValueError):
        triple_count_brute((2, 0), (1, 0), (3, 3))


@pytest.mark.parametrize("a, b, c", [((0, 3), (2, 1), (3, 4)), ((1, 4), (4, 1), (5, 5)), ((-2, 2), (0, 0), (1, 3)),
                                     ((0, 2), (3, 0), (4, 3)), ((-3, 3), (0, 0), (1, 4))])
def test_triple_brute_dp_matches_full_enumeration(a, b, c):
    assert triple_count_brute(a, b, c) == triple_full_enumeration(a, b, c)


def small_geometries():
    for gamma in range(3, 9):
        for c in range(2, 9):
            n = c + gamma + 2
            i, j = n - c, c + gamma
            for l2 in range(c - 1):
                for l1 in range(l2 + 2, c + 1):
                    for k in range(l1, l2 + gamma + 1):
                        yield OverlapGeometry(n, i, j, l1, l2, k)


def test_triple_closed_matches_brute_on_grid():
    count = 0
    for geo in small_geometries():
        closed = triple_count_closed(geo)
        assert closed == triple_count_brute(geo.a_l2, geo.a_l1, geo.a_k), geo
        assert closed <= path_count(geo.a_l2, geo.a_k) * path_count(geo.a_l1, geo.a_k)
        count += 1
    assert count > 1000


def test_internal_point_sets_nonempty():
    # the closed form raises if any crossing line had no internal points
    lattice._triple_closed.cache_clear()
    for geo in small_geometries():
        triple_count_closed(geo)


@pytest.mark.parametrize("text, k, expected", [("ababaaabb", 4, True), ("ababaaabb", 3, False), ("ab", 1, False),
                                               ("ababaaabb", 5, True)])
def test_word_border_geometric(text, k, expected):
    assert word_has_abelian_border_k(text, k) is expected


def test_geometric_border_agrees_with_scan():
    for n in range(2, 11):
        for w in all_words(n):
            ks = [k for k in range(1, n) if word_has_abelian_border_k(w, k)]
            assert (ks[0] if ks else None) == shortest_abelian_border(w)
