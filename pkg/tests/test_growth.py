"""Growth exponents: naive, refined, conjectural, and the dominant bound."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from upqgrowth.cohomology import GlobalRep, LocalRep
from upqgrowth.growth import (
    GrowthValue,
    all_groupings,
    brute_force_bound,
    conjectural_bound,
    grouped_blocks,
    naive_bound,
    partition_bound,
    partition_bound0,
    refined_bound,
    rep_bound,
)
from upqgrowth.infchar import rho
from upqgrowth.partitions import partitions_of


# --- the value type ----------------------------------------------------------


def test_growth_value_order():
    assert GrowthValue(3) < GrowthValue(4)
    assert GrowthValue(3) < GrowthValue(3, 1)
    assert GrowthValue(3, 5) < GrowthValue(4, -5)
    assert GrowthValue(Fraction(7, 2)) == GrowthValue(Fraction(14, 4))


@given(
    st.integers(-20, 20),
    st.integers(-3, 3),
    st.integers(-20, 20),
    st.integers(-3, 3),
)
def test_growth_value_order_is_lexicographic(a, i, b, j):
    assert (GrowthValue(a, i) < GrowthValue(b, j)) == ((a, i) < (b, j))


def test_growth_value_arithmetic():
    v = GrowthValue(Fraction(5, 2), 1)
    assert v + GrowthValue(Fraction(1, 2), 2) == GrowthValue(3, 3)
    assert v - GrowthValue(1, 1) == GrowthValue(Fraction(3, 2))
    assert v + 3 == GrowthValue(Fraction(11, 2), 1)
    assert v - Fraction(1, 2) == GrowthValue(2, 1)


def test_growth_value_str():
    assert str(GrowthValue(21)) == "21"
    assert str(GrowthValue(22, 2)) == "22+2*eps"
    assert str(GrowthValue(5, -1)) == "5-eps"
    assert str(GrowthValue(Fraction(7, 2), 1)) == "7/2+eps"


def test_growth_value_json():
    v = GrowthValue(Fraction(9, 4), -2)
    assert v.to_json() == {"main": "9/4", "eps": -2}
    assert GrowthValue.from_json(v.to_json()) == v


# --- the three bounds on fixed block lists ------------------------------------


def test_frozen_block_values():
    assert naive_bound(((2, 2),)) == GrowthValue(12)
    assert refined_bound(((2, 2),)) == GrowthValue(9)
    assert conjectural_bound(((2, 2),)) == GrowthValue(7)
    assert refined_bound(((3, 2),)) == GrowthValue(22, 2)
    assert refined_bound(((3, 3),)) == GrowthValue(44, 3)
    assert refined_bound(((1, 5),)) == GrowthValue(1)


def test_bounds_match_oracle_on_all_groupings():
    for n in range(1, 11):
        for parts in partitions_of(n):
            for g in all_groupings(parts):
                assert naive_bound(g) == GrowthValue(oracles.naive_value(g))
                rm, re = oracles.refined_value(g)
                assert refined_bound(g) == GrowthValue(rm, re)
                cm, ce = oracles.conjectural_value(g)
                assert conjectural_bound(g) == GrowthValue(cm, ce)


def test_bounds_accept_shapes():
    from upqgrowth.shapes import delta_max

    rep = LocalRep(p=6, q=1, blocks=((2, 1),) + ((1, 0),) * 4, lam=rho(7))
    s = delta_max(GlobalRep((rep,)))[0]
    assert refined_bound(s) == GrowthValue(29)
    assert refined_bound(s) == refined_bound(((1, 3), (4, 1)))


# --- partition bounds ---------------------------------------------------------


def test_grouped_blocks():
    assert grouped_blocks((3, 2, 2, 1, 1, 1)) == ((1, 3), (2, 2), (3, 1))
    assert grouped_blocks((4,)) == ((1, 4),)
    # input order is immaterial; zero parts are not
    assert grouped_blocks((2, 3)) == ((1, 3), (1, 2))
    with pytest.raises(ValueError):
        grouped_blocks((2, 0))


def test_frozen_partition_bounds():
    assert partition_bound((2, 2)) == GrowthValue(9)
    assert partition_bound((2, 1, 1)) == GrowthValue(9)
    assert partition_bound((7,)) == GrowthValue(1)
    assert partition_bound((1,) * 7) == GrowthValue(49)
    assert partition_bound((3, 1, 1, 1, 1)) == GrowthValue(29)
    assert partition_bound((2, 1, 1, 1, 1, 1)) == GrowthValue(36)
    assert partition_bound0((2, 2)) == GrowthValue(7)
    assert partition_bound0((2, 1, 1)) == GrowthValue(9)


def test_tie_pair():
    # both rank-7 types score 22: the hook gains exactly what the fat tail loses
    assert partition_bound((3, 2, 2)) == GrowthValue(22)
    assert partition_bound((3, 2, 1, 1)) == GrowthValue(22)


def test_closed_forms():
    for n in range(1, 13):
        assert partition_bound((n,)) == GrowthValue(1)
        assert partition_bound((1,) * n) == GrowthValue(n * n)
        for d in range(2, n + 1):
            parts = (d,) + (1,) * (n - d)
            assert partition_bound(parts) == GrowthValue(n * (n - d) + 1)


def test_full_grouping_is_optimal():
    for n in range(1, 13):
        for parts in partitions_of(n):
            assert brute_force_bound(parts) == partition_bound(parts)


def test_brute_force_rank_guard():
    with pytest.raises(ValueError):
        brute_force_bound((8, 8))


def test_all_groupings_counts():
    assert len(list(all_groupings((2, 2, 1)))) == 2
    assert len(list(all_groupings((1, 1, 1)))) == 3
    assert list(all_groupings((3,))) == [((1, 3),)]


# --- the GSK family ----------------------------------------------------------


def _gsk_block_lists(max_rank):
    from itertools import combinations

    for t1 in range(1, 7):
        for k_extra in range(0, 4):
            for ds in combinations(range(2, 10), k_extra):
                pairs = ((t1, 1),) + tuple((1, d) for d in ds)
                if sum(t * d for t, d in pairs) <= max_rank:
                    yield pairs


def test_gsk_closed_form():
    from upqgrowth.shapes import is_gsk

    for pairs in _gsk_block_lists(20):
        assert is_gsk(pairs)
        k = len(pairs)
        t1 = pairs[0][0]
        n = sum(t * d for t, d in pairs)
        expect = GrowthValue(
            (k - 1)
            + Fraction(
                n * n + t1 * t1 - sum(d * d for _, d in pairs[1:]), 2
            )
        )
        assert refined_bound(pairs) == expect
        assert conjectural_bound(pairs) == expect


# --- dominant bound over a representation ------------------------------------


def test_rep_bound_single_place():
    rho7 = rho(7)
    r1 = LocalRep(p=6, q=1, blocks=((1, 1),) + ((1, 0),) * 5, lam=rho7)
    assert rep_bound(GlobalRep((r1,))) == (
        GrowthValue(36),
        (2, 1, 1, 1, 1, 1),
    )
    r2 = LocalRep(p=6, q=1, blocks=((2, 1),) + ((1, 0),) * 4, lam=rho7)
    assert rep_bound(GlobalRep((r2,))) == (GrowthValue(29), (3, 1, 1, 1, 1))


def test_rep_bound_tie_prefers_lex_smallest():
    rho7 = rho(7)
    r1 = LocalRep(p=6, q=1, blocks=((1, 1),) + ((1, 0),) * 5, lam=rho7)
    r2 = LocalRep(p=6, q=1, blocks=((2, 1),) + ((1, 0),) * 4, lam=rho7)
    g = GlobalRep((r1, r2))
    val, q = rep_bound(g)
    assert val == GrowthValue(22)
    assert q == (3, 2, 1, 1)
    from upqgrowth.shapes import q_can

    assert q == q_can(g)


def test_rep_bound_dominates_every_candidate():
    from upqgrowth.shapes import sl2_candidates

    rho7 = rho(7)
    r2 = LocalRep(p=6, q=1, blocks=((2, 1),) + ((1, 0),) * 4, lam=rho7)
    g = GlobalRep((r2,))
    best, _ = rep_bound(g)
    for q in sl2_candidates(g):
        assert partition_bound(q) <= best
