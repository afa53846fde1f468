"""Backtracking enumeration against the filter-all oracle."""

import pytest

from dirings.axioms import classify, profile
from dirings.binops import all_binops, named_op
from dirings.errors import InputFormatError, UnsupportedOrderError
from dirings.search import (
    SEARCH_CONSTRAINTS,
    STRUCTURE_KINDS,
    SearchSpec,
    count_structures,
    dedup_up_to_aut,
    enumerate_binops,
    enumerate_dirings,
)

CONSTRAINT_PREDICATES = {
    "associative": lambda p, c: p.associative,
    "left_distributive": lambda p, c: p.left_distributive,
    "left_skew_distributive": lambda p, c: p.left_skew_distributive,
    "weakly_associative": lambda p, c: p.weakly_associative,
    "group_with_zero_identity": lambda p, c: c.digroup,
    "zero_symmetric": lambda p, c: c.zero_symmetric,
}


def filter_all(G, constraints):
    out = []
    for f in all_binops(G):
        p = profile(G, f)
        c = classify(G, f)
        if all(CONSTRAINT_PREDICATES[name](p, c) for name in constraints):
            out.append(f)
    return out


# ------------------------------------------------------------ single ops

def test_unconstrained_search_is_everything(c2):
    result = enumerate_binops(SearchSpec(group=c2, constraints=()))
    assert [f.flat() for f in result.tables] == [f.flat() for f in all_binops(c2)]
    assert result.complete


def test_single_constraint_counts_on_c3(c3):
    expected = {
        "associative": 113,
        "left_distributive": 27,
        "left_skew_distributive": 27,
        "weakly_associative": 15,
    }
    for name, count in expected.items():
        result = enumerate_binops(SearchSpec(group=c3, constraints=(name,)))
        assert len(result.tables) == count, name
        assert result.complete


def test_search_equals_filter_all_per_constraint(c2, c3):
    for G in (c2, c3):
        for name in SEARCH_CONSTRAINTS:
            got = enumerate_binops(SearchSpec(group=G, constraints=(name,)))
            want = filter_all(G, (name,))
            assert [f.flat() for f in got.tables] == [f.flat() for f in want], name


def test_group_constraint_on_c2_finds_only_xor(c2):
    result = enumerate_binops(
        SearchSpec(group=c2, constraints=("group_with_zero_identity",)))
    assert len(result.tables) == 1
    assert result.tables[0].rows == ((0, 1), (1, 0))


def test_combined_constraint_counts(c2, c3):
    combos = {
        (c2, ("associative", "left_distributive")): 3,
        (c2, ("associative", "left_skew_distributive")): 3,
        (c2, ("left_distributive", "weakly_associative")): 3,
        (c3, ("associative", "left_distributive")): 7,
        (c3, ("associative", "left_skew_distributive")): 5,
        (c3, ("left_distributive", "weakly_associative")): 5,
    }
    for (G, constraints), count in combos.items():
        result = enumerate_binops(SearchSpec(group=G, constraints=constraints))
        assert len(result.tables) == count, constraints


def test_unknown_constraint_rejected(c2):
    with pytest.raises(InputFormatError):
        enumerate_binops(SearchSpec(group=c2, constraints=("bogus",)))


def test_order_guard(d4):
    with pytest.raises(UnsupportedOrderError):
        enumerate_binops(SearchSpec(group=d4, constraints=()))


# ------------------------------------------------------------- truncation

def test_budget_truncation_is_explicit(c3):
    result = enumerate_binops(
        SearchSpec(group=c3, constraints=("associative",), budget=5))
    assert not result.complete
    assert result.tables == ()
    assert result.nodes_explored == 5


def test_budget_exactly_sufficient_is_complete(c3):
    full = enumerate_binops(SearchSpec(group=c3, constraints=("associative",)))
    again = enumerate_binops(SearchSpec(
        group=c3, constraints=("associative",), budget=full.nodes_explored))
    assert again.complete
    assert again.tables == full.tables


# ---------------------------------------------------------------- workers

def test_worker_count_does_not_change_results(c3):
    specs = [
        SearchSpec(group=c3, constraints=("associative",), workers=w)
        for w in (1, 2, 3)
    ]
    results = [enumerate_binops(s) for s in specs]
    assert results[0].tables == results[1].tables == results[2].tables
    assert results[0].nodes_explored == results[1].nodes_explored == results[2].nodes_explored
    assert all(r.complete for r in results)


def test_worker_count_does_not_change_pairs(c3):
    one = enumerate_dirings(SearchSpec(group=c3, constraints=(), workers=1))
    two = enumerate_dirings(SearchSpec(group=c3, constraints=(), workers=2))
    assert one.pairs == two.pairs


# ------------------------------------------------------------------ pairs

def test_pair_enumeration_counts(c2, c3):
    assert len(enumerate_dirings(SearchSpec(group=c2, constraints=())).pairs) == 3
    assert len(enumerate_dirings(SearchSpec(group=c3, constraints=())).pairs) == 5


def test_pair_difference_identity_holds(c3):
    from dirings.binops import op_sub

    pi1 = named_op(c3, "pi1")
    result = enumerate_dirings(SearchSpec(group=c3, constraints=()))
    for circ, dot in result.pairs:
        assert op_sub(c3, circ, dot) == pi1


def test_zero_symmetric_pair_search(c2, c3):
    for G in (c2, c3):
        result = enumerate_dirings(
            SearchSpec(group=G, constraints=("zero_symmetric",)))
        assert len(result.pairs) == 1
        circ, dot = result.pairs[0]
        assert circ == named_op(G, "pi1")
        assert dot == named_op(G, "null")


# ------------------------------------------------------------------ dedup

def test_dedup_up_to_aut_on_c3_semigroups(c3):
    labeled = enumerate_binops(SearchSpec(group=c3, constraints=("associative",)))
    reduced = enumerate_binops(SearchSpec(
        group=c3, constraints=("associative",), dedup="up_to_aut"))
    assert len(labeled.tables) == 113
    assert len(reduced.tables) == 61
    assert dedup_up_to_aut(c3, labeled.tables) == reduced.tables


def test_dedup_representatives_are_orbit_minima(c3):
    from dirings.groups import group_automorphisms
    from dirings.binops import BinOp

    reduced = enumerate_binops(SearchSpec(
        group=c3, constraints=("associative",), dedup="up_to_aut"))
    auts = group_automorphisms(c3)
    for f in reduced.tables:
        orbit = []
        for sigma in auts:
            inv = [0] * 3
            for a, v in enumerate(sigma):
                inv[v] = a
            g = BinOp.from_func(3, lambda a, b: sigma[f(inv[a], inv[b])])
            orbit.append(g.flat())
        assert f.flat() == min(orbit)


# ------------------------------------------------------- structure counts

def test_count_structures_matches_frozen_values(c2, c3):
    expected = {
        (2, "left_near_ring"): 3,
        (2, "left_skew_ring"): 3,
        (2, "left_weak_ring"): 3,
        (2, "digroup"): 1,
        (2, "left_skew_brace"): 1,
        (3, "left_near_ring"): 7,
        (3, "left_skew_ring"): 5,
        (3, "left_weak_ring"): 5,
        (3, "digroup"): 1,
        (3, "left_skew_brace"): 1,
    }
    for G in (c2, c3):
        for kind in STRUCTURE_KINDS:
            count, result = count_structures(G, kind)
            assert count == expected[(G.n, kind)], (G.n, kind)
            assert result.complete


def test_count_structures_guards(c2, c5):
    with pytest.raises(InputFormatError):
        count_structures(c2, "bogus_kind")
    with pytest.raises(UnsupportedOrderError):
        count_structures(c5, "digroup")
