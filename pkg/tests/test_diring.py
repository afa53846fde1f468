"""Skew/weak translations, pair structures, correspondences, censuses."""

import pytest

from dirings.axioms import classify, is_left_distributive, is_weakly_associative
from dirings.binops import all_binops, named_op, op_sub
from dirings.diring import (
    brace_weakring_correspondence,
    check_constant_monoid,
    check_zero_symmetric_uniqueness,
    diring_parts,
    make_diring,
    morphism_transport_check,
    roundtrip_check,
    skew_to_weak,
    skew_to_weak_raw,
    weak_to_skew,
    weak_to_skew_raw,
    weakring_from_idempotent_endo,
)
from dirings.errors import (
    DefiningIdentityError,
    NotIdempotentError,
    NotSkewRingError,
    NotWeakRingError,
)
from dirings.groups import group_endomorphisms, is_idempotent, kernel_image


# -------------------------------------------------------------- named pairs

def test_named_translations(c4, s3):
    for G in (c4, s3):
        assert skew_to_weak(G, named_op(G, "plus")) == named_op(G, "pi2")
        assert skew_to_weak(G, named_op(G, "plus_op")) == named_op(G, "conj")
        assert skew_to_weak(G, named_op(G, "pi1")) == named_op(G, "null")
        assert weak_to_skew(G, named_op(G, "pi2")) == named_op(G, "plus")
        assert weak_to_skew(G, named_op(G, "conj")) == named_op(G, "plus_op")
        assert weak_to_skew(G, named_op(G, "null")) == named_op(G, "pi1")


def test_checked_translations_enforce_structure(c4):
    # pi2 is a weak-ring operation, not a skew-ring one, and plus is the
    # reverse
    with pytest.raises(NotSkewRingError):
        skew_to_weak(c4, named_op(c4, "pi2"))
    with pytest.raises(NotWeakRingError):
        weak_to_skew(c4, named_op(c4, "plus"))


def test_roundtrip_on_all_c2_structures(c2):
    for f in all_binops(c2):
        cls = classify(c2, f)
        if cls.left_skew_ring:
            assert roundtrip_check(c2, f, "skew-to-weak")
        if cls.left_weak_ring:
            assert roundtrip_check(c2, f, "weak-to-skew")


# ------------------------------------------------------------------- pairs

def test_make_diring_from_decompositions(c4, s3):
    for G in (c4, s3):
        pi1 = named_op(G, "pi1")
        for circ_name, dot_name in (("pi1", "null"), ("plus", "pi2"), ("plus_op", "conj")):
            circ = named_op(G, circ_name)
            dot = named_op(G, dot_name)
            D = make_diring(G, circ, dot)
            assert op_sub(G, D.circ, D.dot) == pi1


def test_make_diring_rejects_wrong_difference(c4):
    with pytest.raises(DefiningIdentityError):
        make_diring(c4, named_op(c4, "pi1"), named_op(c4, "pi2"))


def test_diring_parts_of_decompositions(c4, s3):
    for G in (c4, s3):
        everything = frozenset(G.elements())
        only_zero = frozenset({0})
        expected = {
            ("pi1", "null"): (everything, only_zero),
            ("plus", "pi2"): (only_zero, everything),
            ("plus_op", "conj"): (only_zero, everything),
        }
        for (circ_name, dot_name), parts in expected.items():
            D = make_diring(G, named_op(G, circ_name), named_op(G, dot_name))
            assert diring_parts(D) == parts


def test_constant_monoid(c4, s3):
    for G in (c4, s3):
        for circ_name, dot_name in (("plus", "pi2"), ("plus_op", "conj")):
            D = make_diring(G, named_op(G, circ_name), named_op(G, dot_name))
            assert check_constant_monoid(D)


# ------------------------------------------------------- morphism transport

def test_morphism_transport(c3, c4, s3):
    # endomorphisms of the skew side transport to the weak side unchanged
    for G in (c3, c4, s3):
        circ = named_op(G, "plus")
        for e in group_endomorphisms(G):
            assert morphism_transport_check(G, G, e, circ, circ)


# ------------------------------------------------------- brace / weak ring

def test_brace_weakring_correspondence_counts(c2, c3):
    r2 = brace_weakring_correspondence(c2)
    assert r2.skew_ring_count == 3
    assert r2.brace_count == 1
    assert r2.weak_ring_with_lri_count == 1
    assert r2.elementwise_ok

    r3 = brace_weakring_correspondence(c3)
    assert r3.skew_ring_count == 5
    assert r3.brace_count == 1
    assert r3.weak_ring_with_lri_count == 1
    assert r3.elementwise_ok


# ----------------------------------------------------- uniqueness censuses

def test_zero_symmetric_uniqueness_on_tiny_groups(c2, c3):
    for G in (c2, c3):
        census = check_zero_symmetric_uniqueness(G)
        assert len(census.pairs) == 1
        circ, dot = census.pairs[0]
        assert circ == named_op(G, "pi1")
        assert dot == named_op(G, "null")
        assert census.nodes_explored > 0


# ---------------------------------------------- idempotent-endo weak rings

def test_weakring_from_idempotent_endo(c4, klein4, s3):
    for G in (c4, klein4, s3):
        idempotents = [e for e in group_endomorphisms(G) if is_idempotent(e)]
        assert len(idempotents) >= 2
        for e in idempotents:
            dot = weakring_from_idempotent_endo(G, e)
            # a . b = e(b)
            assert all(dot(a, b) == e[b] for a in G.elements() for b in G.elements())
            assert is_left_distributive(G, dot)
            assert is_weakly_associative(G, dot)
            cls = classify(G, dot)
            assert cls.left_weak_ring


def test_weakring_from_endo_counts(c4, klein4, s3):
    counts = {}
    for G, label in ((c4, "c4"), (klein4, "klein4"), (s3, "s3")):
        counts[label] = sum(1 for e in group_endomorphisms(G) if is_idempotent(e))
    assert counts == {"c4": 2, "klein4": 8, "s3": 5}


def test_weakring_from_endo_rejects_non_idempotent(c4):
    with pytest.raises(NotIdempotentError):
        weakring_from_idempotent_endo(c4, (0, 3, 2, 1))


def test_weakring_parts_are_kernel_and_image(s3):
    from dirings.axioms import structure_parts

    for e in group_endomorphisms(s3):
        if not is_idempotent(e):
            continue
        dot = weakring_from_idempotent_endo(s3, e)
        ker, im = kernel_image(s3, e)
        assert structure_parts(s3, dot) == (ker, im)
