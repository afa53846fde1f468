"""Pairs of operations tied by the identity a + (a . b) = a o b.

The pair identity is the single source of truth: each operation of a
pair determines the other, and the two single-operation worlds
(associative skew-distributive vs weakly-associative distributive)
translate back and forth losslessly through it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .axioms import (
    classify,
    has_local_right_identities,
    is_associative,
    is_left_distributive,
)
from .binops import BinOp, named_op
from .errors import (
    DefiningIdentityError,
    InternalCheckError,
    NotIdempotentError,
    NotSkewRingError,
    NotWeakRingError,
    PreconditionError,
    SizeMismatchError,
)
from .groups import (
    FiniteGroup,
    is_group_endo,
    is_idempotent,
    is_semidirect_pair,
    kernel_image,
)

__all__ = [
    "Diring",
    "make_diring",
    "skew_to_weak",
    "skew_to_weak_raw",
    "weak_to_skew",
    "weak_to_skew_raw",
    "roundtrip_check",
    "morphism_transport_check",
    "BraceWeakRingReport",
    "brace_weakring_correspondence",
    "diring_parts",
    "weakring_from_idempotent_endo",
    "ZeroSymmetricCensus",
    "check_zero_symmetric_uniqueness",
    "check_constant_monoid",
]


@dataclass(frozen=True)
class Diring:
    """A group with two tied operations; row index is the left argument."""

    group: FiniteGroup
    circ: BinOp
    dot: BinOp


def make_diring(G: FiniteGroup, circ: BinOp, dot: BinOp) -> Diring:
    """Validate the pair identity a + (a . b) = a o b cell by cell.

    Nothing else is checked here; axiom content is queried through
    classify/profile on the two operations.
    """
    if circ.n != G.n or dot.n != G.n:
        raise SizeMismatchError(
            f"operations on {circ.n} and {dot.n} elements vs group of order {G.n}"
        )
    for a in range(G.n):
        for b in range(G.n):
            if G.add(a, dot(a, b)) != circ(a, b):
                raise DefiningIdentityError(a, b)
    return Diring(group=G, circ=circ, dot=dot)


def skew_to_weak_raw(G: FiniteGroup, circ: BinOp) -> BinOp:
    """The unchecked table map (a, b) -> -a + (a o b)."""
    return BinOp.from_func(G.n, lambda a, b: G.add(G.neg(a), circ(a, b)))


def weak_to_skew_raw(G: FiniteGroup, dot: BinOp) -> BinOp:
    """The unchecked table map (a, b) -> a + (a . b)."""
    return BinOp.from_func(G.n, lambda a, b: G.add(a, dot(a, b)))


def skew_to_weak(G: FiniteGroup, circ: BinOp) -> BinOp:
    """Turn a verified skew ring into its weak ring partner.

    Requires (G, circ) associative and skew distributive; the image is
    guaranteed weakly associative and distributive, and that guarantee
    is re-checked.
    """
    if not classify(G, circ).left_skew_ring:
        raise NotSkewRingError("operation is not a left skew ring over this group")
    dot = skew_to_weak_raw(G, circ)
    if not classify(G, dot).left_weak_ring:
        raise InternalCheckError("image of a skew ring failed the weak ring test")
    return dot


def weak_to_skew(G: FiniteGroup, dot: BinOp) -> BinOp:
    """Turn a verified weak ring into its skew ring partner."""
    if not classify(G, dot).left_weak_ring:
        raise NotWeakRingError("operation is not a left weak ring over this group")
    circ = weak_to_skew_raw(G, dot)
    if not classify(G, circ).left_skew_ring:
        raise InternalCheckError("image of a weak ring failed the skew ring test")
    return circ


def roundtrip_check(G: FiniteGroup, f: BinOp, direction: str) -> bool:
    """Table equality after converting out and back.

    direction "skew-to-weak" starts from a circ table, "weak-to-skew"
    from a dot table.
    """
    if direction == "skew-to-weak":
        return weak_to_skew_raw(G, skew_to_weak_raw(G, f)) == f
    if direction == "weak-to-skew":
        return skew_to_weak_raw(G, weak_to_skew_raw(G, f)) == f
    raise PreconditionError(f"unknown direction {direction!r}")


def morphism_transport_check(
    G: FiniteGroup,
    H: FiniteGroup,
    f: Sequence[int],
    circ_g: BinOp,
    circ_h: BinOp,
) -> bool:
    """One map, two readings: circ-morphism iff dot-morphism.

    Computes independently whether f respects (+, o) and whether the
    same f respects (+, .) for the derived dot tables, and reports
    agreement of the two verdicts.
    """
    if len(f) != G.n or any(not 0 <= v < H.n for v in f):
        raise SizeMismatchError("map does not go from the first carrier to the second")

    respects_add = all(
        f[G.add(a, b)] == H.add(f[a], f[b]) for a in range(G.n) for b in range(G.n)
    )
    respects_circ = all(
        f[circ_g(a, b)] == circ_h(f[a], f[b]) for a in range(G.n) for b in range(G.n)
    )
    dot_g = skew_to_weak_raw(G, circ_g)
    dot_h = skew_to_weak_raw(H, circ_h)
    respects_dot = all(
        f[dot_g(a, b)] == dot_h(f[a], f[b]) for a in range(G.n) for b in range(G.n)
    )
    return (respects_add and respects_circ) == (respects_add and respects_dot)


@dataclass(frozen=True)
class BraceWeakRingReport:
    """Skew braces vs weak rings with local right identities on one group."""

    skew_ring_count: int
    brace_count: int
    weak_ring_with_lri_count: int
    elementwise_ok: bool

    @property
    def counts_match(self) -> bool:
        return self.brace_count == self.weak_ring_with_lri_count


def brace_weakring_correspondence(G: FiniteGroup, budget: int | None = None) -> BraceWeakRingReport:
    """Census over all skew rings on G.

    A skew ring is a brace exactly when its weak partner has local
    right identities; both sides of that equivalence are evaluated per
    table and compared elementwise.
    """
    from .search import SearchSpec, enumerate_binops

    kwargs = {} if budget is None else {"budget": budget}
    spec = SearchSpec(
        group=G, constraints=("associative", "left_skew_distributive"), **kwargs
    )
    result = enumerate_binops(spec)
    if not result.complete:
        raise InternalCheckError("skew ring enumeration did not complete within budget")

    braces = 0
    lri = 0
    elementwise = True
    for circ in result.tables:
        is_brace = classify(G, circ).left_skew_brace
        dot = skew_to_weak(G, circ)
        has_lri = has_local_right_identities(G, dot)
        braces += is_brace
        lri += has_lri
        if is_brace != has_lri:
            elementwise = False
    return BraceWeakRingReport(
        skew_ring_count=len(result.tables),
        brace_count=braces,
        weak_ring_with_lri_count=lri,
        elementwise_ok=elementwise,
    )


def diring_parts(D: Diring) -> tuple[frozenset[int], frozenset[int]]:
    """Zero-symmetric and constant part of a validated pair.

    Requires circ associative and dot distributive.  The parts are the
    kernel and image of the shared 0-row, must decompose the additive
    group, stay closed under both operations, and carry 0 as a zero and
    as an identity respectively.
    """
    G, circ, dot = D.group, D.circ, D.dot
    if not is_associative(G, circ):
        raise PreconditionError("circ is not associative")
    if not is_left_distributive(G, dot):
        raise PreconditionError("dot is not left distributive")

    row0 = tuple(dot(0, b) for b in range(G.n))
    zero_part = frozenset(b for b in range(G.n) if row0[b] == 0)
    const_part = frozenset(row0)
    if const_part != frozenset(b for b in range(G.n) if row0[b] == b):
        raise InternalCheckError("0-row image differs from its fixed points")
    if not is_semidirect_pair(G, zero_part, const_part):
        raise InternalCheckError("parts do not decompose the additive group")
    for part in (zero_part, const_part):
        for a in part:
            for b in part:
                if circ(a, b) not in part or dot(a, b) not in part:
                    raise InternalCheckError("part is not closed under the pair operations")
    if any(circ(0, a) != a or circ(a, 0) != a for a in const_part):
        raise InternalCheckError("0 is not a two-sided circ identity on the constant part")
    if any(dot(0, a) != 0 or dot(a, 0) != 0 for a in zero_part):
        raise InternalCheckError("0 is not a two-sided dot zero on the zero-symmetric part")
    return zero_part, const_part


def weakring_from_idempotent_endo(G: FiniteGroup, e: Sequence[int]) -> BinOp:
    """The table (a, b) -> e(b) for an idempotent endomorphism e.

    Always a weak ring; its parts are the kernel and image of e.  Both
    guarantees are re-checked.
    """
    if not is_group_endo(G, e):
        raise PreconditionError("map is not a group endomorphism")
    if not is_idempotent(e):
        raise NotIdempotentError("endomorphism is not idempotent")
    dot = BinOp.from_func(G.n, lambda a, b: e[b])
    if not classify(G, dot).left_weak_ring:
        raise InternalCheckError("endomorphism table failed the weak ring test")
    ker, img = kernel_image(G, e)
    circ = weak_to_skew_raw(G, dot)
    parts = diring_parts(make_diring(G, circ, dot))
    if parts != (ker, img):
        raise InternalCheckError("parts differ from kernel and image")
    return dot


@dataclass(frozen=True)
class ZeroSymmetricCensus:
    """All pairs with circ associative, dot distributive, zero row null."""

    pairs: tuple[tuple[BinOp, BinOp], ...]
    nodes_explored: int

    def unique_trivial_pair(self, G: FiniteGroup) -> bool:
        """True iff the only survivor is (left projection, null)."""
        expected = (named_op(G, "pi1"), named_op(G, "null"))
        return self.pairs == (expected,)


def check_zero_symmetric_uniqueness(
    G: FiniteGroup, budget: int | None = None, workers: int = 1
) -> ZeroSymmetricCensus:
    """Enumerate every zero-symmetric pair on G.

    Searches dot tables that are distributive, weakly associative and
    null on row 0, then attaches the circ partner.  The expected
    outcome is the single pair (left projection, null table).
    """
    from .search import SearchSpec, enumerate_dirings

    kwargs = {} if budget is None else {"budget": budget}
    spec = SearchSpec(
        group=G,
        constraints=("zero_symmetric",),
        workers=workers,
        **kwargs,
    )
    result = enumerate_dirings(spec)
    if not result.complete:
        raise InternalCheckError("zero-symmetric enumeration did not complete within budget")
    return ZeroSymmetricCensus(pairs=tuple(result.pairs), nodes_explored=result.nodes_explored)


def check_constant_monoid(D: Diring) -> bool:
    """For a pair that is all constant part: is 0 a two-sided circ identity?

    Requires circ associative, dot distributive, and constant part equal
    to the whole carrier.
    """
    G, circ, dot = D.group, D.circ, D.dot
    if not is_associative(G, circ):
        raise PreconditionError("circ is not associative")
    if not is_left_distributive(G, dot):
        raise PreconditionError("dot is not left distributive")
    if any(dot(0, b) != b for b in range(G.n)):
        raise PreconditionError("constant part is not the whole carrier")
    return all(circ(0, a) == a and circ(a, 0) == a for a in range(G.n))
