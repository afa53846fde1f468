"""Axiom predicates for a binary operation over a finite group.

Every predicate scans triples in lexicographic order and reports the
first counterexample, so failures are reproducible witnesses rather
than bare booleans.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .binops import BinOp
from .errors import (
    InternalCheckError,
    NotSkewRingError,
    PreconditionError,
    SizeMismatchError,
)
from .groups import EndoTable, FiniteGroup, is_group_endo, is_semidirect_pair

__all__ = [
    "associativity_witness",
    "left_distributivity_witness",
    "right_distributivity_witness",
    "left_skew_distributivity_witness",
    "weak_associativity_witness",
    "commutativity_witness",
    "is_associative",
    "is_left_distributive",
    "is_right_distributive",
    "is_left_skew_distributive",
    "is_weakly_associative",
    "is_commutative",
    "AxiomProfile",
    "profile",
    "lambda_map",
    "mu_map",
    "StructureClass",
    "classify",
    "classify_dot",
    "SkewRingLawsReport",
    "check_skew_ring_laws",
    "zero_symmetric_part",
    "constant_part",
    "structure_parts",
    "has_local_right_identities",
    "nearring_ideal_check",
    "skewring_ideal_check",
]

Witness = tuple[int, ...]


def _guard(G: FiniteGroup, f: BinOp) -> None:
    if f.n != G.n:
        raise SizeMismatchError(f"operation on {f.n} elements vs group of order {G.n}")


def associativity_witness(G: FiniteGroup, f: BinOp) -> Witness | None:
    """First (a, b, c) with a(bc) != (ab)c, or None."""
    _guard(G, f)
    r = f.rows
    for a in range(G.n):
        for b in range(G.n):
            ab = r[a][b]
            for c in range(G.n):
                if r[a][r[b][c]] != r[ab][c]:
                    return (a, b, c)
    return None


def left_distributivity_witness(G: FiniteGroup, f: BinOp) -> Witness | None:
    """First (a, b, c) with a(b+c) != ab + ac, or None."""
    _guard(G, f)
    r, add = f.rows, G.table
    for a in range(G.n):
        ra = r[a]
        for b in range(G.n):
            for c in range(G.n):
                if ra[add[b][c]] != add[ra[b]][ra[c]]:
                    return (a, b, c)
    return None


def right_distributivity_witness(G: FiniteGroup, f: BinOp) -> Witness | None:
    """First (a, b, c) with (a+b)c != ac + bc, or None."""
    _guard(G, f)
    r, add = f.rows, G.table
    for a in range(G.n):
        for b in range(G.n):
            ab = add[a][b]
            for c in range(G.n):
                if r[ab][c] != add[r[a][c]][r[b][c]]:
                    return (a, b, c)
    return None


def left_skew_distributivity_witness(G: FiniteGroup, f: BinOp) -> Witness | None:
    """First (a, b, c) with a(b+c) != ab - a + ac, or None."""
    _guard(G, f)
    r, add, neg = f.rows, G.table, G.neg_table
    for a in range(G.n):
        ra = r[a]
        na = neg[a]
        for b in range(G.n):
            for c in range(G.n):
                if ra[add[b][c]] != add[add[ra[b]][na]][ra[c]]:
                    return (a, b, c)
    return None


def weak_associativity_witness(G: FiniteGroup, f: BinOp) -> Witness | None:
    """First (a, b, c) with (a + ab)c != a(bc), or None."""
    _guard(G, f)
    r, add = f.rows, G.table
    for a in range(G.n):
        ra = r[a]
        for b in range(G.n):
            left_arg = add[a][ra[b]]
            for c in range(G.n):
                if r[left_arg][c] != ra[r[b][c]]:
                    return (a, b, c)
    return None


def commutativity_witness(G: FiniteGroup, f: BinOp) -> Witness | None:
    """First (a, b) with ab != ba, or None."""
    _guard(G, f)
    r = f.rows
    for a in range(G.n):
        for b in range(G.n):
            if r[a][b] != r[b][a]:
                return (a, b)
    return None


def is_associative(G: FiniteGroup, f: BinOp) -> bool:
    return associativity_witness(G, f) is None


def is_left_distributive(G: FiniteGroup, f: BinOp) -> bool:
    return left_distributivity_witness(G, f) is None


def is_right_distributive(G: FiniteGroup, f: BinOp) -> bool:
    return right_distributivity_witness(G, f) is None


def is_left_skew_distributive(G: FiniteGroup, f: BinOp) -> bool:
    return left_skew_distributivity_witness(G, f) is None


def is_weakly_associative(G: FiniteGroup, f: BinOp) -> bool:
    return weak_associativity_witness(G, f) is None


def is_commutative(G: FiniteGroup, f: BinOp) -> bool:
    return commutativity_witness(G, f) is None


_PROFILE_AXIOMS = (
    ("associative", associativity_witness),
    ("commutative", commutativity_witness),
    ("left_distributive", left_distributivity_witness),
    ("right_distributive", right_distributivity_witness),
    ("left_skew_distributive", left_skew_distributivity_witness),
    ("weakly_associative", weak_associativity_witness),
)


@dataclass(frozen=True)
class AxiomProfile:
    """Six axiom flags for one operation, with a witness per failure."""

    associative: bool
    commutative: bool
    left_distributive: bool
    right_distributive: bool
    left_skew_distributive: bool
    weakly_associative: bool
    witnesses: Mapping[str, Witness] = field(default_factory=dict)

    def flags(self) -> dict[str, bool]:
        return {name: getattr(self, name) for name, _ in _PROFILE_AXIOMS}


def profile(G: FiniteGroup, f: BinOp) -> AxiomProfile:
    """Evaluate all six axioms on f.  On the trivial group all hold."""
    flags: dict[str, bool] = {}
    witnesses: dict[str, Witness] = {}
    for name, check in _PROFILE_AXIOMS:
        w = check(G, f)
        flags[name] = w is None
        if w is not None:
            witnesses[name] = w
    return AxiomProfile(witnesses=witnesses, **flags)


def lambda_map(G: FiniteGroup, circ: BinOp, a: int) -> EndoTable:
    """The self-map b -> -a + (a o b); an endomorphism exactly when the
    skew distributive law holds at a."""
    _guard(G, circ)
    na = G.neg(a)
    return tuple(G.add(na, circ(a, b)) for b in range(G.n))


def mu_map(G: FiniteGroup, dot: BinOp, a: int) -> EndoTable:
    """The self-map b -> a . b; an endomorphism exactly when the left
    distributive law holds at a."""
    _guard(G, dot)
    return tuple(dot(a, b) for b in range(G.n))


@dataclass(frozen=True)
class StructureClass:
    """Which structure kinds one operation over the group realizes."""

    left_near_ring: bool
    left_skew_ring: bool
    left_weak_ring: bool
    digroup: bool
    left_skew_brace: bool
    zero_symmetric: bool
    group_with_shifted_identity: bool

    def flags(self) -> dict[str, bool]:
        return {
            "left_near_ring": self.left_near_ring,
            "left_skew_ring": self.left_skew_ring,
            "left_weak_ring": self.left_weak_ring,
            "digroup": self.digroup,
            "left_skew_brace": self.left_skew_brace,
            "zero_symmetric": self.zero_symmetric,
            "group_with_shifted_identity": self.group_with_shifted_identity,
        }


def _group_identity_of(G: FiniteGroup, f: BinOp) -> int | None:
    for e in range(G.n):
        if all(f(e, a) == a and f(a, e) == a for a in range(G.n)):
            return e
    return None


def _is_group_on_carrier(G: FiniteGroup, f: BinOp, identity: int) -> bool:
    if associativity_witness(G, f) is not None:
        return False
    return all(any(f(a, b) == identity and f(b, a) == identity for b in range(G.n)) for a in range(G.n))


def classify(G: FiniteGroup, f: BinOp) -> StructureClass:
    """Classify f against all structure kinds at once.

    A second group structure whose identity is not the additive 0 is
    reported separately and does not count as a digroup.
    """
    p = profile(G, f)
    ident = _group_identity_of(G, f)
    is_second_group = ident is not None and _is_group_on_carrier(G, f, ident)
    digroup = is_second_group and ident == 0
    shifted = is_second_group and ident != 0
    return StructureClass(
        left_near_ring=p.associative and p.left_distributive,
        left_skew_ring=p.associative and p.left_skew_distributive,
        left_weak_ring=p.weakly_associative and p.left_distributive,
        digroup=digroup,
        left_skew_brace=digroup and p.left_skew_distributive,
        zero_symmetric=all(f(0, a) == 0 for a in range(G.n)),
        group_with_shifted_identity=shifted,
    )


# the dot-side vocabulary is the same computation; kept for call sites
# that classify the difference operation of a pair
classify_dot = classify


@dataclass(frozen=True)
class SkewRingLawsReport:
    """Derived laws of an associative skew-distributive operation."""

    zero_right_identity: bool
    lambda_maps_are_endos: bool
    lambda_respects_product: bool
    lambda_endo_iff_skew_distributive: bool
    failure: tuple | None

    @property
    def ok(self) -> bool:
        return (
            self.zero_right_identity
            and self.lambda_maps_are_endos
            and self.lambda_respects_product
            and self.lambda_endo_iff_skew_distributive
        )


def check_skew_ring_laws(G: FiniteGroup, circ: BinOp) -> SkewRingLawsReport:
    """Verify the derived laws of a skew ring on every element.

    Requires (G, circ) to classify as a left skew ring.  Checks that 0
    is a right identity, that every translate b -> -a + (a o b) is a
    group endomorphism, and that these translates compose along the
    product.  The converse route (associativity plus endomorphism
    translates forcing the skew law) is recomputed independently.
    """
    cls = classify(G, circ)
    if not cls.left_skew_ring:
        raise NotSkewRingError("operation is not a left skew ring over this group")

    failure: tuple | None = None

    right_id = all(circ(a, 0) == a for a in range(G.n))
    if not right_id:
        failure = ("zero_right_identity", next(a for a in range(G.n) if circ(a, 0) != a))

    lambdas = [lambda_map(G, circ, a) for a in range(G.n)]
    endos = all(is_group_endo(G, lam) for lam in lambdas)
    if not endos and failure is None:
        failure = ("lambda_endo", next(a for a, lam in enumerate(lambdas) if not is_group_endo(G, lam)))

    respects = True
    for a in range(G.n):
        for b in range(G.n):
            composed = tuple(lambdas[a][lambdas[b][x]] for x in range(G.n))
            if lambdas[circ(a, b)] != composed:
                respects = False
                if failure is None:
                    failure = ("lambda_product", a, b)
                break
        if not respects:
            break

    # independent of the skew-ring precondition: per element a, the
    # translate is an endomorphism iff the skew law holds at a
    iff_ok = True
    add, neg = G.table, G.neg_table
    for a in range(G.n):
        lam_endo = is_group_endo(G, lambdas[a])
        skew_at_a = all(
            circ(a, add[b][c]) == add[add[circ(a, b)][neg[a]]][circ(a, c)]
            for b in range(G.n)
            for c in range(G.n)
        )
        if lam_endo != skew_at_a:
            iff_ok = False
            if failure is None:
                failure = ("lambda_endo_iff_skew", a)
            break

    return SkewRingLawsReport(
        zero_right_identity=right_id,
        lambda_maps_are_endos=endos,
        lambda_respects_product=respects,
        lambda_endo_iff_skew_distributive=iff_ok,
        failure=failure,
    )


def zero_symmetric_part(G: FiniteGroup, f: BinOp) -> frozenset[int]:
    """Elements a with f(0, a) = 0."""
    _guard(G, f)
    return frozenset(a for a in range(G.n) if f(0, a) == 0)


def constant_part(G: FiniteGroup, f: BinOp) -> frozenset[int]:
    """Elements a with f(0, a) = a."""
    _guard(G, f)
    return frozenset(a for a in range(G.n) if f(0, a) == a)


def structure_parts(G: FiniteGroup, f: BinOp) -> tuple[frozenset[int], frozenset[int]]:
    """The zero-symmetric and constant parts cut out by the 0-row map.

    When the 0-row b -> f(0, b) is an idempotent group endomorphism the
    two parts are its kernel and image and must decompose the additive
    group; that decomposition is asserted here.
    """
    zero_part = zero_symmetric_part(G, f)
    const_part = constant_part(G, f)
    row0 = tuple(f(0, b) for b in range(G.n))
    if is_group_endo(G, row0) and all(row0[row0[b]] == row0[b] for b in range(G.n)):
        if not is_semidirect_pair(G, zero_part, const_part):
            raise InternalCheckError("idempotent 0-row without the expected group decomposition")
    return zero_part, const_part


def has_local_right_identities(G: FiniteGroup, dot: BinOp) -> bool:
    """True iff every a admits some e with a . e = a.

    Requires (G, dot) to classify as a left weak ring.
    """
    if not classify(G, dot).left_weak_ring:
        raise PreconditionError("operation is not a left weak ring over this group")
    return all(any(dot(a, e) == a for e in range(G.n)) for a in range(G.n))


def _is_normal(G: FiniteGroup, s: frozenset[int]) -> bool:
    from .groups import is_normal_subgroup

    return is_normal_subgroup(G, s)


def nearring_ideal_check(G: FiniteGroup, dot: BinOp, A: frozenset[int] | set[int]) -> bool:
    """Ideal test for an associative left-distributive operation.

    A must be a normal additive subgroup absorbing products from the
    left and translations of left factors: m.a lands in A and
    (a + m).n - m.n lands in A.  The equivalent form (m + a).n - m.n
    is evaluated too and must agree.
    """
    if not classify(G, dot).left_near_ring:
        raise PreconditionError("operation is not a left near-ring over this group")
    a_set = frozenset(A)
    if not _is_normal(G, a_set):
        return False
    add = G.table
    left_absorbs = all(dot(m, a) in a_set for a in a_set for m in range(G.n))
    form1 = all(
        G.sub(dot(add[a][m], n_), dot(m, n_)) in a_set
        for a in a_set
        for m in range(G.n)
        for n_ in range(G.n)
    )
    form2 = all(
        G.sub(dot(add[m][a], n_), dot(m, n_)) in a_set
        for a in a_set
        for m in range(G.n)
        for n_ in range(G.n)
    )
    if form1 != form2:
        # for a normal A the two quantified forms coincide
        raise InternalCheckError(f"equivalent ideal forms disagree on {sorted(a_set)}")
    return left_absorbs and form1


def skewring_ideal_check(G: FiniteGroup, circ: BinOp, I: frozenset[int] | set[int]) -> bool:
    """Ideal test for an associative skew-distributive operation.

    I must be a normal additive subgroup with r o i - r in I and
    (i + r) o s - r o s in I.  The equivalent form (r + i) o s - r o s
    is evaluated too and must agree.
    """
    if not classify(G, circ).left_skew_ring:
        raise NotSkewRingError("operation is not a left skew ring over this group")
    i_set = frozenset(I)
    if not _is_normal(G, i_set):
        return False
    add = G.table
    twisted = all(G.sub(circ(r, i), r) in i_set for i in i_set for r in range(G.n))
    form1 = all(
        G.sub(circ(add[i][r], s), circ(r, s)) in i_set
        for i in i_set
        for r in range(G.n)
        for s in range(G.n)
    )
    form2 = all(
        G.sub(circ(add[r][i], s), circ(r, s)) in i_set
        for i in i_set
        for r in range(G.n)
        for s in range(G.n)
    )
    if form1 != form2:
        # for a normal I the two quantified forms coincide
        raise InternalCheckError(f"equivalent ideal forms disagree on {sorted(i_set)}")
    return twisted and form1
