"""Pointed algebras: a finite group with extra operations of arity <= 3.

Extra operations must send the all-zero tuple to 0.  Congruences are
computed by closing principal pairs and joining; ideals by subset scan.
The two routes are kept independent so their agreement is evidence, not
construction.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .binops import BinOp
from .errors import (
    BijectionFailureError,
    BudgetExceededError,
    InputFormatError,
    InternalCheckError,
    NotIdempotentError,
    PreconditionError,
)
from .groups import (
    EndoTable,
    FiniteGroup,
    group_endomorphisms,
    is_group_endo,
    is_idempotent,
    is_normal_subgroup,
    is_subgroup,
    kernel_image,
    semidirect_formulations,
)

__all__ = [
    "Op",
    "OmegaGroup",
    "omega_group",
    "omega_from_binops",
    "Partition",
    "is_ideal",
    "is_subalgebra",
    "all_ideals",
    "all_congruences",
    "congruence_ideal_bijection",
    "ideal_sum",
    "ideal_intersection",
    "is_algebra_endo",
    "algebra_endomorphisms",
    "RetractionReport",
    "check_retraction_compatibility",
    "InnerDecompositionReport",
    "check_inner_decomposition",
    "EndoPairReport",
    "endo_pair_bijection",
]

ARITY_BOUND = 3
LATTICE_ORDER_BOUND = 8


@dataclass(frozen=True)
class Op:
    """One extra operation: flat table indexed in mixed radix, row-major."""

    n: int
    arity: int
    table: tuple[int, ...]

    def apply(self, *args: int) -> int:
        idx = 0
        for a in args:
            idx = idx * self.n + a
        return self.table[idx]


@dataclass(frozen=True)
class OmegaGroup:
    group: FiniteGroup
    ops: tuple[Op, ...]


def omega_group(G: FiniteGroup, ops: Sequence[tuple[int, Sequence[int]]]) -> OmegaGroup:
    """Validate arities, table sizes, entry ranges and pointedness."""
    validated = []
    for arity, table in ops:
        if not 1 <= arity <= ARITY_BOUND:
            raise InputFormatError(f"arity {arity} outside 1..{ARITY_BOUND}")
        if len(table) != G.n ** arity:
            raise InputFormatError(
                f"table of length {len(table)} for arity {arity} over {G.n} elements"
            )
        for v in table:
            if not isinstance(v, int) or not 0 <= v < G.n:
                raise InputFormatError(f"operation entry {v!r} outside 0..{G.n - 1}")
        if table[0] != 0:
            raise InputFormatError("operation is not pointed: image of the zero tuple is not 0")
        validated.append(Op(n=G.n, arity=arity, table=tuple(table)))
    return OmegaGroup(group=G, ops=tuple(validated))


def omega_from_binops(G: FiniteGroup, binops: Sequence[BinOp]) -> OmegaGroup:
    """Wrap binary operation tables as the extra operations."""
    return omega_group(G, [(2, f.flat()) for f in binops])


@dataclass(frozen=True)
class Partition:
    """An equivalence on 0..n-1 as a class-id vector.

    Ids are canonical: first occurrence order, so vectors compare and
    hash structurally.
    """

    ids: tuple[int, ...]

    @staticmethod
    def from_labels(labels: Sequence[int]) -> "Partition":
        relabel: dict[int, int] = {}
        out = []
        for v in labels:
            if v not in relabel:
                relabel[v] = len(relabel)
            out.append(relabel[v])
        return Partition(ids=tuple(out))

    @staticmethod
    def identity(n: int) -> "Partition":
        return Partition(ids=tuple(range(n)))

    @property
    def n(self) -> int:
        return len(self.ids)

    def num_classes(self) -> int:
        return len(set(self.ids))

    def classes(self) -> list[frozenset[int]]:
        buckets: dict[int, set[int]] = {}
        for a, c in enumerate(self.ids):
            buckets.setdefault(c, set()).add(a)
        return [frozenset(buckets[c]) for c in sorted(buckets)]

    def zero_class(self) -> frozenset[int]:
        zid = self.ids[0]
        return frozenset(a for a, c in enumerate(self.ids) if c == zid)

    def same(self, a: int, b: int) -> bool:
        return self.ids[a] == self.ids[b]

    def refines(self, other: "Partition") -> bool:
        """True iff every class of self sits inside a class of other."""
        seen: dict[int, int] = {}
        for a, c in enumerate(self.ids):
            if c in seen:
                if other.ids[a] != seen[c]:
                    return False
            else:
                seen[c] = other.ids[a]
        return True

    def merge_pairs(self) -> list[tuple[int, int]]:
        """One spanning pair per class, enough to regenerate the partition."""
        first: dict[int, int] = {}
        pairs = []
        for a, c in enumerate(self.ids):
            if c in first:
                pairs.append((first[c], a))
            else:
                first[c] = a
        return pairs


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, a: int) -> int:
        p = self.parent
        while p[a] != a:
            p[a] = p[p[a]]
            a = p[a]
        return a

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if rb < ra:
            ra, rb = rb, ra
        self.parent[rb] = ra
        return True


def congruence_closure(A: OmegaGroup, pairs: Iterable[tuple[int, int]]) -> Partition:
    """Smallest congruence merging the given pairs.

    Works the queue of merged witness pairs, pushing their images under
    all one-variable translations of the group sum and the extra ops.
    """
    G = A.group
    n = G.n
    uf = _UnionFind(n)
    queue = deque(pairs)
    add = G.table
    while queue:
        a, b = queue.popleft()
        if not uf.union(a, b):
            continue
        for z in range(n):
            queue.append((add[a][z], add[b][z]))
            queue.append((add[z][a], add[z][b]))
        for op in A.ops:
            m = op.arity
            for pos in range(m):
                for others in itertools.product(range(n), repeat=m - 1):
                    args_a = others[:pos] + (a,) + others[pos:]
                    args_b = others[:pos] + (b,) + others[pos:]
                    queue.append((op.apply(*args_a), op.apply(*args_b)))
    return Partition.from_labels([uf.find(a) for a in range(n)])


def is_congruence(A: OmegaGroup, part: Partition) -> bool:
    """Direct check: the equivalence respects the sum and every op."""
    G = A.group
    n = G.n
    ids = part.ids
    for a in range(n):
        for b in range(n):
            if ids[a] != ids[b]:
                continue
            for z in range(n):
                if ids[G.add(a, z)] != ids[G.add(b, z)]:
                    return False
                if ids[G.add(z, a)] != ids[G.add(z, b)]:
                    return False
    for op in A.ops:
        m = op.arity
        for args in itertools.product(range(n), repeat=m):
            v = op.apply(*args)
            for pos in range(m):
                for b in range(n):
                    if ids[args[pos]] != ids[b]:
                        continue
                    alt = args[:pos] + (b,) + args[pos + 1:]
                    if ids[v] != ids[op.apply(*alt)]:
                        return False
    return True


def _guard_order(A: OmegaGroup, what: str) -> None:
    if A.group.n > LATTICE_ORDER_BOUND:
        raise BudgetExceededError(f"{what} refused for order {A.group.n} > {LATTICE_ORDER_BOUND}")


def all_congruences(A: OmegaGroup) -> list[Partition]:
    """Every congruence, via principal closures and joins, sorted."""
    _guard_order(A, "congruence enumeration")
    n = A.group.n
    found = {Partition.identity(n)}
    principals = set()
    for a in range(n):
        for b in range(a + 1, n):
            principals.add(congruence_closure(A, [(a, b)]))
    found |= principals
    while True:
        fresh = set()
        for p in found:
            for q in principals:
                j = congruence_closure(A, p.merge_pairs() + q.merge_pairs())
                if j not in found:
                    fresh.add(j)
        if not fresh:
            break
        found |= fresh
    return sorted(found, key=lambda p: p.ids)


def is_ideal(A: OmegaGroup, H: Iterable[int]) -> bool:
    """Normal subgroup whose perturbations vanish under every op.

    For each op, position, argument tuple and h in H, perturbing one
    argument by h moves the value only within its H-coset.
    """
    G = A.group
    h_set = frozenset(H)
    if not is_normal_subgroup(G, h_set):
        return False
    n = G.n
    for op in A.ops:
        m = op.arity
        for args in itertools.product(range(n), repeat=m):
            base = op.apply(*args)
            for pos in range(m):
                for h in h_set:
                    alt = args[:pos] + (G.add(h, args[pos]),) + args[pos + 1:]
                    if G.sub(op.apply(*alt), base) not in h_set:
                        return False
    return True


def is_subalgebra(A: OmegaGroup, S: Iterable[int]) -> bool:
    """Subgroup closed under every extra op."""
    s_set = frozenset(S)
    if not is_subgroup(A.group, s_set):
        return False
    for op in A.ops:
        for args in itertools.product(sorted(s_set), repeat=op.arity):
            if op.apply(*args) not in s_set:
                return False
    return True


def all_ideals(A: OmegaGroup) -> list[frozenset[int]]:
    """Every ideal, by subset scan; independent of the congruence route."""
    _guard_order(A, "ideal enumeration")
    n = A.group.n
    rest = [a for a in range(1, n)]
    out = []
    for r in range(len(rest) + 1):
        for extra in itertools.combinations(rest, r):
            s = frozenset((0,) + extra)
            if is_ideal(A, s):
                out.append(s)
    out.sort(key=lambda s: (len(s), sorted(s)))
    return out


def congruence_ideal_bijection(A: OmegaGroup) -> list[tuple[Partition, frozenset[int]]]:
    """Pair every congruence with its zero class and certify the match.

    The zero classes must be exactly the ideals, without repetition, and
    refinement of congruences must mirror inclusion of ideals in both
    directions.  Any failure raises BijectionFailureError.
    """
    congruences = all_congruences(A)
    ideals = all_ideals(A)
    pairs = [(w, w.zero_class()) for w in congruences]
    zero_classes = [zc for _, zc in pairs]
    if len(set(zero_classes)) != len(zero_classes):
        raise BijectionFailureError("two congruences share a zero class")
    if set(zero_classes) != set(ideals):
        raise BijectionFailureError(
            f"zero classes and ideals differ: {len(zero_classes)} vs {len(ideals)}"
        )
    for w1, zc1 in pairs:
        for w2, zc2 in pairs:
            if w1.refines(w2) != (zc1 <= zc2):
                raise BijectionFailureError("refinement does not mirror inclusion")
    return pairs


def ideal_sum(A: OmegaGroup, H: Iterable[int], K: Iterable[int]) -> frozenset[int]:
    """Elementwise sums of two ideals; an ideal again, and their join."""
    h_set, k_set = frozenset(H), frozenset(K)
    if not is_ideal(A, h_set) or not is_ideal(A, k_set):
        raise PreconditionError("ideal_sum needs two ideals")
    G = A.group
    total = frozenset(G.add(h, k) for h in h_set for k in k_set)
    if not is_ideal(A, total):
        raise InternalCheckError("sum of ideals failed the ideal test")
    return total


def ideal_intersection(A: OmegaGroup, H: Iterable[int], K: Iterable[int]) -> frozenset[int]:
    """Intersection of two ideals; an ideal again, and their meet."""
    h_set, k_set = frozenset(H), frozenset(K)
    if not is_ideal(A, h_set) or not is_ideal(A, k_set):
        raise PreconditionError("ideal_intersection needs two ideals")
    total = h_set & k_set
    if not is_ideal(A, total):
        raise InternalCheckError("intersection of ideals failed the ideal test")
    return total


def is_algebra_endo(A: OmegaGroup, e: Sequence[int]) -> bool:
    """Group endomorphism that also commutes with every extra op."""
    G = A.group
    if not is_group_endo(G, e):
        return False
    for op in A.ops:
        for args in itertools.product(range(G.n), repeat=op.arity):
            if e[op.apply(*args)] != op.apply(*(e[a] for a in args)):
                return False
    return True


def algebra_endomorphisms(A: OmegaGroup) -> list[EndoTable]:
    _guard_order(A, "algebra endomorphism enumeration")
    return [e for e in group_endomorphisms(A.group) if is_algebra_endo(A, e)]


@dataclass(frozen=True)
class RetractionReport:
    """Structure seen from one idempotent group endomorphism."""

    kernel_ideal: bool
    image_subalgebra: bool
    algebra_endo: bool

    @property
    def structural_side(self) -> bool:
        return self.kernel_ideal and self.image_subalgebra

    @property
    def sides_agree(self) -> bool:
        return self.structural_side == self.algebra_endo


def check_retraction_compatibility(A: OmegaGroup, e: Sequence[int]) -> RetractionReport:
    """Compare two readings of an idempotent endomorphism's compatibility.

    Structural side: the kernel is an ideal and the image a subalgebra.
    Morphism side: the map commutes with every extra op.  The two are
    computed independently; agreement is the property under test.
    """
    G = A.group
    if not is_group_endo(G, e):
        raise PreconditionError("map is not a group endomorphism")
    if not is_idempotent(e):
        raise NotIdempotentError("endomorphism is not idempotent")
    ker, img = kernel_image(G, e)
    return RetractionReport(
        kernel_ideal=is_ideal(A, ker),
        image_subalgebra=is_subalgebra(A, img),
        algebra_endo=is_algebra_endo(A, e),
    )


@dataclass(frozen=True)
class InnerDecompositionReport:
    """Five readings of "K and H decompose the algebra"."""

    covering_and_trivial_meet: bool
    unique_left_split: bool
    unique_right_split: bool
    idempotent_retraction_exists: bool
    identity_on_image_retraction_exists: bool

    def as_tuple(self) -> tuple[bool, bool, bool, bool, bool]:
        return (
            self.covering_and_trivial_meet,
            self.unique_left_split,
            self.unique_right_split,
            self.idempotent_retraction_exists,
            self.identity_on_image_retraction_exists,
        )

    @property
    def all_agree(self) -> bool:
        return len(set(self.as_tuple())) == 1


def check_inner_decomposition(A: OmegaGroup, K: Iterable[int], H: Iterable[int]) -> InnerDecompositionReport:
    """Evaluate all five decomposition readings for an ideal K and a
    subalgebra H; they must agree, which the caller asserts."""
    k_set, h_set = frozenset(K), frozenset(H)
    if not is_ideal(A, k_set):
        raise PreconditionError("K is not an ideal")
    if not is_subalgebra(A, h_set):
        raise PreconditionError("H is not a subalgebra")
    G = A.group
    cond_a, cond_b, cond_c = semidirect_formulations(G, k_set, h_set)

    endos = algebra_endomorphisms(A)
    cond_d = any(
        is_idempotent(e) and kernel_image(G, e) == (k_set, h_set) for e in endos
    )
    cond_e = any(
        all(e[h] == h for h in h_set) and kernel_image(G, e) == (k_set, h_set)
        for e in endos
    )
    return InnerDecompositionReport(
        covering_and_trivial_meet=cond_a,
        unique_left_split=cond_b,
        unique_right_split=cond_c,
        idempotent_retraction_exists=cond_d,
        identity_on_image_retraction_exists=cond_e,
    )


@dataclass(frozen=True)
class EndoPairReport:
    """Idempotent algebra endomorphisms vs decomposing (ideal, subalgebra) pairs.

    The idempotent correspondence is asserted.  The raw counts over all
    algebra endomorphisms are reported without any claim; in general
    they need not match the pair count.
    """

    idempotent_endos: tuple[EndoTable, ...]
    decomposition_pairs: tuple[tuple[frozenset[int], frozenset[int]], ...]
    all_endo_count: int

    @property
    def pair_count(self) -> int:
        return len(self.decomposition_pairs)

    @property
    def idempotent_count(self) -> int:
        return len(self.idempotent_endos)


def endo_pair_bijection(A: OmegaGroup) -> EndoPairReport:
    """Match idempotent algebra endomorphisms with decomposition pairs.

    Each idempotent algebra endomorphism maps to (kernel, image); this
    must biject onto the pairs (K ideal, H subalgebra) that decompose
    the group.  Failure raises BijectionFailureError.
    """
    _guard_order(A, "endomorphism pairing")
    G = A.group
    endos = algebra_endomorphisms(A)
    idem = tuple(e for e in endos if is_idempotent(e))

    ideals = all_ideals(A)
    pairs = []
    for k_set in ideals:
        for h_set in _subalgebra_candidates(A):
            a, b, c = semidirect_formulations(G, k_set, h_set)
            if not (a == b == c):
                raise InternalCheckError("decomposition readings disagree")
            if a:
                pairs.append((k_set, h_set))
    pairs.sort(key=lambda kh: (sorted(kh[0]), sorted(kh[1])))

    images = [kernel_image(G, e) for e in idem]
    if len(set(images)) != len(images):
        raise BijectionFailureError("two idempotent endomorphisms share kernel and image")
    if set(images) != set(pairs):
        raise BijectionFailureError(
            f"idempotent endomorphisms and decomposition pairs differ: {len(images)} vs {len(pairs)}"
        )
    return EndoPairReport(
        idempotent_endos=idem,
        decomposition_pairs=tuple(pairs),
        all_endo_count=len(endos),
    )


def _subalgebra_candidates(A: OmegaGroup) -> list[frozenset[int]]:
    n = A.group.n
    rest = [a for a in range(1, n)]
    out = []
    for r in range(len(rest) + 1):
        for extra in itertools.combinations(rest, r):
            s = frozenset((0,) + extra)
            if is_subalgebra(A, s):
                out.append(s)
    return out
