"""Finite groups as Cayley tables with the identity pinned at index 0.

Elements are the integers 0..n-1.  The additive notation (add/neg/sub)
is used throughout the package even for non-abelian groups.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    BudgetExceededError,
    InputFormatError,
    InternalCheckError,
    NoIdentityAtZeroError,
    NoInverseError,
    NotAssociativeError,
    PreconditionError,
    UnsupportedOrderError,
)

__all__ = [
    "FiniteGroup",
    "validate_group",
    "standard_group",
    "group_endomorphisms",
    "group_automorphisms",
    "is_group_endo",
    "is_idempotent",
    "compose_maps",
    "kernel_image",
    "is_subgroup",
    "is_normal_subgroup",
    "subgroup_generated",
    "all_subgroups",
    "is_semidirect_pair",
    "semidirect_formulations",
]

EndoTable = tuple[int, ...]

ENDO_ORDER_BOUND = 8


@dataclass(frozen=True)
class FiniteGroup:
    """A finite group given by its full addition table.

    ``table[a][b]`` is a+b; ``neg_table[a]`` is -a.  The identity is the
    element 0.  Instances are built through :func:`validate_group` so the
    axioms are guaranteed to hold.
    """

    n: int
    table: tuple[tuple[int, ...], ...]
    neg_table: tuple[int, ...]

    def add(self, a: int, b: int) -> int:
        return self.table[a][b]

    def neg(self, a: int) -> int:
        return self.neg_table[a]

    def sub(self, a: int, b: int) -> int:
        """a + (-b)."""
        return self.table[a][self.neg_table[b]]

    @property
    def zero(self) -> int:
        return 0

    def elements(self) -> range:
        return range(self.n)

    def is_abelian(self) -> bool:
        t = self.table
        return all(t[a][b] == t[b][a] for a in range(self.n) for b in range(self.n))

    def revalidate(self) -> None:
        """Recheck the axioms and the stored negation table.

        The negation table is redundant data; this guards against
        hand-built instances that bypassed :func:`validate_group`.
        """
        other = validate_group(self.table)
        if other.neg_table != self.neg_table:
            raise InternalCheckError("stored negation table is inconsistent")


def _check_shape(table: Sequence[Sequence[int]]) -> int:
    n = len(table)
    if n == 0:
        raise InputFormatError("empty table")
    for row in table:
        if len(row) != n:
            raise InputFormatError(f"table is not square: row of length {len(row)} in order {n}")
        for v in row:
            if not isinstance(v, int) or not 0 <= v < n:
                raise InputFormatError(f"entry {v!r} outside 0..{n - 1}")
    return n


def validate_group(table: Sequence[Sequence[int]]) -> FiniteGroup:
    """Check the group axioms and return a validated FiniteGroup.

    The identity must sit at index 0; tables with the identity elsewhere
    are rejected rather than re-indexed.  Raises NoIdentityAtZeroError,
    NoInverseError or NotAssociativeError with a witness.
    """
    n = _check_shape(table)
    rows = tuple(tuple(row) for row in table)

    for a in range(n):
        if rows[0][a] != a or rows[a][0] != a:
            raise NoIdentityAtZeroError(a)

    neg = [-1] * n
    for a in range(n):
        for b in range(n):
            if rows[a][b] == 0 and rows[b][a] == 0:
                neg[a] = b
                break
        if neg[a] < 0:
            raise NoInverseError(a)

    for a in range(n):
        ra = rows[a]
        for b in range(n):
            ab = ra[b]
            rb = rows[b]
            for c in range(n):
                if rows[ab][c] != ra[rb[c]]:
                    raise NotAssociativeError(a, b, c)

    return FiniteGroup(n=n, table=rows, neg_table=tuple(neg))


def _cyclic_table(n: int) -> list[list[int]]:
    return [[(a + b) % n for b in range(n)] for a in range(n)]


def _klein4_table() -> list[list[int]]:
    return [[a ^ b for b in range(4)] for a in range(4)]


def _dihedral_table(n: int) -> list[list[int]]:
    # element e*n + k stands for r^k s^e; s r s = r^-1
    def mul(x: int, y: int) -> int:
        e1, k1 = divmod(x, n)
        e2, k2 = divmod(y, n)
        k = (k1 + (k2 if e1 == 0 else -k2)) % n
        return ((e1 + e2) % 2) * n + k

    return [[mul(x, y) for y in range(2 * n)] for x in range(2 * n)]


def _sym3_table() -> list[list[int]]:
    # one-line permutations of (0,1,2) in lexicographic order;
    # (a+b)(x) = a(b(x))
    perms = sorted(itertools.permutations(range(3)))
    index = {p: i for i, p in enumerate(perms)}
    table = []
    for a in perms:
        table.append([index[tuple(a[b[x]] for x in range(3))] for b in perms])
    return table


def standard_group(name: str) -> FiniteGroup:
    """Build a named group: c<n>/z<n> cyclic, klein4, d<n> dihedral, s3.

    Spellings like ``cyclic(6)`` and ``dihedral(4)`` are also accepted.
    """
    key = name.strip().lower().replace("(", "").replace(")", "")
    if key in ("klein4", "v4"):
        return validate_group(_klein4_table())
    if key in ("s3", "sym3"):
        return validate_group(_sym3_table())
    for prefix, builder, least in (
        ("cyclic", _cyclic_table, 1),
        ("dihedral", _dihedral_table, 1),
        ("c", _cyclic_table, 1),
        ("z", _cyclic_table, 1),
        ("d", _dihedral_table, 1),
    ):
        if key.startswith(prefix) and key[len(prefix):].isdigit():
            n = int(key[len(prefix):])
            if n < least:
                raise UnsupportedOrderError(f"{prefix} group of order parameter {n}")
            return validate_group(builder(n))
    raise InputFormatError(f"unknown standard group {name!r}")


def _generating_sequence(G: FiniteGroup) -> list[int]:
    """A short generating sequence found greedily."""
    gens: list[int] = []
    span = {0}
    while len(span) < G.n:
        g = min(a for a in G.elements() if a not in span)
        gens.append(g)
        span = subgroup_generated(G, gens)
    return gens


def _reach_order(G: FiniteGroup, gens: Sequence[int]) -> list[tuple[int, int, int]]:
    """(element, previous, generator index) triples covering G.

    Each element beyond 0 is previous + gens[i]; walking the list in
    order lets an endomorphism be extended from generator images.
    """
    seen = {0}
    steps: list[tuple[int, int, int]] = []
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for i, g in enumerate(gens):
                y = G.add(x, g)
                if y not in seen:
                    seen.add(y)
                    steps.append((y, x, i))
                    nxt.append(y)
        frontier = nxt
    if len(seen) != G.n:
        raise InternalCheckError("generating sequence does not reach the whole group")
    return steps


def is_group_endo(G: FiniteGroup, e: Sequence[int]) -> bool:
    """True iff e respects addition: e(a+b) = e(a) + e(b)."""
    if len(e) != G.n:
        return False
    t = G.table
    return all(e[t[a][b]] == t[e[a]][e[b]] for a in range(G.n) for b in range(G.n))


def group_endomorphisms(G: FiniteGroup, max_order: int = ENDO_ORDER_BOUND) -> list[EndoTable]:
    """All group endomorphisms of G, sorted lexicographically.

    Enumerates images of a generating sequence, extends each assignment
    to a candidate map, and keeps those that verify as homomorphisms on
    every pair.  This is complete; orders beyond ``max_order`` are
    refused rather than sampled.
    """
    if G.n > max_order:
        raise BudgetExceededError(f"endomorphism enumeration refused for order {G.n} > {max_order}")
    if G.n == 1:
        return [(0,)]
    gens = _generating_sequence(G)
    steps = _reach_order(G, gens)
    found = []
    for images in itertools.product(range(G.n), repeat=len(gens)):
        f = [-1] * G.n
        f[0] = 0
        for y, x, i in steps:
            f[y] = G.add(f[x], images[i])
        if is_group_endo(G, f):
            found.append(tuple(f))
    found.sort()
    return found


def group_automorphisms(G: FiniteGroup, max_order: int = ENDO_ORDER_BOUND) -> list[EndoTable]:
    """The bijective endomorphisms of G, sorted lexicographically."""
    return [e for e in group_endomorphisms(G, max_order) if len(set(e)) == G.n]


def is_idempotent(e: Sequence[int]) -> bool:
    """True iff e composed with itself equals e."""
    return all(e[e[a]] == e[a] for a in range(len(e)))


def compose_maps(outer: Sequence[int], inner: Sequence[int]) -> EndoTable:
    """(outer after inner) as an image table."""
    return tuple(outer[inner[a]] for a in range(len(inner)))


def kernel_image(G: FiniteGroup, e: Sequence[int]) -> tuple[frozenset[int], frozenset[int]]:
    """Kernel and image of a group endomorphism."""
    ker = frozenset(a for a in G.elements() if e[a] == 0)
    img = frozenset(e[a] for a in G.elements())
    return ker, img


def is_subgroup(G: FiniteGroup, S: Iterable[int]) -> bool:
    s = frozenset(S)
    if 0 not in s or not all(0 <= a < G.n for a in s):
        return False
    return all(G.add(a, G.neg(b)) in s for a in s for b in s)


def is_normal_subgroup(G: FiniteGroup, S: Iterable[int]) -> bool:
    s = frozenset(S)
    if not is_subgroup(G, s):
        return False
    return all(
        G.add(G.add(g, a), G.neg(g)) in s for g in G.elements() for a in s
    )


def subgroup_generated(G: FiniteGroup, gens: Iterable[int]) -> frozenset[int]:
    """Closure of {0} and gens under addition; a subgroup since G is finite."""
    span = {0} | set(gens)
    frontier = list(span)
    while frontier:
        x = frontier.pop()
        for y in list(span):
            for z in (G.add(x, y), G.add(y, x)):
                if z not in span:
                    span.add(z)
                    frontier.append(z)
    return frozenset(span)


def all_subgroups(G: FiniteGroup, max_order: int = ENDO_ORDER_BOUND) -> list[frozenset[int]]:
    """Every subgroup of G, by subset scan; refuses orders beyond the bound."""
    if G.n > max_order:
        raise BudgetExceededError(f"subgroup scan refused for order {G.n} > {max_order}")
    rest = [a for a in G.elements() if a != 0]
    out = []
    for r in range(len(rest) + 1):
        for extra in itertools.combinations(rest, r):
            s = frozenset((0,) + extra)
            if is_subgroup(G, s):
                out.append(s)
    out.sort(key=lambda s: (len(s), sorted(s)))
    return out


def semidirect_formulations(G: FiniteGroup, K: Iterable[int], H: Iterable[int]) -> tuple[bool, bool, bool]:
    """The three equivalent readings of "K and H decompose G".

    (a) K + H = G and K meets H only in 0;
    (b) every g splits uniquely as k + h;
    (c) every g splits uniquely as h + k.
    """
    k_set, h_set = frozenset(K), frozenset(H)
    sums = {G.add(k, h) for k in k_set for h in h_set}
    cond_a = sums == set(G.elements()) and k_set & h_set == {0}
    cond_b = all(
        sum(1 for k in k_set for h in h_set if G.add(k, h) == g) == 1 for g in G.elements()
    )
    cond_c = all(
        sum(1 for k in k_set for h in h_set if G.add(h, k) == g) == 1 for g in G.elements()
    )
    return cond_a, cond_b, cond_c


def is_semidirect_pair(G: FiniteGroup, K: Iterable[int], H: Iterable[int]) -> bool:
    """True iff G decomposes as the normal K plus the subgroup H.

    Requires K to be a normal subgroup and H a subgroup.  The three
    formulations are all computed and must agree.
    """
    k_set, h_set = frozenset(K), frozenset(H)
    if not is_normal_subgroup(G, k_set):
        raise PreconditionError("K is not a normal subgroup")
    if not is_subgroup(G, h_set):
        raise PreconditionError("H is not a subgroup")
    a, b, c = semidirect_formulations(G, k_set, h_set)
    if not (a == b == c):
        raise InternalCheckError(f"decomposition readings disagree: {(a, b, c)}")
    return a
