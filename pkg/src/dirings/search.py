"""Backtracking enumeration of operation tables under axiom constraints.

Cells are filled in row-major order.  After each assignment every
constraint instance whose arguments are all assigned is rechecked, and
complete tables are verified once more with the definitive predicates,
so pruning is a speed concern and never a soundness one.  Budgets count
assignments; truncated runs return no tables so that the output is
identical for any worker count.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Sequence

from . import axioms
from .binops import BinOp
from .errors import (
    BudgetExceededError,
    GroupValidationError,
    InputFormatError,
    UnsupportedOrderError,
)
from .groups import FiniteGroup, group_automorphisms, validate_group

__all__ = [
    "SearchSpec",
    "SearchResult",
    "PairSearchResult",
    "SEARCH_CONSTRAINTS",
    "STRUCTURE_KINDS",
    "enumerate_binops",
    "enumerate_dirings",
    "count_structures",
    "dedup_up_to_aut",
    "dedup_pairs_up_to_aut",
    "DEFAULT_BUDGET",
]

DEFAULT_BUDGET = 10_000_000
BINOP_ORDER_BOUND = 6
COUNT_ORDER_BOUND = 4

SEARCH_CONSTRAINTS = (
    "associative",
    "left_distributive",
    "left_skew_distributive",
    "weakly_associative",
    "group_with_zero_identity",
    "zero_symmetric",
)

STRUCTURE_KINDS = {
    "left_near_ring": ("associative", "left_distributive"),
    "left_skew_ring": ("associative", "left_skew_distributive"),
    "left_weak_ring": ("weakly_associative", "left_distributive"),
    "digroup": ("group_with_zero_identity",),
    "left_skew_brace": ("group_with_zero_identity", "left_skew_distributive"),
}


@dataclass(frozen=True)
class SearchSpec:
    """What to enumerate: the group, the constraint names, the budget.

    ``paired_circ`` forces every candidate cell through the pair
    identity dot(a, b) = -a + circ(a, b) for the given circ table.
    ``dedup`` is "labeled" or "up_to_aut".
    """

    group: FiniteGroup
    constraints: tuple[str, ...] = ()
    paired_circ: BinOp | None = None
    budget: int = DEFAULT_BUDGET
    dedup: str = "labeled"
    workers: int = 1


@dataclass(frozen=True)
class SearchResult:
    tables: tuple[BinOp, ...]
    nodes_explored: int
    complete: bool


@dataclass(frozen=True)
class PairSearchResult:
    pairs: tuple[tuple[BinOp, BinOp], ...]
    nodes_explored: int
    complete: bool


def _validate_spec(spec: SearchSpec) -> None:
    for c in spec.constraints:
        if c not in SEARCH_CONSTRAINTS:
            raise InputFormatError(f"unknown constraint {c!r}")
    if spec.dedup not in ("labeled", "up_to_aut"):
        raise InputFormatError(f"unknown dedup mode {spec.dedup!r}")
    if spec.workers < 1:
        raise InputFormatError("workers must be at least 1")
    if spec.budget < 1:
        raise InputFormatError("budget must be positive")
    if spec.paired_circ is not None and spec.paired_circ.n != spec.group.n:
        raise InputFormatError("paired table has the wrong carrier size")


def _forced_cells(G: FiniteGroup, constraints: Sequence[str], paired_circ: BinOp | None) -> list[int | None]:
    """Per-cell forced values; -2 marks an unsatisfiable cell."""
    n = G.n
    forced: list[int | None] = [None] * (n * n)

    def force(cell: int, value: int) -> None:
        if forced[cell] is None:
            forced[cell] = value
        elif forced[cell] != value:
            forced[cell] = -2

    if "zero_symmetric" in constraints:
        for b in range(n):
            force(b, 0)
    if "group_with_zero_identity" in constraints:
        for b in range(n):
            force(b, b)
        for a in range(n):
            force(a * n, a)
    if paired_circ is not None:
        for a in range(n):
            na = G.neg(a)
            for b in range(n):
                force(a * n + b, G.add(na, paired_circ(a, b)))
    return forced


def _partial_checks(G: FiniteGroup, constraints: Sequence[str]) -> list[Callable[[list[int], int], bool]]:
    """Pruning functions over an in-progress flat table.

    Each takes (table, just-assigned cell) and reports whether every
    fully-assigned instance of its law still holds.  Cheapest first:
    cell-local row/column checks, then the distributive laws whose
    instance cells are static, then the value-dependent associativity
    laws.
    """
    n = G.n
    add = G.table
    neg = G.neg_table
    checks: list[Callable[[list[int], int], bool]] = []

    if "group_with_zero_identity" in constraints:
        def latin(t: list[int], cell: int) -> bool:
            a, b = divmod(cell, n)
            v = t[cell]
            for j in range(n):
                if j != b and t[a * n + j] == v:
                    return False
                if j != a and t[j * n + b] == v:
                    return False
            return True

        checks.append(latin)

    if "left_distributive" in constraints:
        def ldist(t: list[int], cell: int) -> bool:
            for a in range(n):
                row = a * n
                for b in range(n):
                    vb = t[row + b]
                    if vb < 0:
                        continue
                    for c in range(n):
                        vc = t[row + c]
                        if vc < 0:
                            continue
                        vbc = t[row + add[b][c]]
                        if vbc >= 0 and vbc != add[vb][vc]:
                            return False
            return True

        checks.append(ldist)

    if "left_skew_distributive" in constraints:
        def lskew(t: list[int], cell: int) -> bool:
            for a in range(n):
                row = a * n
                na = neg[a]
                for b in range(n):
                    vb = t[row + b]
                    if vb < 0:
                        continue
                    for c in range(n):
                        vc = t[row + c]
                        if vc < 0:
                            continue
                        vbc = t[row + add[b][c]]
                        if vbc >= 0 and vbc != add[add[vb][na]][vc]:
                            return False
            return True

        checks.append(lskew)

    if "weakly_associative" in constraints:
        def wassoc(t: list[int], cell: int) -> bool:
            for a in range(n):
                row = a * n
                for b in range(n):
                    vab = t[row + b]
                    if vab < 0:
                        continue
                    urow = add[a][vab] * n
                    brow = b * n
                    for c in range(n):
                        left = t[urow + c]
                        if left < 0:
                            continue
                        vbc = t[brow + c]
                        if vbc < 0:
                            continue
                        right = t[row + vbc]
                        if right >= 0 and left != right:
                            return False
            return True

        checks.append(wassoc)

    if "associative" in constraints or "group_with_zero_identity" in constraints:
        def assoc(t: list[int], cell: int) -> bool:
            for a in range(n):
                row = a * n
                for b in range(n):
                    vab = t[row + b]
                    if vab < 0:
                        continue
                    brow = b * n
                    abrow = vab * n
                    for c in range(n):
                        left = t[abrow + c]
                        if left < 0:
                            continue
                        vbc = t[brow + c]
                        if vbc < 0:
                            continue
                        right = t[row + vbc]
                        if right >= 0 and left != right:
                            return False
            return True

        checks.append(assoc)

    return checks


def _leaf_predicate(G: FiniteGroup, constraints: Sequence[str], paired_circ: BinOp | None) -> Callable[[BinOp], bool]:
    """The definitive full-table filter, built from the axiom module."""

    def ok(f: BinOp) -> bool:
        if "associative" in constraints and not axioms.is_associative(G, f):
            return False
        if "left_distributive" in constraints and not axioms.is_left_distributive(G, f):
            return False
        if "left_skew_distributive" in constraints and not axioms.is_left_skew_distributive(G, f):
            return False
        if "weakly_associative" in constraints and not axioms.is_weakly_associative(G, f):
            return False
        if "zero_symmetric" in constraints and any(f(0, b) != 0 for b in range(G.n)):
            return False
        if "group_with_zero_identity" in constraints:
            try:
                validate_group(f.rows)
            except GroupValidationError:
                return False
        if paired_circ is not None:
            for a in range(G.n):
                for b in range(G.n):
                    if G.add(a, f(a, b)) != paired_circ(a, b):
                        return False
        return True

    return ok


@dataclass
class _Explorer:
    n: int
    forced: list[int | None]
    checks: list[Callable[[list[int], int], bool]]
    leaf_ok: Callable[[tuple[int, ...]], bool]
    limit: int
    nodes: int = 0
    out: list[tuple[int, ...]] = field(default_factory=list)
    truncated: bool = False

    def run(self, t: list[int], cell: int) -> None:
        if self.truncated:
            return
        if cell == self.n * self.n:
            flat = tuple(t)
            if self.leaf_ok(flat):
                self.out.append(flat)
            return
        want = self.forced[cell]
        if want == -2:
            return
        values = range(self.n) if want is None else (want,)
        for v in values:
            self.nodes += 1
            if self.nodes > self.limit:
                self.truncated = True
                return
            t[cell] = v
            if all(chk(t, cell) for chk in self.checks):
                self.run(t, cell + 1)
                if self.truncated:
                    t[cell] = -1
                    return
            t[cell] = -1


def _row_prefixes(G: FiniteGroup, forced, checks, budget: int) -> tuple[list[tuple[int, ...]], int, bool]:
    """All consistent assignments of row 0, found depth-first."""
    n = G.n
    prefixes: list[tuple[int, ...]] = []
    nodes = 0
    t = [-1] * (n * n)

    def walk(cell: int) -> bool:
        nonlocal nodes
        if cell == n:
            prefixes.append(tuple(t[:n]))
            return False
        want = forced[cell]
        if want == -2:
            return False
        values = range(n) if want is None else (want,)
        for v in values:
            nodes += 1
            if nodes > budget:
                return True
            t[cell] = v
            if all(chk(t, cell) for chk in checks):
                if walk(cell + 1):
                    t[cell] = -1
                    return True
            t[cell] = -1
        return False

    truncated = walk(0)
    return prefixes, nodes, truncated


def _search_flat(spec: SearchSpec, constraints: tuple[str, ...]) -> tuple[list[tuple[int, ...]], int, bool]:
    """Shared engine: returns (flat tables, nodes, complete)."""
    G = spec.group
    n = G.n
    forced = _forced_cells(G, constraints, spec.paired_circ)
    checks = _partial_checks(G, constraints)
    leaf = _leaf_predicate(G, constraints, spec.paired_circ)

    def leaf_flat(flat: tuple[int, ...]) -> bool:
        return leaf(BinOp(n=n, rows=tuple(flat[i * n:(i + 1) * n] for i in range(n))))

    prefixes, root_nodes, truncated = _row_prefixes(G, forced, checks, spec.budget)
    if truncated:
        return [], spec.budget, False

    def explore(prefix: tuple[int, ...]) -> _Explorer:
        ex = _Explorer(n=n, forced=forced, checks=checks, leaf_ok=leaf_flat, limit=spec.budget)
        t = list(prefix) + [-1] * (n * n - n)
        ex.run(t, n)
        return ex

    if spec.workers == 1:
        results = []
        running = root_nodes
        for p in prefixes:
            ex = explore(p)
            results.append(ex)
            running += ex.nodes
            if ex.truncated or running > spec.budget:
                return [], spec.budget, False
    else:
        with ThreadPoolExecutor(max_workers=spec.workers) as pool:
            results = list(pool.map(explore, prefixes))
        running = root_nodes
        for ex in results:
            running += ex.nodes
            if ex.truncated or running > spec.budget:
                return [], spec.budget, False

    tables = [flat for ex in results for flat in ex.out]
    tables.sort()
    return tables, running, True


def _to_binops(n: int, flats: Sequence[tuple[int, ...]]) -> tuple[BinOp, ...]:
    return tuple(
        BinOp(n=n, rows=tuple(flat[i * n:(i + 1) * n] for i in range(n))) for flat in flats
    )


def enumerate_binops(spec: SearchSpec) -> SearchResult:
    """Every table on the group satisfying all named constraints.

    Output is sorted by flattened table.  On budget exhaustion the
    result is flagged incomplete and carries no tables.
    """
    _validate_spec(spec)
    if spec.group.n > BINOP_ORDER_BOUND:
        raise UnsupportedOrderError(
            f"table enumeration refused for order {spec.group.n} > {BINOP_ORDER_BOUND}"
        )
    flats, nodes, complete = _search_flat(spec, tuple(spec.constraints))
    tables = _to_binops(spec.group.n, flats)
    if spec.dedup == "up_to_aut":
        tables = dedup_up_to_aut(spec.group, tables)
    return SearchResult(tables=tables, nodes_explored=nodes, complete=complete)


def enumerate_dirings(spec: SearchSpec) -> PairSearchResult:
    """Every pair on the group, with extra dot-side constraints.

    Enumerates dot tables that are left distributive and weakly
    associative plus whatever spec.constraints adds, then attaches the
    circ partner through the pair identity.
    """
    _validate_spec(spec)
    if spec.group.n > BINOP_ORDER_BOUND:
        raise UnsupportedOrderError(
            f"pair enumeration refused for order {spec.group.n} > {BINOP_ORDER_BOUND}"
        )
    base = ("left_distributive", "weakly_associative")
    constraints = base + tuple(c for c in spec.constraints if c not in base)
    flats, nodes, complete = _search_flat(spec, constraints)
    from .diring import weak_to_skew_raw

    G = spec.group
    dots = _to_binops(G.n, flats)
    pairs = tuple((weak_to_skew_raw(G, dot), dot) for dot in dots)
    if spec.dedup == "up_to_aut":
        pairs = dedup_pairs_up_to_aut(G, pairs)
    return PairSearchResult(pairs=pairs, nodes_explored=nodes, complete=complete)


def count_structures(G: FiniteGroup, kind: str, budget: int = DEFAULT_BUDGET,
                     workers: int = 1) -> tuple[int, SearchResult]:
    """Count labeled tables of one structure kind on G."""
    if kind not in STRUCTURE_KINDS:
        raise InputFormatError(f"unknown structure kind {kind!r}")
    if G.n > COUNT_ORDER_BOUND:
        raise UnsupportedOrderError(f"structure count refused for order {G.n} > {COUNT_ORDER_BOUND}")
    spec = SearchSpec(group=G, constraints=STRUCTURE_KINDS[kind], budget=budget, workers=workers)
    result = enumerate_binops(spec)
    if not result.complete:
        raise BudgetExceededError(f"structure count for {kind} exceeded the node budget")
    return len(result.tables), result


def _act(n: int, sigma: Sequence[int], sigma_inv: Sequence[int], f: BinOp) -> tuple[int, ...]:
    return tuple(
        sigma[f(sigma_inv[a], sigma_inv[b])] for a in range(n) for b in range(n)
    )


def _inverse(sigma: Sequence[int]) -> list[int]:
    inv = [0] * len(sigma)
    for i, v in enumerate(sigma):
        inv[v] = i
    return inv


def dedup_up_to_aut(G: FiniteGroup, tables: Sequence[BinOp]) -> tuple[BinOp, ...]:
    """Keep one lexicographically least representative per orbit.

    The group is the automorphism group of (G, +) acting by conjugating
    both arguments and the value.
    """
    auts = group_automorphisms(G)
    pairs = [(a, _inverse(a)) for a in auts]
    n = G.n
    reps = set()
    for f in tables:
        orbit_min = min(_act(n, s, si, f) for s, si in pairs)
        reps.add(orbit_min)
    return _to_binops(n, sorted(reps))


def dedup_pairs_up_to_aut(
    G: FiniteGroup, op_pairs: Sequence[tuple[BinOp, BinOp]]
) -> tuple[tuple[BinOp, BinOp], ...]:
    """Same action applied to both operations of a pair at once."""
    auts = group_automorphisms(G)
    inv_pairs = [(a, _inverse(a)) for a in auts]
    n = G.n
    reps = set()
    for circ, dot in op_pairs:
        orbit_min = min(
            (_act(n, s, si, circ), _act(n, s, si, dot)) for s, si in inv_pairs
        )
        reps.add(orbit_min)
    out = []
    for circ_flat, dot_flat in sorted(reps):
        out.append((_to_binops(n, [circ_flat])[0], _to_binops(n, [dot_flat])[0]))
    return tuple(out)
