"""Binary operations on a finite group, and the near-ring they form.

A BinOp is an n x n table over the carrier of a group; the row index is
the left argument.  Tables combine pointwise through the group addition
and compose by substitution, which makes the set of all tables a left
near-ring whose two-sided identity is the left projection.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

from .errors import BudgetExceededError, InputFormatError, SizeMismatchError
from .groups import FiniteGroup

__all__ = [
    "BinOp",
    "op_add",
    "op_neg",
    "op_sub",
    "op_compose",
    "op_compose_diagonal",
    "named_op",
    "named_op_catalog",
    "all_binops",
    "OpNearRingReport",
    "verify_binop_nearring",
    "NAMED_OPS",
]

NAMED_OPS = ("null", "pi1", "pi2", "plus", "plus_op", "conj")


@dataclass(frozen=True)
class BinOp:
    """An n x n operation table; ``rows[a][b]`` is the value at (a, b)."""

    n: int
    rows: tuple[tuple[int, ...], ...]

    def __call__(self, a: int, b: int) -> int:
        return self.rows[a][b]

    @staticmethod
    def from_rows(rows: Sequence[Sequence[int]]) -> "BinOp":
        n = len(rows)
        out = []
        for row in rows:
            if len(row) != n:
                raise InputFormatError(f"operation table is not square: row of length {len(row)}")
            for v in row:
                if not isinstance(v, int) or not 0 <= v < n:
                    raise InputFormatError(f"operation entry {v!r} outside 0..{n - 1}")
            out.append(tuple(row))
        if n == 0:
            raise InputFormatError("empty operation table")
        return BinOp(n=n, rows=tuple(out))

    @staticmethod
    def from_func(n: int, fn: Callable[[int, int], int]) -> "BinOp":
        return BinOp(n=n, rows=tuple(tuple(fn(a, b) for b in range(n)) for a in range(n)))

    def flat(self) -> tuple[int, ...]:
        return tuple(v for row in self.rows for v in row)


def _same_carrier(G: FiniteGroup, *ops: BinOp) -> None:
    for f in ops:
        if f.n != G.n:
            raise SizeMismatchError(f"operation on {f.n} elements vs group of order {G.n}")


def op_add(G: FiniteGroup, f: BinOp, g: BinOp) -> BinOp:
    """Pointwise sum (a, b) -> f(a,b) + g(a,b)."""
    _same_carrier(G, f, g)
    return BinOp.from_func(G.n, lambda a, b: G.add(f(a, b), g(a, b)))


def op_neg(G: FiniteGroup, f: BinOp) -> BinOp:
    """Pointwise negation (a, b) -> -f(a,b)."""
    _same_carrier(G, f)
    return BinOp.from_func(G.n, lambda a, b: G.neg(f(a, b)))


def op_sub(G: FiniteGroup, f: BinOp, g: BinOp) -> BinOp:
    """Pointwise difference (a, b) -> f(a,b) - g(a,b)."""
    _same_carrier(G, f, g)
    return BinOp.from_func(G.n, lambda a, b: G.sub(f(a, b), g(a, b)))


def op_compose(G: FiniteGroup, f: BinOp, g: BinOp) -> BinOp:
    """Substitution product (a, b) -> g(f(a, b), b).

    Feeding f's value into g while keeping the right argument is the
    composition under which the tables form a left near-ring with the
    left projection as two-sided identity.
    """
    _same_carrier(G, f, g)
    return BinOp.from_func(G.n, lambda a, b: g(f(a, b), b))


def op_compose_diagonal(G: FiniteGroup, f: BinOp, g: BinOp) -> BinOp:
    """Variant product (a, b) -> g(f(a, b), f(a, b)).

    Kept for comparison in the verification report: it is associative
    and left distributive too, but the left projection is only a right
    identity for it.
    """
    _same_carrier(G, f, g)
    return BinOp.from_func(G.n, lambda a, b: g(f(a, b), f(a, b)))


def named_op(G: FiniteGroup, name: str) -> BinOp:
    """One of the six named tables: null, pi1, pi2, plus, plus_op, conj.

    null is constant 0, pi1/pi2 the projections, plus the group sum,
    plus_op the opposite sum, conj the map (a, b) -> -a + b + a.
    """
    n = G.n
    if name == "null":
        return BinOp.from_func(n, lambda a, b: 0)
    if name == "pi1":
        return BinOp.from_func(n, lambda a, b: a)
    if name == "pi2":
        return BinOp.from_func(n, lambda a, b: b)
    if name == "plus":
        return BinOp.from_func(n, G.add)
    if name == "plus_op":
        return BinOp.from_func(n, lambda a, b: G.add(b, a))
    if name == "conj":
        return BinOp.from_func(n, lambda a, b: G.add(G.add(G.neg(a), b), a))
    raise InputFormatError(f"unknown named operation {name!r}")


def named_op_catalog(G: FiniteGroup) -> dict[str, BinOp]:
    return {name: named_op(G, name) for name in NAMED_OPS}


def all_binops(G: FiniteGroup) -> Iterator[BinOp]:
    """Every operation table on G, in lexicographic order of the flat table."""
    n = G.n
    for flat in itertools.product(range(n), repeat=n * n):
        yield BinOp(n=n, rows=tuple(flat[i * n:(i + 1) * n] for i in range(n)))


@dataclass(frozen=True)
class OpNearRingReport:
    """Outcome of verifying the near-ring of operation tables on a group.

    All fields up to ``left_projection_two_sided`` concern the
    substitution product; the ``diagonal_*`` fields document how the
    diagonal variant behaves instead of being silently discarded.
    """

    group_order: int
    mode: str
    triples_checked: int
    sum_group_ok: bool
    compose_associative: bool
    left_distributive: bool
    left_projection_two_sided: bool
    diagonal_associative: bool
    diagonal_left_distributive: bool
    diagonal_left_identity_failure: tuple | None
    diagonal_right_identity: bool
    failure: tuple | None

    @property
    def ok(self) -> bool:
        return (
            self.sum_group_ok
            and self.compose_associative
            and self.left_distributive
            and self.left_projection_two_sided
        )


def _flat_tables(G: FiniteGroup) -> list[tuple[int, ...]]:
    n = G.n
    return [flat for flat in itertools.product(range(n), repeat=n * n)]


def verify_binop_nearring(G: FiniteGroup, mode: str = "full", samples: int = 100_000,
                          seed: int | None = None) -> OpNearRingReport:
    """Check the near-ring axioms for the tables-on-G structure.

    mode="full" walks every triple of tables and is only feasible at
    order 2; mode="sample" draws ``samples`` seeded random triples and
    is allowed up to order 4.  The seed is mandatory in sample mode.
    """
    n = G.n
    if mode == "full":
        if n != 2:
            raise BudgetExceededError(f"full verification only at order 2, got {n}")
    elif mode == "sample":
        if n > 4:
            raise BudgetExceededError(f"sampled verification only up to order 4, got {n}")
        if seed is None:
            raise InputFormatError("sample mode requires an explicit seed")
    else:
        raise InputFormatError(f"unknown mode {mode!r}")

    add = G.table
    neg = G.neg_table
    nn = n * n
    pi1_flat = tuple(i // n for i in range(nn))

    def f_add(x, y):
        return tuple(add[x[i]][y[i]] for i in range(nn))

    def f_neg(x):
        return tuple(neg[x[i]] for i in range(nn))

    def f_cmp(x, y):
        return tuple(y[x[i] * n + i % n] for i in range(nn))

    def f_diag(x, y):
        return tuple(y[x[i] * n + x[i]] for i in range(nn))

    zero_flat = (0,) * nn

    if mode == "full":
        triples = list(itertools.product(_flat_tables(G), repeat=3))
        singles = _flat_tables(G)
    else:
        rng = random.Random(seed)
        def rand_table():
            return tuple(rng.randrange(n) for _ in range(nn))
        triples = [(rand_table(), rand_table(), rand_table()) for _ in range(samples)]
        singles = sorted({t for tr in triples for t in tr})

    sum_group_ok = True
    compose_assoc = True
    left_dist = True
    two_sided = True
    diag_assoc = True
    diag_ldist = True
    diag_right_id = True
    diag_left_fail: tuple | None = None
    failure: tuple | None = None

    for x in singles:
        if f_add(zero_flat, x) != x or f_add(x, zero_flat) != x or f_add(x, f_neg(x)) != zero_flat:
            sum_group_ok = False
            failure = failure or ("sum_identity_or_inverse", x)
        if f_cmp(pi1_flat, x) != x or f_cmp(x, pi1_flat) != x:
            two_sided = False
            failure = failure or ("left_projection_identity", x)
        if f_diag(x, pi1_flat) != x:
            diag_right_id = False
        if f_diag(pi1_flat, x) != x and diag_left_fail is None:
            diag_left_fail = ("diagonal_left_identity", x)

    for f, g, h in triples:
        if f_add(f_add(f, g), h) != f_add(f, f_add(g, h)):
            sum_group_ok = False
            failure = failure or ("sum_associativity", f, g, h)
        if f_cmp(f_cmp(f, g), h) != f_cmp(f, f_cmp(g, h)):
            compose_assoc = False
            failure = failure or ("compose_associativity", f, g, h)
        if f_cmp(f, f_add(g, h)) != f_add(f_cmp(f, g), f_cmp(f, h)):
            left_dist = False
            failure = failure or ("left_distributivity", f, g, h)
        if f_diag(f_diag(f, g), h) != f_diag(f, f_diag(g, h)):
            diag_assoc = False
        if f_diag(f, f_add(g, h)) != f_add(f_diag(f, g), f_diag(f, h)):
            diag_ldist = False

    return OpNearRingReport(
        group_order=n,
        mode=mode,
        triples_checked=len(triples),
        sum_group_ok=sum_group_ok,
        compose_associative=compose_assoc,
        left_distributive=left_dist,
        left_projection_two_sided=two_sided,
        diagonal_associative=diag_assoc,
        diagonal_left_distributive=diag_ldist,
        diagonal_left_identity_failure=diag_left_fail,
        diagonal_right_identity=diag_right_id,
        failure=failure,
    )
