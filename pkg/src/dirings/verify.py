"""The full verification suite: every structural law the package claims.

Each check runs per group, produces a pass/fail/skip row, and is
independent of the others.  Checks whose cost explodes with the order
are gated and reported as skipped instead of silently dropped.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import axioms
from .binops import (
    BinOp,
    all_binops,
    named_op,
    op_sub,
    verify_binop_nearring,
)
from .diring import (
    brace_weakring_correspondence,
    check_constant_monoid,
    check_zero_symmetric_uniqueness,
    diring_parts,
    make_diring,
    roundtrip_check,
    skew_to_weak,
    skew_to_weak_raw,
    morphism_transport_check,
    weak_to_skew,
)
from .groups import FiniteGroup, group_endomorphisms, is_idempotent, kernel_image
from .omega import (
    OmegaGroup,
    all_ideals,
    algebra_endomorphisms,
    check_inner_decomposition,
    check_retraction_compatibility,
    congruence_ideal_bijection,
    endo_pair_bijection,
    ideal_intersection,
    ideal_sum,
    is_subalgebra,
    omega_from_binops,
)
from .diring import weakring_from_idempotent_endo

__all__ = ["CheckRow", "run_verification", "CHECK_NAMES"]


@dataclass(frozen=True)
class CheckRow:
    group: str
    check: str
    status: str  # pass / fail / skip
    detail: str


CHECK_NAMES = (
    "group-axioms",
    "named-op-profiles",
    "difference-decompositions",
    "skew-ring-laws",
    "near-ring-facts",
    "pair-laws",
    "conversion-roundtrip",
    "morphism-transport",
    "skew-weak-equivalence",
    "brace-lri-correspondence",
    "zero-symmetric-uniqueness",
    "constant-part-monoid",
    "idempotent-endo-weak-rings",
    "congruence-ideal-lattice",
    "retraction-equivalence",
    "decomposition-five-ways",
    "endo-pair-correspondence",
    "operation-nearring",
)

_DECOMPOSITION_PAIRS = (("pi1", "null"), ("plus", "pi2"), ("plus_op", "conj"))


def _expected_profiles(G: FiniteGroup) -> dict[str, dict[str, bool]]:
    """Axiom expectations for the six named operations.

    Degenerate truths on the trivial group and the abelian collapse of
    the conjugation table are folded in as parameters.
    """
    n1 = G.n == 1
    ab = G.is_abelian()
    return {
        "null": dict(
            associative=True, commutative=True, left_distributive=True,
            right_distributive=True, left_skew_distributive=n1, weakly_associative=True,
        ),
        "pi1": dict(
            associative=True, commutative=n1, left_distributive=n1,
            right_distributive=True, left_skew_distributive=True, weakly_associative=n1,
        ),
        "pi2": dict(
            associative=True, commutative=n1, left_distributive=True,
            right_distributive=n1, left_skew_distributive=n1, weakly_associative=True,
        ),
        "plus": dict(
            associative=True, commutative=ab, left_distributive=n1,
            right_distributive=n1, left_skew_distributive=True, weakly_associative=n1,
        ),
        "plus_op": dict(
            associative=True, commutative=ab, left_distributive=n1,
            right_distributive=n1, left_skew_distributive=True, weakly_associative=n1,
        ),
        "conj": dict(
            associative=ab, commutative=n1, left_distributive=True,
            right_distributive=n1, left_skew_distributive=n1, weakly_associative=True,
        ),
    }


def _filter_all(G: FiniteGroup, *preds) -> list[BinOp]:
    return [f for f in all_binops(G) if all(p(G, f) for p in preds)]


def run_verification(G: FiniteGroup, label: str, seed: int = 1,
                     samples: int = 100_000, budget: int | None = None) -> list[CheckRow]:
    """Run the whole suite on one group and return one row per check."""
    rows: list[CheckRow] = []

    def record(check: str, fn) -> None:
        try:
            outcome = fn()
        except Exception as exc:  # a crash is a failure, not an abort
            rows.append(CheckRow(label, check, "fail", f"error: {exc!r}"))
            return
        if outcome is None:
            rows.append(CheckRow(label, check, "skip", "out of budget for this order"))
        else:
            ok, detail = outcome
            rows.append(CheckRow(label, check, "pass" if ok else "fail", detail))

    n = G.n
    ops = {name: named_op(G, name) for name in
           ("null", "pi1", "pi2", "plus", "plus_op", "conj")}

    def check_group_axioms():
        G.revalidate()
        return True, f"order {n}"

    def check_named_profiles():
        expected = _expected_profiles(G)
        bad = []
        for name, want in expected.items():
            got = axioms.profile(G, ops[name]).flags()
            if got != want:
                diff = {k: got[k] for k in got if got[k] != want[k]}
                bad.append(f"{name}:{diff}")
        return not bad, "; ".join(bad) if bad else "6 operations match"

    def check_decompositions():
        pi1 = ops["pi1"]
        full = frozenset(range(n))
        trivial = frozenset({0})
        for i, (circ_name, dot_name) in enumerate(_DECOMPOSITION_PAIRS):
            D = make_diring(G, ops[circ_name], ops[dot_name])
            if op_sub(G, D.circ, D.dot) != pi1:
                return False, f"difference of {circ_name},{dot_name} is not the left projection"
            parts = diring_parts(D)
            want = (full, trivial) if i == 0 else (trivial, full)
            if n == 1:
                want = (trivial, trivial)
            if parts != want:
                return False, f"parts of {circ_name},{dot_name}: {parts}"
        return True, "3 decompositions"

    def check_skew_laws():
        for name in ("pi1", "plus", "plus_op"):
            rep = axioms.check_skew_ring_laws(G, ops[name])
            if not rep.ok:
                return False, f"{name}: {rep.failure}"
        return True, "pi1, plus, plus_op"

    def check_near_facts():
        for name in ("null", "pi2"):
            dot = ops[name]
            if not axioms.classify(G, dot).left_near_ring:
                return False, f"{name} does not classify as a near-ring"
            for a in range(n):
                if dot(a, 0) != 0:
                    return False, f"{name}: a.0 != 0 at {a}"
                for b in range(n):
                    if dot(a, G.neg(b)) != G.neg(dot(a, b)):
                        return False, f"{name}: a.(-b) != -(a.b) at {(a, b)}"
            zero_part, const_part = axioms.structure_parts(G, dot)
            right_zeros = frozenset(
                a for a in range(n) if all(dot(b, a) == a for b in range(n))
            )
            if const_part != right_zeros:
                return False, f"{name}: constant part is not the right zeros"
        return True, "null, pi2"

    def check_pair_laws():
        for circ_name, dot_name in _DECOMPOSITION_PAIRS:
            circ, dot = ops[circ_name], ops[dot_name]
            tag = f"{circ_name},{dot_name}"
            row0 = tuple(dot(0, b) for b in range(n))
            if any(row0[row0[b]] != row0[b] for b in range(n)):
                return False, f"{tag}: 0-row not idempotent"
            if any(circ(0, b) != dot(0, b) for b in range(n)):
                return False, f"{tag}: 0-row of circ and dot differ"
            if any(circ(a, 0) != a or dot(a, 0) != 0 for a in range(n)):
                return False, f"{tag}: 0 is not a circ right identity with null dot column"
            for a, b, c in itertools.product(range(n), repeat=3):
                if dot(circ(a, b), c) != dot(a, dot(b, c)):
                    return False, f"{tag}: mixed associativity fails at {(a, b, c)}"
            if axioms.is_left_distributive(G, dot) != axioms.is_left_skew_distributive(G, circ):
                return False, f"{tag}: distributivity transfer fails"
            if axioms.is_associative(G, circ) != axioms.is_weakly_associative(G, dot):
                return False, f"{tag}: associativity transfer fails"
        return True, "3 pairs"

    def check_roundtrip():
        mapping = {"pi1": "null", "plus": "pi2", "plus_op": "conj"}
        for circ_name, dot_name in mapping.items():
            circ, dot = ops[circ_name], ops[dot_name]
            if skew_to_weak(G, circ) != dot:
                return False, f"image of {circ_name} is not {dot_name}"
            if weak_to_skew(G, dot) != circ:
                return False, f"image of {dot_name} is not {circ_name}"
            if not roundtrip_check(G, circ, "skew-to-weak"):
                return False, f"roundtrip fails from {circ_name}"
            if not roundtrip_check(G, dot, "weak-to-skew"):
                return False, f"roundtrip fails from {dot_name}"
        return True, "3 named conversions, both directions"

    def check_transport():
        ident = tuple(range(n))
        zero = (0,) * n
        cases = [
            (ident, ops["plus"], ops["plus"]),
            (zero, ops["plus"], ops["plus"]),
            (ident, ops["plus"], ops["pi1"]),
            (zero, ops["pi1"], ops["plus_op"]),
        ]
        for f, cg, ch in cases:
            if not morphism_transport_check(G, G, f, cg, ch):
                return False, "circ and dot morphism verdicts split"
        return True, f"{len(cases)} transported maps"

    def check_skew_weak_equivalence():
        if n > 3:
            return None
        skew = _filter_all(G, axioms.is_associative, axioms.is_left_skew_distributive)
        weak = _filter_all(G, axioms.is_weakly_associative, axioms.is_left_distributive)
        if len(skew) != len(weak):
            return False, f"{len(skew)} skew vs {len(weak)} weak"
        images = {skew_to_weak_raw(G, f) for f in skew}
        if images != set(weak):
            return False, "conversion does not map the skew set onto the weak set"
        for f in skew:
            if not roundtrip_check(G, f, "skew-to-weak"):
                return False, "roundtrip is not the identity"
        return True, f"{len(skew)} structures on each side"

    def check_brace_lri():
        if n > 4:
            return None
        kwargs = {} if budget is None else {"budget": budget}
        rep = brace_weakring_correspondence(G, **kwargs)
        ok = rep.counts_match and rep.elementwise_ok
        return ok, (
            f"{rep.skew_ring_count} skew rings, {rep.brace_count} braces, "
            f"{rep.weak_ring_with_lri_count} weak rings with local right identities"
        )

    def check_uniqueness():
        if n > 4:
            return None
        kwargs = {} if budget is None else {"budget": budget}
        census = check_zero_symmetric_uniqueness(G, **kwargs)
        return census.unique_trivial_pair(G), f"{len(census.pairs)} zero-symmetric pair(s)"

    def check_constant_monoid_named():
        for circ_name, dot_name in (("plus", "pi2"), ("plus_op", "conj")):
            D = make_diring(G, ops[circ_name], ops[dot_name])
            if not check_constant_monoid(D):
                return False, f"0 is not a circ identity for {circ_name}"
        return True, "plus and plus_op pairs"

    def check_idempotent_endo():
        count = 0
        for e in group_endomorphisms(G):
            if not is_idempotent(e):
                continue
            count += 1
            dot = weakring_from_idempotent_endo(G, e)
            if not axioms.classify(G, dot).left_weak_ring:
                return False, f"table of {e} is not a weak ring"
        return True, f"{count} idempotent endomorphisms"

    def _named_omegas() -> list[tuple[str, OmegaGroup]]:
        return [
            ("pi2", omega_from_binops(G, [ops["pi2"]])),
            ("conj", omega_from_binops(G, [ops["conj"]])),
        ]

    def check_lattice():
        for op_name, A in _named_omegas():
            pairs = congruence_ideal_bijection(A)
            ideals = all_ideals(A)
            for H in ideals:
                for K in ideals:
                    s = ideal_sum(A, H, K)
                    join = min((i for i in ideals if H <= i and K <= i), key=len)
                    if s != join:
                        return False, f"{op_name}: sum is not the join for {sorted(H)},{sorted(K)}"
                    m = ideal_intersection(A, H, K)
                    meet = max((i for i in ideals if i <= H and i <= K), key=len)
                    if m != meet:
                        return False, f"{op_name}: intersection is not the meet"
            if len(pairs) != len(ideals):
                return False, f"{op_name}: {len(pairs)} congruences vs {len(ideals)} ideals"
        return True, "pi2 and conj algebras"

    def check_retraction():
        total = 0
        for op_name, A in _named_omegas():
            for e in group_endomorphisms(G):
                if not is_idempotent(e):
                    continue
                total += 1
                rep = check_retraction_compatibility(A, e)
                if not rep.sides_agree:
                    return False, f"{op_name}: sides split at {e}"
        return True, f"{total} idempotent endomorphisms examined"

    def check_five_ways():
        total = 0
        for op_name, A in _named_omegas():
            subalgebras = [
                frozenset(s)
                for r in range(n)
                for s in itertools.combinations(range(n), r + 1)
                if 0 in s and is_subalgebra(A, frozenset(s))
            ]
            for K in all_ideals(A):
                for H in subalgebras:
                    total += 1
                    rep = check_inner_decomposition(A, K, H)
                    if not rep.all_agree:
                        return False, f"{op_name}: readings split at {sorted(K)},{sorted(H)}"
        return True, f"{total} (ideal, subalgebra) pairs"

    def check_endo_pairs():
        details = []
        for op_name, A in _named_omegas():
            rep = endo_pair_bijection(A)
            details.append(
                f"{op_name}: {rep.idempotent_count} idempotent of {rep.all_endo_count} endos, "
                f"{rep.pair_count} pairs"
            )
        return True, "; ".join(details)

    def check_operation_nearring():
        if n == 2:
            rep = verify_binop_nearring(G, mode="full")
        elif n == 3:
            rep = verify_binop_nearring(G, mode="sample", samples=samples, seed=seed)
        else:
            return None
        diag_documented = rep.diagonal_right_identity and (
            n == 1 or rep.diagonal_left_identity_failure is not None
        )
        return rep.ok and diag_documented, (
            f"{rep.mode} mode, {rep.triples_checked} triples; diagonal variant "
            f"keeps associativity={rep.diagonal_associative} and loses the left identity"
        )

    record("group-axioms", check_group_axioms)
    record("named-op-profiles", check_named_profiles)
    record("difference-decompositions", check_decompositions)
    record("skew-ring-laws", check_skew_laws)
    record("near-ring-facts", check_near_facts)
    record("pair-laws", check_pair_laws)
    record("conversion-roundtrip", check_roundtrip)
    record("morphism-transport", check_transport)
    record("skew-weak-equivalence", check_skew_weak_equivalence)
    record("brace-lri-correspondence", check_brace_lri)
    record("zero-symmetric-uniqueness", check_uniqueness)
    record("constant-part-monoid", check_constant_monoid_named)
    record("idempotent-endo-weak-rings", check_idempotent_endo)
    record("congruence-ideal-lattice", check_lattice)
    record("retraction-equivalence", check_retraction)
    record("decomposition-five-ways", check_five_ways)
    record("endo-pair-correspondence", check_endo_pairs)
    record("operation-nearring", check_operation_nearring)
    return rows
