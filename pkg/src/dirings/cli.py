"""Command line interface.

Exit codes: 0 when every requested check passes, 1 when a verified
property fails, 2 for unusable input or configuration.  The
DIRINGS_BUDGET environment variable overrides the default search node
budget; --budget overrides both.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from . import axioms
from .binops import named_op_catalog
from .diring import skew_to_weak, skew_to_weak_raw, weak_to_skew, weak_to_skew_raw
from .errors import BijectionFailureError, DiringsError, InputFormatError
from .formats import (
    binop_from_file,
    binop_to_dict,
    dump_json,
    group_from_file,
    group_to_dict,
    load_json,
)
from .groups import FiniteGroup, standard_group
from .omega import (
    OmegaGroup,
    all_congruences,
    all_ideals,
    congruence_ideal_bijection,
    is_ideal,
    omega_group,
)
from .search import (
    DEFAULT_BUDGET,
    SEARCH_CONSTRAINTS,
    PairSearchResult,
    SearchResult,
    SearchSpec,
    enumerate_binops,
    enumerate_dirings,
)
from .verify import CheckRow, run_verification

__all__ = ["main", "RunConfig"]

_REQUIRE_ALIASES = {
    "assoc": "associative",
    "ldist": "left_distributive",
    "lskew": "left_skew_distributive",
    "skew": "left_skew_distributive",
    "wassoc": "weakly_associative",
    "group0": "group_with_zero_identity",
    "zsym": "zero_symmetric",
}
for _c in SEARCH_CONSTRAINTS:
    _REQUIRE_ALIASES[_c] = _c


@dataclass(frozen=True)
class RunConfig:
    """Options shared by the report-style commands."""

    fmt: str = "json"
    seed: int = 1
    budget: int = DEFAULT_BUDGET
    workers: int = 1
    report_dir: Path | None = None


def _config(args: argparse.Namespace) -> RunConfig:
    budget = getattr(args, "budget", None)
    if budget is None:
        env = os.environ.get("DIRINGS_BUDGET")
        if env is not None:
            try:
                budget = int(env)
            except ValueError as exc:
                raise InputFormatError(f"DIRINGS_BUDGET must be an integer, got {env!r}") from exc
        else:
            budget = DEFAULT_BUDGET
    report_dir = getattr(args, "report_dir", None)
    return RunConfig(
        fmt=getattr(args, "format", "json"),
        seed=getattr(args, "seed", 1),
        budget=budget,
        workers=getattr(args, "workers", 1),
        report_dir=Path(report_dir) if report_dir else None,
    )


def _load_group(value: str) -> tuple[FiniteGroup, str]:
    """A group file path, or a standard-group name like c4, klein4, d5, s3."""
    p = Path(value)
    if p.exists():
        return group_from_file(p), p.stem
    return standard_group(value), value


def _emit_json(obj) -> None:
    print(json.dumps(obj, indent=1))


def _emit_kv_table(pairs) -> None:
    width = max(len(str(k)) for k, _ in pairs)
    for k, v in pairs:
        print(f"{str(k):<{width}}  {v}")


def _emit_rows_table(header, rows) -> None:
    widths = [len(h) for h in header]
    rendered = [[str(c) for c in row] for row in rows]
    for row in rendered:
        widths = [max(w, len(c)) for w, c in zip(widths, row)]
    fmt = "  ".join(f"{{:<{w}}}" for w in widths)
    print(fmt.format(*header))
    print(fmt.format(*("-" * w for w in widths)))
    for row in rendered:
        print(fmt.format(*row))


def _classification_payload(G: FiniteGroup, f) -> dict:
    prof = axioms.profile(G, f)
    cls = axioms.classify(G, f)
    return {
        "order": G.n,
        "profile": prof.flags(),
        "witnesses": {k: list(v) for k, v in sorted(prof.witnesses.items())},
        "structure": cls.flags(),
    }


def cmd_classify(args: argparse.Namespace) -> int:
    G, _ = _load_group(args.group)
    f = binop_from_file(args.op)
    payload = _classification_payload(G, f)
    if args.format == "json":
        _emit_json(payload)
    else:
        pairs = [("order", payload["order"])]
        pairs += list(payload["profile"].items())
        pairs += list(payload["structure"].items())
        _emit_kv_table(pairs)
    return 0


def cmd_profile(args: argparse.Namespace) -> int:
    G, _ = _load_group(args.group)
    f = binop_from_file(args.op)
    payload = _classification_payload(G, f)
    del payload["structure"]
    if args.format == "json":
        _emit_json(payload)
    else:
        _emit_kv_table([("order", payload["order"])] + list(payload["profile"].items()))
    return 0


def cmd_convert(args: argparse.Namespace) -> int:
    G, _ = _load_group(args.group)
    f = binop_from_file(args.op)
    if args.direction == "skew-to-weak":
        out = skew_to_weak_raw(G, f) if args.unchecked else skew_to_weak(G, f)
    else:
        out = weak_to_skew_raw(G, f) if args.unchecked else weak_to_skew(G, f)
    payload = binop_to_dict(out)
    if args.out:
        dump_json(payload, args.out)
    else:
        _emit_json(payload)
    return 0


def _load_algebra(G: FiniteGroup, ops_path: str | None) -> OmegaGroup:
    if ops_path is None:
        return omega_group(G, [])
    data = load_json(ops_path)
    if isinstance(data, dict) and "ops" in data:
        entries = data["ops"]
    elif isinstance(data, dict) and "table" in data:
        entries = [data]
    elif isinstance(data, list):
        entries = data
    else:
        raise InputFormatError("ops file must hold an op list, an {'ops': [...]} object, or one table")
    ops = []
    for entry in entries:
        if "arity" in entry:
            ops.append((entry["arity"], entry["table"]))
        else:
            rows = entry["table"]
            ops.append((2, [v for row in rows for v in row]))
    return omega_group(G, ops)


def cmd_ideals(args: argparse.Namespace, cfg: RunConfig) -> int:
    G, label = _load_group(args.group)
    A = _load_algebra(G, args.ops)
    ideals = all_ideals(A)
    congruences = all_congruences(A)
    try:
        congruence_ideal_bijection(A)
        bijection_ok = True
        bijection_error = None
    except BijectionFailureError as exc:
        bijection_ok = False
        bijection_error = str(exc)

    specialized = None
    if len(A.ops) == 1 and A.ops[0].arity == 2:
        from .binops import BinOp

        n = G.n
        flat = A.ops[0].table
        f = BinOp(n=n, rows=tuple(flat[i * n:(i + 1) * n] for i in range(n)))
        cls = axioms.classify(G, f)
        candidates = [frozenset(s) for s in _zero_subsets(n)]
        if cls.left_near_ring:
            agree = all(
                is_ideal(A, S) == axioms.nearring_ideal_check(G, f, S) for S in candidates
            )
            specialized = {"kind": "left_near_ring", "agrees_with_generic": agree}
        elif cls.left_skew_ring:
            agree = all(
                is_ideal(A, S) == axioms.skewring_ideal_check(G, f, S) for S in candidates
            )
            specialized = {"kind": "left_skew_ring", "agrees_with_generic": agree}

    payload = {
        "group": label,
        "order": G.n,
        "ideal_count": len(ideals),
        "congruence_count": len(congruences),
        "ideals": [sorted(s) for s in ideals],
        "congruences": [list(p.ids) for p in congruences],
        "bijection_ok": bijection_ok,
        "bijection_error": bijection_error,
        "specialized_ideal_check": specialized,
    }
    def matching_ids(s):
        if not bijection_ok:
            return "-"
        return " ".join(map(str, _by_zero_class(congruences, s).ids))

    if cfg.fmt == "json":
        _emit_json(payload)
    else:
        _emit_rows_table(
            ["ideal", "congruence_ids"],
            [("{" + ",".join(map(str, sorted(s))) + "}", matching_ids(s)) for s in ideals],
        )
        print(f"bijection_ok: {bijection_ok}")

    if cfg.report_dir is not None:
        cfg.report_dir.mkdir(parents=True, exist_ok=True)
        from .report import ideal_lattice_figure, write_csv

        write_csv(
            cfg.report_dir / "ideals_report.csv",
            ["ideal", "size", "congruence_ids"],
            [(" ".join(map(str, sorted(s))), len(s), matching_ids(s)) for s in ideals],
        )
        ideal_lattice_figure(
            cfg.report_dir / "ideals_lattice.png", ideals, title=f"ideal lattice of {label}"
        )

    ok = bijection_ok and (specialized is None or specialized["agrees_with_generic"])
    return 0 if ok else 1


def _zero_subsets(n: int):
    import itertools

    rest = range(1, n)
    for r in range(n):
        for extra in itertools.combinations(rest, r):
            yield (0,) + extra


def _by_zero_class(congruences, zero_class):
    for p in congruences:
        if p.zero_class() == zero_class:
            return p
    raise BijectionFailureError(f"no congruence with zero class {sorted(zero_class)}")


def cmd_catalog(args: argparse.Namespace) -> int:
    G, label = _load_group(args.group)
    payload = {
        "group": group_to_dict(G),
        "ops": {name: binop_to_dict(f) for name, f in named_op_catalog(G).items()},
    }
    if args.out:
        dump_json(payload, args.out)
    else:
        _emit_json(payload)
    return 0


def cmd_enumerate(args: argparse.Namespace, cfg: RunConfig) -> int:
    G, label = _load_group(args.group)
    require = []
    if args.require:
        for token in args.require.split(","):
            token = token.strip()
            if token not in _REQUIRE_ALIASES:
                raise InputFormatError(
                    f"unknown constraint {token!r}; known: {', '.join(sorted(set(_REQUIRE_ALIASES)))}"
                )
            require.append(_REQUIRE_ALIASES[token])
    spec = SearchSpec(
        group=G,
        constraints=tuple(dict.fromkeys(require)),
        budget=cfg.budget,
        dedup="up_to_aut" if args.upto_aut else "labeled",
        workers=cfg.workers,
    )
    result: SearchResult | PairSearchResult
    if args.pairs:
        result = enumerate_dirings(spec)
        found = [
            {"circ": [list(r) for r in circ.rows], "dot": [list(r) for r in dot.rows]}
            for circ, dot in result.pairs
        ]
        tables_for_census = [dot for _, dot in result.pairs]
    else:
        result = enumerate_binops(spec)
        found = [[list(r) for r in f.rows] for f in result.tables]
        tables_for_census = list(result.tables)

    census = {
        name: sum(1 for f in tables_for_census if getattr(axioms.profile(G, f), name))
        for name in (
            "associative",
            "commutative",
            "left_distributive",
            "right_distributive",
            "left_skew_distributive",
            "weakly_associative",
        )
    }
    payload = {
        "group": label,
        "order": G.n,
        "require": list(spec.constraints),
        "pairs": bool(args.pairs),
        "dedup": spec.dedup,
        "count": len(found),
        "nodes_explored": result.nodes_explored,
        "complete": result.complete,
        "census": census,
        "tables": found,
    }
    if cfg.fmt == "json":
        _emit_json(payload)
    else:
        meta = [(k, payload[k]) for k in ("group", "order", "count", "nodes_explored", "complete")]
        _emit_kv_table(meta + list(census.items()))

    if cfg.report_dir is not None:
        cfg.report_dir.mkdir(parents=True, exist_ok=True)
        from .report import census_figure, write_csv

        if args.pairs:
            rows = [
                (" ".join(map(str, circ.flat())), " ".join(map(str, dot.flat())))
                for circ, dot in result.pairs
            ]
            write_csv(cfg.report_dir / "enumerate_report.csv", ["circ", "dot"], rows)
        else:
            write_csv(
                cfg.report_dir / "enumerate_report.csv",
                ["table"],
                [(" ".join(map(str, f.flat())),) for f in result.tables],
            )
        census_figure(
            cfg.report_dir / "enumerate_census.png",
            census,
            title=f"axiom census of {len(found)} tables on {label}",
        )
    return 0


def cmd_verify(args: argparse.Namespace, cfg: RunConfig) -> int:
    names = args.group or ["c2", "c3", "c4", "klein4", "s3"]
    rows: list[CheckRow] = []
    for name in names:
        G, label = _load_group(name)
        rows.extend(
            run_verification(G, label, seed=cfg.seed, samples=args.samples, budget=cfg.budget)
        )

    failed = [r for r in rows if r.status == "fail"]
    if cfg.fmt == "json":
        _emit_json(
            {
                "groups": names,
                "seed": cfg.seed,
                "checks": [
                    {"group": r.group, "check": r.check, "status": r.status, "detail": r.detail}
                    for r in rows
                ],
                "failures": len(failed),
            }
        )
    else:
        _emit_rows_table(
            ["group", "check", "status", "detail"],
            [(r.group, r.check, r.status, r.detail) for r in rows],
        )
        print(f"\n{len(rows)} checks, {len(failed)} failures")

    if cfg.report_dir is not None:
        cfg.report_dir.mkdir(parents=True, exist_ok=True)
        from .report import verification_csv, verification_figure

        verification_csv(cfg.report_dir / "verify_report.csv", rows)
        verification_figure(cfg.report_dir / "verify_status.png", rows)
    return 1 if failed else 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dirings",
        description="finite table algebra: classify, convert, enumerate, verify",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("json", "table"), default="json")

    p = sub.add_parser("classify", help="axiom profile and structure flags of one operation")
    p.add_argument("--group", required=True, help="group file or standard name")
    p.add_argument("--op", required=True, help="operation table file")
    add_format(p)

    p = sub.add_parser("profile", help="axiom profile of one operation")
    p.add_argument("--group", required=True)
    p.add_argument("--op", required=True)
    add_format(p)

    p = sub.add_parser("convert", help="translate between the skew and weak presentation")
    p.add_argument("--direction", required=True, choices=("skew-to-weak", "weak-to-skew"))
    p.add_argument("--group", required=True)
    p.add_argument("--op", required=True)
    p.add_argument("--out", help="write the converted table here instead of stdout")
    p.add_argument("--unchecked", action="store_true", help="apply the raw table map without structure checks")

    p = sub.add_parser("ideals", help="ideal and congruence lattices of an algebra")
    p.add_argument("--group", required=True)
    p.add_argument("--ops", help="extra operations file (op list or single table)")
    p.add_argument("--report-dir", help="write CSV and figures here")
    add_format(p)

    p = sub.add_parser("catalog", help="emit the six named operation tables for a group")
    p.add_argument("--group", required=True)
    p.add_argument("--out")

    p = sub.add_parser("enumerate", help="enumerate tables satisfying constraints")
    p.add_argument("--group", required=True)
    p.add_argument("--require", help="comma separated constraints, e.g. assoc,ldist")
    p.add_argument("--pairs", action="store_true", help="enumerate operation pairs instead of single tables")
    p.add_argument("--upto-aut", action="store_true", dest="upto_aut",
                   help="keep one representative per automorphism orbit")
    p.add_argument("--budget", type=int)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--report-dir", help="write CSV and figures here")
    add_format(p)

    p = sub.add_parser("verify-paper", aliases=["verify"],
                       help="run the full verification suite on the given groups")
    p.add_argument("--group", action="append", help="group file or standard name; repeatable")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--samples", type=int, default=100_000,
                   help="sampled triples for the order-3 operation near-ring check")
    p.add_argument("--budget", type=int)
    p.add_argument("--report-dir", help="write CSV and figures here")
    add_format(p)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config(args)
        if args.command == "classify":
            return cmd_classify(args)
        if args.command == "profile":
            return cmd_profile(args)
        if args.command == "convert":
            return cmd_convert(args)
        if args.command == "ideals":
            return cmd_ideals(args, cfg)
        if args.command == "catalog":
            return cmd_catalog(args)
        if args.command == "enumerate":
            return cmd_enumerate(args, cfg)
        if args.command in ("verify-paper", "verify"):
            return cmd_verify(args, cfg)
        raise InputFormatError(f"unknown command {args.command!r}")
    except DiringsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
