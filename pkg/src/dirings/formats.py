"""JSON artifacts: groups, operation tables, multi-operation algebras.

Every emitted artifact re-parses to an equal in-memory value; loaders
re-validate, so a tampered file cannot produce an invalid structure.
"""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path
from typing import Any

from .binops import BinOp
from .errors import InputFormatError
from .groups import FiniteGroup, validate_group
from .omega import OmegaGroup, omega_group

__all__ = [
    "group_to_dict",
    "group_from_dict",
    "binop_to_dict",
    "binop_from_dict",
    "omega_to_dict",
    "omega_from_dict",
    "load_json",
    "dump_json",
    "group_from_file",
    "binop_from_file",
    "omega_from_file",
    "fixture_group",
    "FIXTURE_NAMES",
]

FIXTURE_NAMES = ("c2", "c3", "c4", "c5", "c6", "c7", "c8", "klein4", "s3")


def group_to_dict(G: FiniteGroup) -> dict[str, Any]:
    return {"order": G.n, "add": [list(row) for row in G.table]}


def group_from_dict(d: Any) -> FiniteGroup:
    if not isinstance(d, dict) or "order" not in d or "add" not in d:
        raise InputFormatError("group artifact needs 'order' and 'add'")
    add = d["add"]
    if not isinstance(add, list) or len(add) != d["order"]:
        raise InputFormatError(f"'add' must be a list of {d['order']} rows")
    return validate_group(add)


def binop_to_dict(f: BinOp) -> dict[str, Any]:
    return {"n": f.n, "table": [list(row) for row in f.rows]}


def binop_from_dict(d: Any) -> BinOp:
    if not isinstance(d, dict) or "n" not in d or "table" not in d:
        raise InputFormatError("operation artifact needs 'n' and 'table'")
    table = d["table"]
    if not isinstance(table, list) or len(table) != d["n"]:
        raise InputFormatError(f"'table' must be a list of {d['n']} rows")
    return BinOp.from_rows(table)


def omega_to_dict(A: OmegaGroup) -> dict[str, Any]:
    return {
        "group": group_to_dict(A.group),
        "ops": [{"arity": op.arity, "table": list(op.table)} for op in A.ops],
    }


def omega_from_dict(d: Any) -> OmegaGroup:
    if not isinstance(d, dict) or "group" not in d or "ops" not in d:
        raise InputFormatError("algebra artifact needs 'group' and 'ops'")
    G = group_from_dict(d["group"])
    ops = []
    for entry in d["ops"]:
        if not isinstance(entry, dict) or "arity" not in entry or "table" not in entry:
            raise InputFormatError("each op needs 'arity' and 'table'")
        ops.append((entry["arity"], entry["table"]))
    return omega_group(G, ops)


def load_json(path: str | Path) -> Any:
    try:
        with open(path) as fh:
            return json.load(fh)
    except FileNotFoundError as exc:
        raise InputFormatError(f"no such file: {path}") from exc
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"invalid JSON in {path}: {exc}") from exc


def dump_json(obj: Any, path: str | Path) -> None:
    with open(path, "w") as fh:
        json.dump(obj, fh, indent=1)
        fh.write("\n")


def group_from_file(path: str | Path) -> FiniteGroup:
    return group_from_dict(load_json(path))


def binop_from_file(path: str | Path) -> BinOp:
    return binop_from_dict(load_json(path))


def omega_from_file(path: str | Path) -> OmegaGroup:
    return omega_from_dict(load_json(path))


def fixture_group(name: str) -> FiniteGroup:
    """Load one of the shipped group files by stem name."""
    if name not in FIXTURE_NAMES:
        raise InputFormatError(f"unknown fixture {name!r}; have {', '.join(FIXTURE_NAMES)}")
    text = resources.files("dirings").joinpath(f"fixtures/{name}.json").read_text()
    return group_from_dict(json.loads(text))
