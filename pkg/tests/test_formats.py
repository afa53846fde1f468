"""JSON round-trips for groups, operation tables and algebras."""

import json

import pytest

from dirings.binops import named_op
from dirings.errors import InputFormatError
from dirings.formats import (
    FIXTURE_NAMES,
    binop_from_dict,
    binop_from_file,
    binop_to_dict,
    dump_json,
    fixture_group,
    group_from_dict,
    group_from_file,
    group_to_dict,
    load_json,
    omega_from_dict,
    omega_to_dict,
)
from dirings.groups import standard_group
from dirings.omega import omega_from_binops


def test_group_round_trip(tmp_path, s3):
    d = group_to_dict(s3)
    assert d["order"] == 6
    assert group_from_dict(d) == s3
    path = tmp_path / "s3.json"
    dump_json(d, path)
    assert group_from_file(path) == s3


def test_binop_round_trip(tmp_path, c4):
    f = named_op(c4, "conj")
    d = binop_to_dict(f)
    assert d["n"] == 4
    assert binop_from_dict(d) == f
    path = tmp_path / "conj.json"
    dump_json(d, path)
    assert binop_from_file(path) == f


def test_omega_round_trip(c4):
    A = omega_from_binops(c4, [named_op(c4, "pi2"), named_op(c4, "null")])
    d = omega_to_dict(A)
    B = omega_from_dict(d)
    assert B.group == A.group
    assert B.ops == A.ops


def test_fixture_groups_load_and_validate():
    for name in FIXTURE_NAMES:
        G = fixture_group(name)
        G.revalidate()
    assert fixture_group("s3") == standard_group("s3")
    assert fixture_group("klein4") == standard_group("klein4")
    assert fixture_group("c7").n == 7


def test_unknown_fixture_rejected():
    with pytest.raises(InputFormatError):
        fixture_group("c9999")


def test_malformed_group_dict():
    with pytest.raises(InputFormatError):
        group_from_dict({"order": 2})
    with pytest.raises(InputFormatError):
        group_from_dict({"add": [[0, 1], [1, 0]]})
    with pytest.raises(InputFormatError):
        group_from_dict({"order": 3, "add": [[0, 1], [1, 0]]})


def test_malformed_binop_dict():
    with pytest.raises(InputFormatError):
        binop_from_dict({"n": 2})
    with pytest.raises(InputFormatError):
        binop_from_dict({"n": 2, "table": [[0, 1]]})


def test_malformed_json_file(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    with pytest.raises(InputFormatError):
        load_json(path)


def test_dump_is_plain_json(tmp_path, c2):
    path = tmp_path / "c2.json"
    dump_json(group_to_dict(c2), path)
    with open(path) as fh:
        raw = json.load(fh)
    assert raw == {"order": 2, "add": [[0, 1], [1, 0]]}
