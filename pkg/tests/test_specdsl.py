from __future__ import annotations

import json

import pytest

from pgroups import (
    blueprint_from_spec, load_group_file, parse_spec, save_group_file,
)
from pgroups.errors import InconsistencyError, PGroupsError, SpecSyntaxError
from pgroups.specdsl import blueprint_from_group_data


@pytest.mark.parametrize("text,order", [
    ("cyclic(3,2)", 9),
    ("dihedral(16)", 16),
    ("dp(cyclic(2,1),dihedral(8))", 16),
    ("wr(cyclic(3,1),3)", 81),
    ("iwr(2,2)", 8),
    ("sylsym(9,3)", 81),
    ("ut(3,3)", 27),
    ("sylgl(2,4,3)", 9),
    ("jordan(5,3)", 625),
    ("catalog(2,q8)", 8),
    ("catalog(2,sd16)", 16),
    ("catalog(3,mod27)", 27),
    ("dp(catalog(2,q8),cyclic(2,1))", 16),
])
def test_parse_and_build(text, order):
    bp = blueprint_from_spec(text)
    assert bp.build().order == order


def test_spec_string_is_canonical():
    bp = blueprint_from_spec("  DP( cyclic(2,1) , dihedral(8) ) ")
    assert bp.spec == "dp(cyclic(2,1),dihedral(8))"
    again = blueprint_from_spec(bp.spec)
    assert again.spec == bp.spec


def test_nested_spec_round_trip():
    text = "wr(dp(cyclic(2,1),cyclic(2,1)),2)"
    bp = blueprint_from_spec(text)
    assert bp.spec == text
    assert bp.order == 4 ** 2 * 2


@pytest.mark.parametrize("text,pos", [
    ("jordan(5,)", 9),
    ("frob(3)", 0),
    ("dp(cyclic(2,1)", 14),
    ("cyclic(2,1))", 11),
    ("", 0),
])
def test_syntax_errors_carry_position(text, pos):
    with pytest.raises(SpecSyntaxError) as err:
        blueprint_from_spec(text)
    assert f"position {pos}" in str(err.value)


def test_parse_spec_node_shape():
    node = parse_spec("dp(cyclic(2,1),dihedral(8))")
    assert node.name == "dp"
    assert len(node.args) == 2
    assert node.args[0].name == "cyclic"


def test_catalog_spec_requires_known_entry():
    with pytest.raises(PGroupsError):
        blueprint_from_spec("catalog(2,nonexistent)").build()


def test_group_file_round_trip(tmp_path):
    G = blueprint_from_spec("dihedral(8)").build()
    path = tmp_path / "d8.json"
    save_group_file(G, str(path))
    bp = load_group_file(str(path))
    H = bp.build()
    assert H.order == 8
    assert sorted(H.element_orders.tolist()) == sorted(G.element_orders.tolist())


def test_group_file_checks_declared_order(tmp_path):
    G = blueprint_from_spec("dihedral(8)").build()
    path = tmp_path / "d8.json"
    save_group_file(G, str(path))
    data = json.loads(path.read_text())
    data["order"] = 16  # wrong on purpose
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(data))
    with pytest.raises((InconsistencyError, PGroupsError)):
        load_group_file(str(bad)).build()


def test_group_file_data_without_order(tmp_path):
    G = blueprint_from_spec("dihedral(8)").build()
    path = tmp_path / "d8.json"
    save_group_file(G, str(path))
    data = json.loads(path.read_text())
    data.pop("order", None)
    bp = blueprint_from_group_data(data, "inline")
    assert bp.build().order == 8


def test_group_file_missing(tmp_path):
    with pytest.raises((PGroupsError, OSError)):
        load_group_file(str(tmp_path / "absent.json"))
