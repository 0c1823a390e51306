from __future__ import annotations

import pytest

from pgroups import (
    admitting_set, blueprint_from_spec, check_y1, is_k_chain, load_catalog,
    thm19_conditions, thompson_subgroup, x_subgroup, y_certificate,
    y_subgroup,
)
from pgroups.errors import CapExceeded


def _build(spec):
    return blueprint_from_spec(spec).build()


# --- fixture values --------------------------------------------------------

def test_d8_series_orders():
    S = _build("dihedral(8)")
    assert y_subgroup(S).order == 8
    assert x_subgroup(S).order == 2
    assert x_subgroup(S).issubset(y_subgroup(S))


def test_jordan_series_orders():
    S = _build("jordan(5,3)")
    Y = y_subgroup(S)
    X = x_subgroup(S)
    assert Y.order == 125
    assert Y.is_elementary_abelian() and Y.rank() == 3
    assert X.order == 625
    assert X.is_whole_group()
    assert Y.issubset(X)


@pytest.mark.parametrize("spec,order", [
    ("sylsym(9,3)", 27),
    ("ut(3,3)", 27),
    ("catalog(3,mod27)", 27),
])
def test_p3_fixture_orders(spec, order):
    S = _build(spec)
    assert y_subgroup(S).order == order
    assert x_subgroup(S).order == order


def test_odd_prime_x_equals_y_when_k_matches():
    # at p = 3 both series use k = 2, so the subgroups coincide
    for e in load_catalog(3):
        if e.order > 81:
            continue
        S = e.blueprint().build()
        Y = y_subgroup(S)
        X = x_subgroup(S)
        assert sorted(Y.indices()) == sorted(X.indices()), e.name


# --- structural properties -------------------------------------------------

SPECS = ["dihedral(8)", "catalog(2,q8)", "ut(3,3)", "catalog(3,mod27)",
         "wr(cyclic(3,1),3)", "jordan(5,3)"]


@pytest.mark.parametrize("spec", SPECS)
def test_y_and_x_are_normal_and_contain_centre(spec):
    S = _build(spec)
    for T in (y_subgroup(S), x_subgroup(S)):
        assert T.is_normal()
        assert S.center.issubset(T)


@pytest.mark.parametrize("spec", SPECS)
def test_abelian_normals_lie_in_y(spec):
    S = _build(spec)
    Y = y_subgroup(S)
    for N in S.normal_subgroups():
        if N.is_abelian():
            assert N.issubset(Y)


@pytest.mark.parametrize("spec", SPECS)
def test_thompson_subgroup_lies_in_y(spec):
    S = _build(spec)
    assert thompson_subgroup(S).issubset(y_subgroup(S))


@pytest.mark.parametrize("spec", ["dihedral(8)", "ut(3,3)", "jordan(5,3)"])
def test_admitting_sets_grow_with_k(spec):
    S = _build(spec)
    prev = None
    for k in (1, 2, 3, 4):
        got = {tuple(sorted(N.indices())) for N in admitting_set(S, k)}
        if prev is not None:
            assert prev <= got
        prev = got


def test_y_is_largest_admitting():
    S = _build("ut(3,3)")
    adm = admitting_set(S, 2)
    Y = y_subgroup(S)
    assert max(N.order for N in adm) == Y.order
    for N in adm:
        assert N.issubset(Y)


def test_d8_x_route_through_admitting_set():
    S = _build("dihedral(8)")
    assert sorted(N.order for N in admitting_set(S, 1)) == [1, 2]
    assert sorted(N.order for N in admitting_set(S, 2)) == [1, 2, 4, 4, 4, 8]


@pytest.mark.parametrize("spec", ["dihedral(8)", "catalog(2,q8)",
                                  "catalog(2,sd16)", "dihedral(16)"])
def test_p2_shortcut_agrees_with_dp_route(spec):
    S = _build(spec)
    a = y_subgroup(S)
    b = y_subgroup(S, force_dp=True)
    assert sorted(a.indices()) == sorted(b.indices())
    assert a.is_whole_group()  # 2-groups always satisfy Y(S) = S


# --- certificates ----------------------------------------------------------

@pytest.mark.parametrize("spec", ["dihedral(8)", "ut(3,3)", "jordan(5,3)"])
def test_y_certificate_is_valid_chain(spec):
    S = _build(spec)
    cert = y_certificate(S)
    assert cert.k == 2
    orders = [t.order for t in cert.terms]
    assert orders[0] == 1
    assert orders == sorted(orders)
    assert orders[-1] == y_subgroup(S).order
    for t in cert.terms:
        assert t.is_normal()
    ok, bad = is_k_chain(S, cert.terms, cert.k)
    assert ok and bad is None
    w = cert.to_witness(S)
    assert w["k"] == 2
    assert len(w["chain"]) == len(cert.terms)


def test_bad_chain_is_rejected_with_index():
    S = _build("jordan(5,3)")
    chain = [S.trivial_subgroup(), S.whole_subgroup()]
    ok, bad = is_k_chain(S, chain, 1)
    assert not ok
    assert bad == 1


# --- the nontriviality check ----------------------------------------------

def test_check_y1_direct():
    r = check_y1(blueprint_from_spec("dihedral(8)"))
    assert r.verdict == "HOLDS"
    assert r.details["mode"] == "direct"
    assert r.details["y_order"] == 8
    r2 = check_y1(blueprint_from_spec("ut(3,3)"))
    assert r2.verdict == "HOLDS"
    assert r2.details["y_order"] == 27


def test_check_y1_trivial_group():
    r = check_y1(blueprint_from_spec("cyclic(3,0)"))
    assert r.verdict == "HOLDS"
    assert r.details["group_order"] == 1


def test_check_y1_certificate_mode():
    r = check_y1(blueprint_from_spec("sylsym(27,3)"), mode="certificate")
    assert r.verdict == "HOLDS"
    assert r.details["mode"] == "certificate"
    assert any("elementary abelian" in v for v in r.details["verified"])
    # blueprint without a Thompson description cannot be certified
    r2 = check_y1(blueprint_from_spec("ut(3,3)"), mode="certificate")
    assert r2.verdict == "INCONCLUSIVE"


def test_check_y1_auto_prefers_direct_at_desk_scale():
    r = check_y1(blueprint_from_spec("sylsym(9,3)"), mode="auto")
    assert r.verdict == "HOLDS"
    assert r.details["mode"] == "direct"
    assert r.details["y_order"] == 27


def test_check_y1_element_cap_surfaces():
    with pytest.raises(CapExceeded):
        check_y1(blueprint_from_spec("dihedral(8)"), element_cap=4)


# --- equivalence-of-conditions instances -----------------------------------

def test_thm19_conditions_d8():
    r = thm19_conditions(_build("dihedral(8)"))
    assert r.verdict == "HOLDS"
    d = r.details
    assert d["cond1_generated_by_abelian_normals"] is True
    assert d["cond2_y_is_whole_group"] is True
    assert d["cond3_socle_match"] is True


def test_thm19_conditions_jordan():
    # all three conditions fail together, so the equivalence still holds
    r = thm19_conditions(_build("jordan(5,3)"))
    assert r.verdict == "HOLDS"
    d = r.details
    assert d["cond1_generated_by_abelian_normals"] is False
    assert d["cond2_y_is_whole_group"] is False
    assert d["cond3_socle_match"] is False
    assert d["socle_of_center_of_y"] == 125
    assert d["socle_of_center"] == 5
