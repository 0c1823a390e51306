from __future__ import annotations

from collections import Counter

import pytest

from pgroups import blueprint_from_spec, catalog_entry, load_catalog
from pgroups.errors import PGroupsError

# Classical counts of groups of each p-power order.  The bundled tables are
# complete through 16 (p = 2) and 81 (p = 3); at 32, 64 and 243 they are
# honest partial lists whose entries are pairwise distinguished during the
# build, so the count can only be <= the classical value.
_KNOWN_COUNTS = {2: {2: 1, 4: 2, 8: 5, 16: 14, 32: 51, 64: 267},
                 3: {3: 1, 9: 2, 27: 5, 81: 15, 243: 67}}
_COMPLETE_UP_TO = {2: 16, 3: 81}


@pytest.mark.parametrize("p", [2, 3])
def test_catalog_counts(p):
    entries = load_catalog(p)
    got = Counter(e.order for e in entries)
    for order, known in _KNOWN_COUNTS[p].items():
        if order <= _COMPLETE_UP_TO[p]:
            assert got[order] == known, f"order {order}"
        else:
            assert 0 < got[order] <= known, f"order {order}"


@pytest.mark.parametrize("p", [2, 3])
def test_every_entry_builds_to_its_claims(p):
    for e in load_catalog(p):
        G = e.blueprint().build()
        assert G.order == e.order, e.name
        assert G.p == p, e.name
        inv = e.invariants
        assert G.center.order == inv["center_order"], e.name
        assert G.exponent == inv["exponent"], e.name
        assert G.nilpotency_class == inv["class"], e.name
        assert G.lower_central_term(2).order == inv["derived_order"], e.name
        assert G.omega1.order == inv["omega_order"], e.name
        assert G.agemo.order == inv["agemo_order"], e.name
        assert list(G.quotient(G.lower_central_term(2))[0].abelian_invariants()) \
            == list(inv["abelianization"]), e.name


@pytest.mark.parametrize("p", [2, 3])
def test_names_unique_and_orders_sorted(p):
    entries = load_catalog(p)
    names = [e.name for e in entries]
    assert len(names) == len(set(names))
    orders = [e.order for e in entries]
    assert orders == sorted(orders)


def test_named_lookup():
    e = catalog_entry(2, "q8")
    assert e.order == 8
    G = e.blueprint().build()
    # quaternion: a unique involution
    assert sum(1 for o in G.element_orders if int(o) == 2) == 1
    with pytest.raises(PGroupsError):
        catalog_entry(2, "no_such_group")
    with pytest.raises(PGroupsError):
        load_catalog(5)


def test_catalog_blueprint_spec_round_trips():
    e = catalog_entry(3, "mod27")
    bp = e.blueprint()
    assert bp.spec == "catalog(3,mod27)"
    again = blueprint_from_spec(bp.spec)
    assert again.build().order == 27


def test_well_known_members_present():
    names2 = {e.name for e in load_catalog(2)}
    for name in ("c2", "q8", "d8", "d16", "q16", "sd16"):
        assert name in names2, name
    names3 = {e.name for e in load_catalog(3)}
    assert "mod27" in names3
    # extraspecial exponent-3 group of order 27 appears as ut3_3
    assert "ut3_3" in names3
