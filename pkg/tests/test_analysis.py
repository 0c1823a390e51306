from __future__ import annotations

import pytest

from pgroups import (
    all_elementary_abelians, abelian_normal_span, blueprint_from_spec,
    is_weakly_closed, lemma56_check, maximal_elementary_abelians,
    support_profile, thompson_subgroup,
)
from pgroups.errors import NotInBase, NotWreathGroup, ScanBudgetExceeded

SMALL_SPECS = [
    "dihedral(8)",
    "catalog(2,q8)",
    "catalog(2,sd16)",
    "ut(3,3)",
    "catalog(3,mod27)",
    "wr(cyclic(3,1),3)",
]


def _build(spec):
    return blueprint_from_spec(spec).build()


def _brute_maximal_eas(G):
    subs = [S for S in G.all_subgroups()
            if not S.is_trivial() and S.is_elementary_abelian()]
    return [S for S in subs
            if not any(S is not T and S.issubset(T) for T in subs)]


@pytest.mark.parametrize("spec", SMALL_SPECS)
def test_maximal_eas_match_lattice_route(spec):
    G = _build(spec)
    cat = maximal_elementary_abelians(G)
    brute = _brute_maximal_eas(G)
    got = {tuple(sorted(E.indices())) for E in cat.maximals}
    want = {tuple(sorted(E.indices())) for E in brute}
    assert got == want
    assert cat.max_rank == max(S.rank() for S in brute)


@pytest.mark.parametrize("spec", SMALL_SPECS)
def test_thompson_subgroup_definition_route(spec):
    # J(G) = <all elementary abelians of greatest rank>, recomputed here
    # from the full subgroup lattice
    G = _build(spec)
    brute = _brute_maximal_eas(G)
    top = max(S.rank() for S in brute)
    seed = []
    for S in brute:
        if S.rank() == top:
            seed.extend(S.indices())
    want = G.subgroup(sorted(set(seed)))
    J = thompson_subgroup(G)
    assert sorted(J.indices()) == sorted(want.indices())


@pytest.mark.parametrize("spec", SMALL_SPECS)
def test_all_elementary_abelians_match_lattice(spec):
    G = _build(spec)
    got = {tuple(sorted(E.indices())) for E in all_elementary_abelians(G)}
    want = {tuple(sorted(S.indices())) for S in G.all_subgroups()
            if not S.is_trivial() and S.is_elementary_abelian()}
    assert got == want


def test_all_elementary_abelians_min_rank():
    G = _build("dihedral(8)")
    assert len(all_elementary_abelians(G)) == 7       # five C2, two Klein
    assert len(all_elementary_abelians(G, min_rank=2)) == 2


def test_thompson_fixtures():
    D8 = _build("dihedral(8)")
    assert thompson_subgroup(D8).order == 8
    W = _build("wr(cyclic(3,1),3)")
    J = thompson_subgroup(W)
    B = W.named_subgroup("base")
    assert sorted(J.indices()) == sorted(B.indices())
    assert J.order == 27


def test_thompson_big_wreath_is_base():
    W = _build("wr(dp(cyclic(3,1),cyclic(3,1)),3)")
    assert W.order == 3 ** 7
    J = thompson_subgroup(W)
    B = W.named_subgroup("base")
    assert J.order == 3 ** 6
    assert B.rank() == 6
    assert sorted(J.indices()) == sorted(B.indices())


def test_weak_closure_normal_subgroups_are_closed():
    W = _build("wr(cyclic(3,1),3)")
    ok, witness = is_weakly_closed(W, W.named_subgroup("base"))
    assert ok and witness is None
    G = _build("ut(3,3)")
    ok, witness = is_weakly_closed(G, G.center)
    assert ok and witness is None


def test_weak_closure_counterexample_is_genuine():
    W = _build("wr(cyclic(3,1),3)")
    B = W.named_subgroup("base")
    v = W.subgroup([B.generators()[0]])
    ok, g = is_weakly_closed(W, v)
    assert not ok and g is not None
    conj = v.conjugate(g)
    assert sorted(conj.indices()) != sorted(v.indices())
    # the distinct conjugate commutes with v elementwise: weak closure fails
    for a in v.indices():
        for b in conj.indices():
            assert W.mul(a, b) == W.mul(b, a)


def test_noncentral_line_in_ut33_not_weakly_closed():
    G = _build("ut(3,3)")
    noncentral = next(S for S in G.all_subgroups()
                      if S.order == 3 and not S.issubset(G.center))
    ok, g = is_weakly_closed(G, noncentral)
    assert not ok


def test_abelian_normal_span():
    D8 = _build("dihedral(8)")
    span = abelian_normal_span(D8)
    assert span.order == 8
    W = _build("wr(cyclic(3,1),3)")
    spanW = abelian_normal_span(W)
    assert spanW.order == 27
    for N in W.normal_subgroups():
        if N.is_abelian():
            assert N.issubset(spanW)


def test_support_profiles():
    W = _build("wr(dihedral(8),2)")
    B = W.named_subgroup("base")
    assert support_profile(W, B) == (1, 2)
    first_copy = W.subgroup([B.generators()[0]])
    assert support_profile(W, first_copy) == (1,)
    # abelian inner group: nothing sits outside the inner centre
    V = _build("wr(cyclic(3,1),3)")
    assert support_profile(V, V.named_subgroup("base")) == ()


def test_support_profile_rejections():
    W = _build("wr(dihedral(8),2)")
    with pytest.raises(NotInBase):
        support_profile(W, W.named_subgroup("top"))
    D8 = _build("dihedral(8)")
    with pytest.raises(NotWreathGroup):
        support_profile(D8, D8.center)


def test_lemma56_fixtures():
    r = lemma56_check(_build("wr(cyclic(3,1),3)"))
    assert r.verdict == "HOLDS"
    assert r.details["subgroups_checked"] == 5
    r2 = lemma56_check(_build("ut(3,3)"))
    assert r2.verdict == "HOLDS"
    assert r2.details["subgroups_checked"] == 4


def test_lemma56_not_applicable_cases():
    # abelian group: the statement needs a nonabelian one
    r = lemma56_check(_build("cyclic(3,2)"))
    assert r.verdict == "NOT_APPLICABLE"
    # noncyclic centre
    r2 = lemma56_check(_build("dp(dihedral(8),cyclic(2,1))"))
    assert r2.verdict == "NOT_APPLICABLE"


def test_scan_budget_raises():
    G = _build("wr(cyclic(3,1),3)")
    with pytest.raises(ScanBudgetExceeded):
        all_elementary_abelians(G, budget=1)
