from __future__ import annotations

import math

import numpy as np
import pytest

from pgroups import (
    FiniteGroup, PermRealization, cyclic, dihedral, direct_product,
    unitriangular, catalog_entry,
)
from pgroups.errors import (
    CapExceeded, NotNormal, NotPGroup, PGroupsError, SubgroupCapExceeded,
)


def _group(bp):
    return bp.build()


@pytest.fixture(scope="module")
def d8():
    return _group(dihedral(8))


@pytest.fixture(scope="module")
def ut33():
    return _group(unitriangular(3, 3))


def test_composition_convention():
    # mul(a, b) applies a first, then b, so multiplying two words is the
    # same as evaluating their concatenation
    G = _group(dihedral(8))
    a = G.element_from_word([0])
    b = G.element_from_word([1])
    assert G.mul(a, b) == G.element_from_word([0, 1])
    assert G.mul(b, a) == G.element_from_word([1, 0])
    assert G.mul(a, b) != G.mul(b, a)  # rotation and reflection don't commute


def test_identity_and_inverses(d8):
    for g in range(d8.order):
        assert d8.mul(g, 0) == g
        assert d8.mul(0, g) == g
        assert d8.mul(g, d8.inverse(g)) == 0
        assert d8.mul(d8.inverse(g), g) == 0


def test_associativity_exhaustive(d8):
    n = d8.order
    for a in range(n):
        for b in range(n):
            for c in range(n):
                assert d8.mul(d8.mul(a, b), c) == d8.mul(a, d8.mul(b, c))


def test_d8_structure(d8):
    assert d8.order == 8
    assert d8.p == 2
    assert not d8.is_abelian()
    assert d8.exponent == 4
    assert d8.center.order == 2
    assert d8.nilpotency_class == 2
    sizes = sorted(len(c) for c in d8.conjugacy_classes)
    assert sizes == [1, 1, 2, 2, 2]
    hist = {}
    for o in d8.element_orders:
        hist[int(o)] = hist.get(int(o), 0) + 1
    assert hist == {1: 1, 2: 5, 4: 2}


def test_d8_series(d8):
    lcs = [t.order for t in d8.lower_central_series.terms]
    ucs = [t.order for t in d8.upper_central_series.terms]
    assert lcs == [8, 2, 1]
    assert ucs == [1, 2, 8]
    assert d8.lower_central_term(2).order == 2
    assert d8.lower_central_term(3).order == 1


def test_exponent_is_lcm_of_element_orders(d8, ut33):
    for G in (d8, ut33):
        want = 1
        for o in G.element_orders:
            want = math.lcm(want, int(o))
        assert G.exponent == want


def test_center_brute_force(d8, ut33):
    for G in (d8, ut33):
        central = [g for g in range(G.order)
                   if all(G.mul(g, h) == G.mul(h, g) for h in range(G.order))]
        assert sorted(G.center.indices()) == central


def test_conjugacy_classes_partition(ut33):
    seen = []
    for c in ut33.conjugacy_classes:
        assert len(c) in (1, 3)  # class sizes divide the order, centre is big
        seen.extend(c)
    assert sorted(seen) == list(range(ut33.order))


def test_commutator_identity(d8):
    for g in range(d8.order):
        for h in range(d8.order):
            want = d8.mul(d8.mul(d8.inverse(g), d8.inverse(h)), d8.mul(g, h))
            assert d8.comm(g, h) == want
            assert d8.conj(g, h) == d8.mul(d8.mul(d8.inverse(h), g), h)


def test_word_round_trip(d8, ut33):
    for G in (d8, ut33):
        for idx in range(G.order):
            w = G.word_of(idx)
            assert G.element_from_word(w) == idx


# --- subgroup lattice ------------------------------------------------------
# Frozen counts below all have independent derivations: D8 and Q8 lattices
# are textbook (10 subgroups / 6 normal; 6 subgroups all normal), the
# order-27 extraspecial group of exponent 3 has 1 + 13 + 4 + 1 = 19
# subgroups of which 1 + 1 + 4 + 1 = 7 are normal (13 = 26 order-3
# elements / 2 generators each; 4 = lines in the rank-2 quotient), and the
# modular group of order 27 has 4 maximal subgroups and Omega_1 of rank 2.

def test_d8_lattice(d8):
    subs = d8.all_subgroups()
    assert len(subs) == 10
    assert sorted(S.order for S in subs) == [1, 2, 2, 2, 2, 2, 4, 4, 4, 8]
    normals = d8.normal_subgroups()
    assert len(normals) == 6
    assert all(S.is_normal() for S in normals)


def test_q8_lattice():
    G = catalog_entry(2, "q8").blueprint().build()
    subs = G.all_subgroups()
    assert sorted(S.order for S in subs) == [1, 2, 4, 4, 4, 8]
    assert len(G.normal_subgroups()) == 6  # every subgroup is normal


def test_ut33_lattice(ut33):
    assert len(ut33.all_subgroups()) == 19
    assert len(ut33.normal_subgroups()) == 7


def test_mod27_lattice():
    G = catalog_entry(3, "mod27").blueprint().build()
    assert len(G.all_subgroups()) == 10
    assert len(G.normal_subgroups()) == 7


def _gaussian_subgroup_count(p, n):
    total = 0
    for k in range(n + 1):
        num = den = 1
        for i in range(k):
            num *= p ** (n - i) - 1
            den *= p ** (i + 1) - 1
        total += num // den
    return total


@pytest.mark.parametrize("p,n", [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2)])
def test_elementary_abelian_lattice_counts(p, n):
    bp = cyclic(p, 1)
    for _ in range(n - 1):
        bp = direct_product(bp, cyclic(p, 1))
    G = bp.build()
    subs = G.all_subgroups()
    assert len(subs) == _gaussian_subgroup_count(p, n)
    # abelian: every subgroup is normal
    assert len(G.normal_subgroups()) == len(subs)


def test_subgroup_predicates(d8):
    Z = d8.center
    assert Z.is_cyclic() and Z.is_abelian() and Z.is_normal()
    whole = d8.whole_subgroup()
    assert whole.is_whole_group() and not whole.is_abelian()
    triv = d8.trivial_subgroup()
    assert triv.is_trivial() and triv.issubset(Z) and Z.issubset(whole)
    assert not whole.issubset(Z)


def test_elementary_abelian_rank():
    G = _group(direct_product(cyclic(3, 1), cyclic(3, 1)))
    W = G.whole_subgroup()
    assert W.is_elementary_abelian()
    assert W.rank() == 2
    C9 = _group(cyclic(3, 2)).whole_subgroup()
    assert not C9.is_elementary_abelian()


def test_omega_and_agemo():
    C9 = _group(cyclic(3, 2))
    assert C9.omega1.order == 3
    assert C9.agemo.order == 3
    D8 = _group(dihedral(8))
    assert D8.omega1.order == 8  # reflections already generate everything
    assert D8.agemo.order == 2


def test_centralizer_normalizer(d8):
    s = d8.element_from_word([1])
    C = d8.centralizer([s])
    assert C.order == 4 and C.contains(s)
    H = d8.subgroup([s])
    assert H.order == 2
    N = d8.normalizer(H)
    assert N.order == 4
    assert H.issubset(N)


def test_normal_closure(d8):
    s = d8.element_from_word([1])
    K = d8.normal_closure([s])
    assert K.order == 4
    assert K.is_normal()


def test_commutator_subgroups(d8):
    whole = d8.whole_subgroup()
    derived = d8.commutator_subgroup(whole, whole)
    assert derived.order == 2
    assert derived.order == d8.lower_central_term(2).order
    r = d8.subgroup([d8.element_from_word([0])])
    s = d8.subgroup([d8.element_from_word([1])])
    assert d8.commutator_subgroup(r, s).order == 2
    # [A, B; 1] = [A, B]; iterating once more hits the centre and dies
    assert d8.iterated_commutator(whole, whole, 1).order == 2
    assert d8.iterated_commutator(whole, whole, 2).order == 1


def test_quotients(d8, ut33):
    Q, _, _ = d8.quotient(d8.center)
    assert Q.order == 4 and Q.exponent == 2  # Klein four group
    Q2, _, _ = Q.quotient(Q.center)
    assert Q2.order == 1
    H, _, _ = ut33.quotient(ut33.center)
    assert H.order == 9 and H.is_abelian() and H.exponent == 3


def test_quotient_requires_normal(d8):
    s = d8.element_from_word([1])
    with pytest.raises(NotNormal):
        d8.quotient(d8.subgroup([s]))


def test_abelian_invariants():
    # largest factor first
    G = _group(direct_product(cyclic(2, 1), cyclic(2, 2)))
    assert G.abelian_invariants() == (4, 2)
    H = _group(direct_product(cyclic(3, 1), direct_product(cyclic(3, 1), cyclic(3, 2))))
    assert H.abelian_invariants() == (9, 3, 3)


def test_enumeration_caps():
    with pytest.raises(CapExceeded):
        cyclic(2, 6).build(cap=32)
    G = _group(dihedral(16))
    with pytest.raises(SubgroupCapExceeded):
        G.all_subgroups(cap=3)


def test_rejects_non_p_group():
    with pytest.raises(NotPGroup):
        FiniteGroup(PermRealization(3), [(1, 0, 2), (1, 2, 0)], 3)


def test_rejects_wrong_degree():
    with pytest.raises(PGroupsError):
        FiniteGroup(PermRealization(4), [(1, 0, 2)], 2)


def test_enumeration_deterministic():
    A = _group(unitriangular(3, 3))
    B = _group(unitriangular(3, 3))
    assert np.array_equal(np.asarray(A.table), np.asarray(B.table))
    assert A.element_orders.tolist() == B.element_orders.tolist()
    assert [sorted(c) for c in A.conjugacy_classes] == \
        [sorted(c) for c in B.conjugacy_classes]
