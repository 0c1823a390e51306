from __future__ import annotations

import pytest

from pgroups import (
    FiniteGroup, MatRealization, cyclic, dihedral, direct_product,
    gf, iterated_wreath, jordan_extension, nij_generators, sylow_gl_coprime,
    sylow_symmetric, unitriangular, wreath_cyclic,
)
from pgroups.errors import CapExceeded, OddPrimeRequired, PGroupsError


def _vp_factorial(n, p):
    # Legendre: v_p(n!) = sum floor(n / p^i)
    total, q = 0, p
    while q <= n:
        total += n // q
        q *= p
    return total


def _p_part(m, p):
    out = 1
    while m % p == 0:
        m //= p
        out *= p
    return out


# --- order formulas, formula route vs enumeration route --------------------

@pytest.mark.parametrize("n,p", [
    (n, p) for p in (2, 3, 5) for n in range(1, 31)
])
def test_sylow_symmetric_order_formula(n, p):
    bp = sylow_symmetric(n, p)
    assert bp.order == p ** _vp_factorial(n, p)


@pytest.mark.parametrize("n,p", [
    (4, 2), (6, 2), (8, 2), (9, 3), (12, 3), (10, 5), (25, 5),
])
def test_sylow_symmetric_order_by_enumeration(n, p):
    bp = sylow_symmetric(n, p)
    if bp.order <= 4096:
        G = bp.build()
        assert G.order == bp.order
        assert G.exponent % p == 0


@pytest.mark.parametrize("n,q", [(2, 2), (2, 3), (3, 2), (3, 3), (3, 4), (4, 2), (4, 3)])
def test_unitriangular_order(n, q):
    bp = unitriangular(n, q)
    assert bp.order == q ** (n * (n - 1) // 2)
    G = bp.build()
    assert G.order == bp.order


@pytest.mark.parametrize("n,q", [(1, 2), (1, 4), (2, 2), (2, 4), (2, 5), (3, 2), (3, 4), (3, 5)])
def test_sylow_gl_coprime_order(n, q):
    # |GL_n(q)| = prod(q^n - q^i); the construction must hit its 3-part
    order = 1
    for i in range(n):
        order *= q ** n - q ** i
    want = _p_part(order, 3)
    bp = sylow_gl_coprime(n, q, 3)
    assert bp.order == want
    if want <= 1000:
        assert bp.build().order == want


def test_sylow_gl_coprime_needs_odd_p():
    with pytest.raises(OddPrimeRequired):
        sylow_gl_coprime(2, 3, 2)


def test_sylow_gl_coprime_rejects_dividing_q():
    with pytest.raises(PGroupsError):
        sylow_gl_coprime(2, 9, 3)


# --- individual constructors ----------------------------------------------

def test_cyclic():
    G = cyclic(3, 2).build()
    assert G.order == 9
    assert G.exponent == 9
    assert G.is_abelian()
    assert G.abelian_invariants() == (9,)


def test_cyclic_rejects_composite_prime():
    with pytest.raises(PGroupsError):
        cyclic(4, 1)
    assert cyclic(3, 0).build().order == 1  # trivial group is allowed


def test_dihedral():
    G = dihedral(16).build()
    assert G.order == 16
    assert not G.is_abelian()
    assert G.center.order == 2
    assert G.nilpotency_class == 3
    with pytest.raises(PGroupsError):
        dihedral(12)  # not a 2-power
    with pytest.raises(PGroupsError):
        dihedral(4)


def test_direct_product():
    bp = direct_product(cyclic(2, 1), dihedral(8))
    G = bp.build()
    assert G.order == 16
    L = G.named_subgroup("left")
    R = G.named_subgroup("right")
    assert L.order == 2 and R.order == 8
    # factors commute elementwise
    for a in L.indices():
        for b in R.indices():
            assert G.mul(a, b) == G.mul(b, a)


def test_direct_product_prime_mismatch():
    with pytest.raises(PGroupsError):
        direct_product(cyclic(2, 1), cyclic(3, 1))


def test_wreath_cyclic():
    bp = wreath_cyclic(cyclic(3, 1), 3)
    G = bp.build()
    assert G.order == 81
    B = G.named_subgroup("base")
    T = G.named_subgroup("top")
    assert B.order == 27 and B.is_elementary_abelian() and B.rank() == 3
    assert T.order == 3
    assert B.is_normal()
    # larger inner group: |inner|^p * p
    assert wreath_cyclic(dihedral(8), 2).order == 8 ** 2 * 2


def test_iterated_wreath():
    assert iterated_wreath(2, 1).order == 2
    assert iterated_wreath(2, 2).order == 8
    assert iterated_wreath(2, 3).order == 128
    assert iterated_wreath(3, 2).order == 81
    G = iterated_wreath(2, 2).build()
    # C2 wr C2 is dihedral of order 8
    assert not G.is_abelian()
    assert G.center.order == 2
    assert sorted(int(o) for o in G.element_orders) == [1, 2, 2, 2, 2, 2, 4, 4]


def test_sylow_symmetric_matches_iterated_wreath_at_powers():
    # Syl_p(S_{p^r}) is the r-fold iterated wreath product
    assert sylow_symmetric(4, 2).order == iterated_wreath(2, 2).order
    assert sylow_symmetric(8, 2).order == iterated_wreath(2, 3).order
    assert sylow_symmetric(9, 3).order == iterated_wreath(3, 2).order
    A = sylow_symmetric(9, 3).build()
    B = iterated_wreath(3, 2).build()
    assert A.order == B.order == 81
    assert sorted(A.element_orders.tolist()) == sorted(B.element_orders.tolist())


def test_sylow_symmetric_carries_hint():
    assert sylow_symmetric(9, 3).hint is not None
    assert sylow_symmetric(27, 3).hint is not None
    assert sylow_symmetric(27, 3).order == 3 ** 13


def test_jordan_extension():
    bp = jordan_extension(5, 3)
    assert bp.order == 625
    G = bp.build()
    assert G.order == 625
    assert G.nilpotency_class == 3  # single Jordan block of size 4 has class 3
    J2 = jordan_extension(3, 2).build()
    assert J2.order == 27
    assert J2.nilpotency_class == 2


def test_jordan_extension_bounds():
    # the size-n Jordan block has order p only for 2 <= n <= p
    assert jordan_extension(3, 3).order == 81
    with pytest.raises(PGroupsError):
        jordan_extension(3, 4)
    with pytest.raises(PGroupsError):
        jordan_extension(2, 3)
    with pytest.raises(PGroupsError):
        jordan_extension(3, 1)


def test_nij_block_subgroups():
    gens = nij_generators(3, 4, 1, 2)
    G = FiniteGroup(MatRealization(3, gf(4)), gens, 2)
    assert G.order == 16  # q^(i * (n - j + 1))
    assert G.whole_subgroup().is_elementary_abelian()
    gens2 = nij_generators(4, 3, 2, 3)
    H = FiniteGroup(MatRealization(4, gf(3)), gens2, 3)
    assert H.order == 81
    assert H.whole_subgroup().is_elementary_abelian()
    with pytest.raises(PGroupsError):
        nij_generators(3, 3, 2, 2)  # needs i < j


def test_degree_cap_guards():
    with pytest.raises(CapExceeded):
        cyclic(2, 50)
    with pytest.raises(CapExceeded):
        dihedral(2 ** 40)
    with pytest.raises(CapExceeded):
        wreath_cyclic(cyclic(2, 22), 2)
    # a big ORDER with a representable degree is still a valid blueprint
    assert wreath_cyclic(cyclic(2, 20), 2).order == 2 ** 41


def test_spec_strings_round():
    assert cyclic(3, 2).spec == "cyclic(3,2)"
    assert dihedral(8).spec == "dihedral(8)"
    assert unitriangular(3, 3).spec == "ut(3,3)"
    assert sylow_symmetric(9, 3).spec == "sylsym(9,3)"
    assert jordan_extension(5, 3).spec == "jordan(5,3)"
