from __future__ import annotations

import pytest

from pgroups.errors import NotInvertible, PGroupsError
from pgroups.gf import GF, factor_prime_power, gf


@pytest.mark.parametrize("q,p,e", [
    (2, 2, 1), (3, 3, 1), (4, 2, 2), (5, 5, 1), (8, 2, 3),
    (9, 3, 2), (25, 5, 2), (27, 3, 3), (49, 7, 2), (64, 2, 6),
    (1024, 2, 10), (97, 97, 1),
])
def test_factor_prime_power(q, p, e):
    assert factor_prime_power(q) == (p, e)


@pytest.mark.parametrize("q", [1, 0, 6, 12, 100])
def test_factor_prime_power_rejects(q):
    with pytest.raises(PGroupsError):
        factor_prime_power(q)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_field_axioms_exhaustive(q):
    F = GF(q)
    els = range(q)
    for a in els:
        assert F.add(a, 0) == a
        assert F.mul(a, 1) == a
        assert F.mul(a, 0) == 0
        assert F.add(a, F.neg(a)) == 0
        assert F.sub(a, a) == 0
        if a != 0:
            assert F.mul(a, F.inv(a)) == 1
    for a in els:
        for b in els:
            assert F.add(a, b) == F.add(b, a)
            assert F.mul(a, b) == F.mul(b, a)
    for a in els:
        for b in els:
            for c in els:
                assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
                assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
                assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))


@pytest.mark.parametrize("q", [16, 25, 27])
def test_field_axioms_spot(q):
    # identities and inverses everywhere, distributivity on a stride sample
    F = GF(q)
    for a in range(q):
        assert F.add(a, F.neg(a)) == 0
        if a != 0:
            assert F.mul(a, F.inv(a)) == 1
    sample = range(0, q, 3)
    for a in sample:
        for b in sample:
            for c in sample:
                assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))


@pytest.mark.parametrize("q", [2, 3, 4, 8, 9, 27])
def test_multiplicative_group_cyclic(q):
    F = GF(q)

    def mul_order(a):
        k, x = 1, a
        while x != 1:
            x = F.mul(x, a)
            k += 1
        return k

    orders = [mul_order(a) for a in range(1, q)]
    assert all((q - 1) % k == 0 for k in orders)
    assert max(orders) == q - 1


@pytest.mark.parametrize("q", [4, 9, 27])
def test_frobenius_is_additive(q):
    F = GF(q)
    p = F.p

    def frob(a):
        y = a
        for _ in range(p - 1):
            y = F.mul(y, a)
        return y

    for a in range(q):
        for b in range(q):
            assert frob(F.add(a, b)) == F.add(frob(a), frob(b))


def test_prime_subfield_is_mod_p():
    F = GF(9)
    for a in range(3):
        for b in range(3):
            assert F.add(a, b) == (a + b) % 3
            assert F.mul(a, b) == (a * b) % 3


def test_reducible_polynomial_rejected():
    # x^2 factors over any field; x^2 - 1 = (x-1)(x+1) over F_3
    with pytest.raises(PGroupsError):
        GF(4, poly=(0, 0))
    with pytest.raises(PGroupsError):
        GF(9, poly=(2, 0))


def test_explicit_irreducible_polynomial_accepted():
    # x^2 + x + 2 is irreducible over F_3 (no root among 0,1,2)
    F = GF(9, poly=(2, 1))
    for a in range(1, 9):
        assert F.mul(a, F.inv(a)) == 1


def test_zero_has_no_inverse():
    with pytest.raises(NotInvertible):
        GF(5).inv(0)


def test_size_bound_and_missing_poly():
    with pytest.raises(PGroupsError):
        GF(8192)
    with pytest.raises(PGroupsError):
        GF(128)  # no built-in polynomial stored for this size


def test_shared_instances_cached():
    assert gf(9) is gf(9)
    assert gf(9) == GF(9)
    assert gf(4) != gf(9)
