"""Small finite fields GF(p^e) with exact table arithmetic.

Field elements are integer codes 0..q-1: the code of a polynomial
c_0 + c_1 x + ... is sum(c_i * p**i), so codes 0..p-1 are the prime
subfield.  Fields of size up to 64 come with a built-in defining
polynomial; larger fields need an explicit one.  Validation is exact:
the quotient ring is a field iff the polynomial is irreducible, so a
missing inverse during table construction rejects the polynomial.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import NotInvertible, PGroupsError

# degree-e monic irreducible over F_p, stored as low-order coefficients
# (the polynomial is x^e + sum(c_i x^i)); keyed by prime power p^e
_BUILTIN_POLYS = {
    4: (1, 1),
    8: (1, 1, 0),
    9: (1, 0),
    16: (1, 1, 0, 0),
    25: (2, 0),
    27: (1, 2, 0),
    32: (1, 0, 1, 0, 0),
    49: (1, 0),
    64: (1, 1, 0, 0, 0, 0),
}

_MAX_Q = 4096


def factor_prime_power(q: int) -> tuple[int, int]:
    """Return (p, e) with q = p**e, or raise."""
    if q < 2:
        raise PGroupsError(f"field size must be at least 2, got {q}")
    p = 2
    while p * p <= q:
        if q % p == 0:
            break
        p += 1
    else:
        return q, 1
    e = 0
    m = q
    while m % p == 0:
        m //= p
        e += 1
    if m != 1:
        raise PGroupsError(f"{q} is not a prime power")
    return p, e


def _poly_mulmod(a, b, mod, p):
    # a, b are coefficient lists (low order first); mod is monic
    res = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                res[i + j] = (res[i + j] + ai * bj) % p
    e = len(mod) - 1
    for i in range(len(res) - 1, e - 1, -1):
        c = res[i]
        if c:
            res[i] = 0
            for j in range(e):
                res[i - e + j] = (res[i - e + j] - c * mod[j]) % p
    res = res[:e]
    while len(res) < e:
        res.append(0)
    return res


class GF:
    """Arithmetic in GF(q) via integer codes and precomputed tables."""

    def __init__(self, q: int, poly: tuple[int, ...] | None = None):
        p, e = factor_prime_power(q)
        if q > _MAX_Q:
            raise PGroupsError(f"field size {q} above supported bound {_MAX_Q}")
        self.q = q
        self.p = p
        self.e = e
        if e == 1:
            self.poly = ()
        else:
            if poly is None:
                if q not in _BUILTIN_POLYS:
                    raise PGroupsError(
                        f"no built-in polynomial for GF({q}); pass one explicitly"
                    )
                poly = _BUILTIN_POLYS[q]
            poly = tuple(int(c) % p for c in poly)
            if len(poly) != e:
                raise PGroupsError(
                    f"polynomial for GF({q}) needs {e} low-order coefficients"
                )
            self.poly = poly
        self._build_tables()

    def _code_to_coeffs(self, a: int) -> list[int]:
        out = []
        for _ in range(self.e):
            out.append(a % self.p)
            a //= self.p
        return out

    def _coeffs_to_code(self, cs) -> int:
        code = 0
        for c in reversed(cs):
            code = code * self.p + (c % self.p)
        return code

    def _build_tables(self):
        p, q, e = self.p, self.q, self.e
        add = [[0] * q for _ in range(q)]
        mul = [[0] * q for _ in range(q)]
        if e == 1:
            for a in range(q):
                for b in range(q):
                    add[a][b] = (a + b) % p
                    mul[a][b] = (a * b) % p
        else:
            mod = list(self.poly) + [1]
            coeffs = [self._code_to_coeffs(a) for a in range(q)]
            for a in range(q):
                for b in range(q):
                    add[a][b] = self._coeffs_to_code(
                        [(x + y) % p for x, y in zip(coeffs[a], coeffs[b])]
                    )
                    mul[a][b] = self._coeffs_to_code(
                        _poly_mulmod(coeffs[a], coeffs[b], mod, p)
                    )
        self._add = add
        self._mul = mul
        neg = [0] * q
        for a in range(q):
            for b in range(q):
                if add[a][b] == 0:
                    neg[a] = b
                    break
        self._neg = neg
        inv: list[int | None] = [None] * q
        for a in range(1, q):
            for b in range(1, q):
                if mul[a][b] == 1:
                    inv[a] = b
                    break
            else:
                raise PGroupsError(
                    f"polynomial {self.poly} is reducible over F_{p}: "
                    f"code {a} has no inverse"
                )
        self._inv = inv

    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def sub(self, a: int, b: int) -> int:
        return self._add[a][self._neg[b]]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def inv(self, a: int) -> int:
        if a == 0:
            raise NotInvertible("zero has no inverse")
        return self._inv[a]

    def __eq__(self, other):
        return isinstance(other, GF) and (self.q, self.poly) == (other.q, other.poly)

    def __hash__(self):
        return hash((self.q, self.poly))

    def __repr__(self):
        return f"GF({self.q})"


@lru_cache(maxsize=None)
def gf(q: int) -> GF:
    """Shared field instance with the built-in polynomial."""
    return GF(q)
