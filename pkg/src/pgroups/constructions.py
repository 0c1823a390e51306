"""Builders for the p-group families the package knows how to make.

Each builder returns a Blueprint: generators plus an exact order formula
and structural metadata, with enumeration deferred.  That split matters
because certificate-style checks on the largest families (wreath towers
of order 3^13 and up) work directly on generator values and never
enumerate.  Blueprint.build() enumerates under a cap and cross-checks
the realized order against the formula.

Wreath products use block-major point numbering: copy i of the inner
group acts on points [i*n, (i+1)*n), and the top cycle shifts blocks.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .core import DEFAULT_ELEMENT_CAP, FiniteGroup
from .errors import (
    CapExceeded,
    InconsistencyError,
    MixedRealization,
    NotCoprime,
    OddPrimeRequired,
    PGroupsError,
)
from .gf import factor_prime_power, gf
from .realizations import MatRealization, PermRealization, Realization, TableRealization


@dataclass
class ThompsonHint:
    """Generators of a claimed Thompson subgroup, carried by constructions
    whose theory pins it down (towers of wreaths over elementary abelian
    layers, and direct products of such)."""

    generators: list
    rank: int
    provenance: str


@dataclass
class Blueprint:
    spec: str
    p: int
    realization: Realization
    generators: list
    order: int | None
    named: dict = dc_field(default_factory=dict)
    meta: dict = dc_field(default_factory=dict)
    hint: ThompsonHint | None = None

    def build(self, cap: int = DEFAULT_ELEMENT_CAP) -> FiniteGroup:
        G = FiniteGroup(self.realization, self.generators, self.p, cap=cap,
                        name=self.spec, named_subgroups=self.named,
                        meta=dict(self.meta, blueprint=self))
        if self.order is not None and G.order != self.order:
            raise InconsistencyError(
                f"{self.spec}: enumerated order {G.order} != formula {self.order}")
        return G

    def as_permutation(self) -> "Blueprint":
        """Matrix blueprints re-realized on the right vector action."""
        if isinstance(self.realization, PermRealization):
            return self
        if not isinstance(self.realization, MatRealization):
            raise MixedRealization("only matrix blueprints convert to permutations")
        real = self.realization
        d, f = real.dim, real.field
        q = f.q
        degree = q ** d

        def decode(code):
            v = []
            for _ in range(d):
                v.append(code % q)
                code //= q
            return v

        def encode(v):
            code = 0
            for c in reversed(v):
                code = code * q + c
            return code

        def mat_to_perm(m):
            images = []
            for code in range(degree):
                v = decode(code)
                w = [0] * d
                for j in range(d):
                    acc = 0
                    for i in range(d):
                        acc = f.add(acc, f.mul(v[i], m[i * d + j]))
                    w[j] = acc
                images.append(encode(w))
            return tuple(images)

        named = {k: [mat_to_perm(v) for v in vals] for k, vals in self.named.items()}
        hint = None
        if self.hint is not None:
            hint = ThompsonHint([mat_to_perm(v) for v in self.hint.generators],
                                self.hint.rank, self.hint.provenance)
        return Blueprint(self.spec, self.p, PermRealization(degree),
                         [mat_to_perm(g) for g in self.generators],
                         self.order, named, dict(self.meta), hint)


DEGREE_CAP = 5_000_000


def _is_prime(p):
    return p >= 2 and all(p % d for d in range(2, int(p ** 0.5) + 1))


def _require_prime(p):
    if not _is_prime(p):
        raise PGroupsError(f"{p} is not prime")


def _check_degree(n: int):
    """Refuse to materialize permutations on absurdly many points: even a
    single generator tuple would not fit in memory."""
    if n > DEGREE_CAP:
        raise CapExceeded(DEGREE_CAP,
                          f"permutation degree {n} exceeds {DEGREE_CAP}")


def cyclic(p: int, r: int) -> Blueprint:
    """Cyclic group of order p^r as a single p^r-cycle."""
    _require_prime(p)
    if r < 0:
        raise PGroupsError("exponent must be nonnegative")
    n = p ** r
    if r == 0:
        return Blueprint(f"cyclic({p},0)", p, PermRealization(1), [], 1)
    _check_degree(n)
    real = PermRealization(n)
    cycle = tuple((i + 1) % n for i in range(n))
    step = p ** (r - 1)
    omega_gen = tuple((i + step) % n for i in range(n))
    hint = ThompsonHint([omega_gen], 1, f"socle of cyclic({p},{r})")
    return Blueprint(f"cyclic({p},{r})", p, real, [cycle], n,
                     named={"socle": [omega_gen]}, hint=hint)


def dihedral(order: int) -> Blueprint:
    """Dihedral 2-group of the given order (at least 8)."""
    if order < 8 or order & (order - 1):
        raise PGroupsError("dihedral order must be a power of two, at least 8")
    m = order // 2
    _check_degree(m)
    real = PermRealization(m)
    rot = tuple((i + 1) % m for i in range(m))
    ref = tuple((-i) % m for i in range(m))
    return Blueprint(f"dihedral({order})", 2, real, [rot, ref], order)


def direct_product(a: Blueprint, b: Blueprint) -> Blueprint:
    """Direct product with retained embeddings of both factors."""
    if a.p != b.p:
        raise PGroupsError("direct product factors must share the prime")
    ra, rb = a.realization, b.realization
    if isinstance(ra, MatRealization) and isinstance(rb, PermRealization):
        a = a.as_permutation()
        ra = a.realization
    if isinstance(rb, MatRealization) and isinstance(ra, PermRealization):
        b = b.as_permutation()
        rb = b.realization
    spec = f"dp({a.spec},{b.spec})"
    if isinstance(ra, PermRealization) and isinstance(rb, PermRealization):
        na, nb = ra.degree, rb.degree
        _check_degree(na + nb)
        real = PermRealization(na + nb)
        ident_a = tuple(range(na))
        ident_b = tuple(range(nb))

        def embed_a(v):
            return tuple(v) + tuple(na + i for i in ident_b)

        def embed_b(v):
            return tuple(ident_a) + tuple(na + x for x in v)

        meta = {"kind": "dp", "left_size": na, "right_size": nb}
    elif isinstance(ra, MatRealization) and isinstance(rb, MatRealization):
        if ra.field != rb.field:
            raise MixedRealization("matrix factors must share the field")
        da, db = ra.dim, rb.dim
        d = da + db
        real = MatRealization(d, ra.field)

        def embed_a(v):
            out = list(real.identity())
            for i in range(da):
                for j in range(da):
                    out[i * d + j] = v[i * da + j]
            return tuple(out)

        def embed_b(v):
            out = list(real.identity())
            for i in range(db):
                for j in range(db):
                    out[(da + i) * d + (da + j)] = v[i * db + j]
            return tuple(out)

        meta = {"kind": "dp", "left_size": da, "right_size": db}
    else:
        raise MixedRealization("unsupported factor realizations")
    gens = [embed_a(g) for g in a.generators] + [embed_b(g) for g in b.generators]
    named = {"left": [embed_a(g) for g in a.generators],
             "right": [embed_b(g) for g in b.generators]}
    for k, vals in a.named.items():
        named[f"left.{k}"] = [embed_a(v) for v in vals]
    for k, vals in b.named.items():
        named[f"right.{k}"] = [embed_b(v) for v in vals]
    order = None if a.order is None or b.order is None else a.order * b.order
    meta.update({"left": a, "right": b})
    hint = None
    if a.hint is not None and b.hint is not None:
        hint = ThompsonHint(
            [embed_a(v) for v in a.hint.generators]
            + [embed_b(v) for v in b.hint.generators],
            a.hint.rank + b.hint.rank,
            f"product of ({a.hint.provenance}) and ({b.hint.provenance})")
    return Blueprint(spec, a.p, real, gens, order, named, meta, hint)


def wreath_cyclic(inner: Blueprint, p: int) -> Blueprint:
    """inner wr C_p with p copies permuted cyclically, block-major points."""
    _require_prime(p)
    if p != inner.p:
        raise PGroupsError("wreath top prime must match the inner prime")
    bp = inner.as_permutation()
    n = bp.realization.degree
    degree = n * p
    _check_degree(degree)
    real = PermRealization(degree)

    def embed_block(v, i):
        out = list(range(degree))
        for x in range(n):
            out[i * n + x] = i * n + v[x]
        return tuple(out)

    top = tuple(((i // n + 1) % p) * n + (i % n) for i in range(degree))
    gens = [embed_block(g, 0) for g in bp.generators] + [top]
    base = [embed_block(g, i) for i in range(p) for g in bp.generators]
    named = {"base": base, "top": [top]}
    order = None if bp.order is None else bp.order ** p * p
    hint = None
    if p % 2 == 1 and bp.hint is not None and bp.order is not None:
        if bp.order == 1:
            hint = ThompsonHint([top], 1, "wreath over trivial inner group")
        else:
            hint = ThompsonHint(
                [embed_block(v, i) for i in range(p)
                 for v in bp.hint.generators],
                bp.hint.rank * p,
                f"base power of ({bp.hint.provenance})")
    meta = {"kind": "wreath", "copies": p, "block_size": n, "inner": bp}
    return Blueprint(f"wr({bp.spec},{p})", p, real, gens, order, named, meta, hint)


def iterated_wreath(p: int, r: int) -> Blueprint:
    """The r-fold wreath tower of cyclic groups of order p."""
    _require_prime(p)
    if r < 1:
        raise PGroupsError("tower height must be at least 1")
    bp = cyclic(p, 1)
    for _ in range(r - 1):
        bp = wreath_cyclic(bp, p)
    out = Blueprint(f"iwr({p},{r})", p, bp.realization, bp.generators, bp.order,
                    bp.named, bp.meta, bp.hint)
    return out


def sylow_symmetric(n: int, p: int) -> Blueprint:
    """A Sylow p-subgroup of the symmetric group on n points.

    Base-p digits of n dictate a direct product of wreath towers; the
    resulting order is checked against the factorial valuation by the
    test suite through an independent route.
    """
    _require_prime(p)
    if n < 1:
        raise PGroupsError("need at least one point")
    digits = []
    m = n
    while m:
        digits.append(m % p)
        m //= p
    parts: list[Blueprint] = []
    for i, a in enumerate(digits):
        if i == 0:
            continue
        parts.extend(iterated_wreath(p, i) for _ in range(a))
    if not parts:
        bp = Blueprint(f"sylsym({n},{p})", p, PermRealization(1), [], 1)
        return bp
    acc = parts[0]
    for nxt in parts[1:]:
        acc = direct_product(acc, nxt)
    return Blueprint(f"sylsym({n},{p})", p, acc.realization, acc.generators,
                     acc.order, acc.named, acc.meta, acc.hint)


def unitriangular(n: int, q: int) -> Blueprint:
    """Upper unitriangular n x n matrices over GF(q)."""
    if n < 2:
        raise PGroupsError("need dimension at least 2")
    p, e = factor_prime_power(q)
    f = gf(q)
    real = MatRealization(n, f)
    gens = []
    for i in range(n - 1):
        for k in range(e):
            c = p ** k
            m = list(real.identity())
            m[i * n + (i + 1)] = c
            gens.append(tuple(m))
    order = q ** (n * (n - 1) // 2)
    return Blueprint(f"ut({n},{q})", p, real, gens, order,
                     meta={"kind": "ut", "n": n, "q": q})


def nij_generators(n: int, q: int, i: int, j: int) -> list:
    """Generators of the abelian normal block subgroup of ut(n, q):
    unitriangular matrices supported on rows <= i and columns >= j."""
    if not (1 <= i < j <= n):
        raise PGroupsError("need 1 <= i < j <= n")
    p, e = factor_prime_power(q)
    real = MatRealization(n, gf(q))
    gens = []
    for a in range(1, i + 1):
        for b in range(j, n + 1):
            for k in range(e):
                m = list(real.identity())
                m[(a - 1) * n + (b - 1)] = p ** k
                gens.append(tuple(m))
    return gens


def sylow_gl_coprime(n: int, q: int, p: int) -> Blueprint:
    """A Sylow p-subgroup of GL_n(F_q) in the coprime case, built from
    cyclic and wreath layers, never from matrices over F_q."""
    _require_prime(p)
    if p == 2:
        raise OddPrimeRequired("the coprime Sylow construction needs odd p")
    factor_prime_power(q)
    if q % p == 0:
        raise NotCoprime(f"p={p} divides q={q}")
    if n < 1:
        raise PGroupsError("need n at least 1")
    d = 1
    acc = q % p
    while acc != 1:
        acc = (acc * q) % p
        d += 1
    r = 0
    m = q ** d - 1
    while m % p == 0:
        m //= p
        r += 1
    count = n // d
    digits = []
    m = count
    while m:
        digits.append(m % p)
        m //= p
    parts: list[Blueprint] = []
    for i, a in enumerate(digits):
        tower = cyclic(p, r)
        for _ in range(i):
            tower = wreath_cyclic(tower, p)
        parts.extend([tower] * a)
    if not parts:
        return Blueprint(f"sylgl({n},{q},{p})", p, PermRealization(1), [], 1)
    acc_bp = parts[0]
    for nxt in parts[1:]:
        acc_bp = direct_product(acc_bp, nxt)
    return Blueprint(f"sylgl({n},{q},{p})", p, acc_bp.realization,
                     acc_bp.generators, acc_bp.order, acc_bp.named,
                     acc_bp.meta, acc_bp.hint)


def jordan_extension(p: int, n: int) -> Blueprint:
    """Elementary abelian p-group of rank n extended by a cyclic group
    acting through a single unipotent Jordan block; needs 2 <= n <= p."""
    _require_prime(p)
    if not (2 <= n <= p):
        raise PGroupsError(f"need 2 <= n <= p, got n={n}, p={p}")
    d = n + 1
    f = gf(p)
    real = MatRealization(d, f)

    def translation(vec):
        m = list(real.identity())
        for j, c in enumerate(vec):
            m[n * d + j] = c % p
        return tuple(m)

    top = list(real.identity())
    for i in range(n - 1):
        top[i * d + (i + 1)] = 1
    top = tuple(top)
    base = [translation([1 if j == i else 0 for j in range(n)])
            for i in range(n)]
    gens = [base[0], top]
    named = {"base": base, "top": [top]}
    return Blueprint(f"jordan({p},{n})", p, real, gens, p ** (n + 1), named,
                     meta={"kind": "jordan", "n": n})
