"""Elementary abelian subgroup analysis: maximal ones, the Thompson
subgroup, weak closure, abelian-normal span, and wreath support profiles.

Maximal elementary abelian subgroups are exactly the maximal cliques of
the commuting graph on order-p elements (a maximal commuting set of
order-p elements is closed under products).  We enumerate them with
Bron--Kerbosch plus pivoting: a plain "grow by larger elements" scan
would visit every elementary abelian subgroup along the way, which is
millions for a rank-6 bottom layer, while the clique walk touches only
the maximal ones.  Results are canonical regardless: cliques are emitted
in deterministic order and re-sorted.
"""

from __future__ import annotations

import weakref
from dataclasses import dataclass

import numpy as np

from .core import DEFAULT_SCAN_BUDGET, FiniteGroup, Subgroup, indices_from_mask
from .errors import (
    NotInBase,
    NotWreathGroup,
    PGroupsError,
    ScanBudgetExceeded,
)
from .reports import (
    HOLDS,
    NOT_APPLICABLE,
    VIOLATION,
    CheckResult,
    element_witness,
    subgroup_witness,
    word_str,
)


@dataclass
class ElemAbelianCatalog:
    group: FiniteGroup
    maximals: list[Subgroup]
    max_rank: int


_catalog_cache: "weakref.WeakKeyDictionary[FiniteGroup, ElemAbelianCatalog]" = (
    weakref.WeakKeyDictionary())


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def maximal_elementary_abelians(G: FiniteGroup,
                                budget: int | None = None) -> ElemAbelianCatalog:
    if budget is None:
        budget = DEFAULT_SCAN_BUDGET
        cached = _catalog_cache.get(G)
        if cached is not None:
            return cached
    orders = G.element_orders
    verts = [i for i in range(1, G.order) if orders[i] == G.p]
    nv = len(verts)
    if nv == 0:
        cat = ElemAbelianCatalog(G, [G.trivial_subgroup()], 0)
        _catalog_cache[G] = cat
        return cat
    T = G.table
    varr = np.array(verts, dtype=np.int32)
    adj = []
    for pos, v in enumerate(verts):
        eq = T[v, varr] == T[varr, v]
        eq[pos] = False
        packed = np.packbits(eq, bitorder="little").tobytes()
        adj.append(int.from_bytes(packed, "little"))

    import sys

    if sys.getrecursionlimit() < nv + 200:
        sys.setrecursionlimit(nv + 200)

    cliques: list[int] = []
    spent = 0

    def extend(r: int, cand: int, excl: int):
        nonlocal spent
        spent += 1
        if spent > budget:
            raise ScanBudgetExceeded(budget)
        if cand == 0 and excl == 0:
            cliques.append(r)
            return
        pivot, best = -1, -1
        for u in _bits(cand | excl):
            score = (cand & adj[u]).bit_count()
            if score > best:
                pivot, best = u, score
        for v in _bits(cand & ~adj[pivot]):
            spent += 1
            bit = 1 << v
            extend(r | bit, cand & adj[v], excl & adj[v])
            cand &= ~bit
            excl |= bit

    full = (1 << nv) - 1
    extend(0, full, 0)

    p = G.p
    maximals = []
    covered = 0
    for cl in cliques:
        covered |= cl
        mask = 1
        for pos in _bits(cl):
            mask |= 1 << verts[pos]
        size = mask.bit_count()
        rank = 0
        while p ** rank < size:
            rank += 1
        if p ** rank != size:
            raise PGroupsError(
                "maximal commuting set of order-p elements is not closed")
        maximals.append(G.subgroup_from_mask(mask))
    if covered != full:
        raise PGroupsError("catalog failed to cover every order-p element")
    maximals.sort(key=lambda s: (-s.order, s.mask))
    cat = ElemAbelianCatalog(G, maximals, maximals[0].rank())
    if budget == DEFAULT_SCAN_BUDGET:
        _catalog_cache[G] = cat
    return cat


def thompson_subgroup(G: FiniteGroup, budget: int | None = None) -> Subgroup:
    cat = maximal_elementary_abelians(G, budget)
    union = 0
    for m in cat.maximals:
        if m.rank() == cat.max_rank:
            union |= m.mask
    return G.subgroup_from_mask(G.closure_mask(union))


def all_elementary_abelians(G: FiniteGroup, min_rank: int = 1,
                            budget: int | None = None) -> list[Subgroup]:
    """Every elementary abelian subgroup of rank >= min_rank, found as the
    subspaces of the maximal ones."""
    if budget is None:
        budget = DEFAULT_SCAN_BUDGET
    cat = maximal_elementary_abelians(G, budget)
    p = G.p
    seen: set[int] = set()
    out: list[Subgroup] = []
    if min_rank <= 0:
        out.append(G.trivial_subgroup())
    spent = 0
    for m in cat.maximals:
        basis = m.generators()
        r = len(basis)
        if r < min_rank:
            continue
        for rows in _rref_row_sets(G, basis, p, max(min_rank, 0)):
            spent += 1 + len(rows)
            if spent > budget:
                raise ScanBudgetExceeded(budget)
            mask = 1
            for x in rows:
                members = np.fromiter(indices_from_mask(mask), dtype=np.int32)
                acc = x
                for _ in range(p - 1):
                    for e in G.table[members, acc]:
                        mask |= 1 << int(e)
                    acc = G.mul(acc, x)
            if mask not in seen:
                seen.add(mask)
                out.append(G.subgroup_from_mask(mask))
    out.sort(key=lambda s: (s.order, s.mask))
    return out


def _rref_row_sets(G, basis, p, min_rank):
    """Canonical generator tuples, one per subspace of span(basis) of rank
    >= min_rank: rows of reduced echelon matrices in basis coordinates,
    mapped back to group elements."""
    from itertools import combinations, product

    r = len(basis)
    powers = []
    for b in basis:
        row = [0]
        for _ in range(p - 1):
            row.append(G.mul(row[-1], b))
        powers.append(row)

    def coords_to_element(vec):
        x = 0
        for i, c in enumerate(vec):
            if c:
                x = G.mul(x, powers[i][c])
        return x

    for k in range(max(min_rank, 1), r + 1):
        for pivots in combinations(range(r), k):
            pivot_set = set(pivots)
            free = [(i, c) for i in range(k) for c in range(pivots[i] + 1, r)
                    if c not in pivot_set]
            for fill in product(range(p), repeat=len(free)):
                mat = [[0] * r for _ in range(k)]
                for i, pv in enumerate(pivots):
                    mat[i][pv] = 1
                for (i, c), val in zip(free, fill):
                    mat[i][c] = val
                yield [coords_to_element(row) for row in mat]


def is_weakly_closed(G: FiniteGroup, E: Subgroup,
                     budget: int | None = None) -> tuple[bool, int | None]:
    """Weak closure in the commuting sense: every conjugate E^g distinct
    from E fails to commute with E elementwise.  On failure the witness is
    a conjugating element g (as an index)."""
    if budget is None:
        budget = DEFAULT_SCAN_BUDGET
    if not E.is_elementary_abelian():
        raise PGroupsError("weak closure is defined here for elementary "
                           "abelian subgroups only")
    egens = E.generators()
    T = G.table
    inv = G.inverses
    seen = {E.mask: 0}
    frontier = [(E.mask, list(E.indices()), 0)]
    spent = 0
    while frontier:
        nxt = []
        for mask, members, conjugator in frontier:
            arr = np.array(members, dtype=np.int32)
            for s in G.gen_indices:
                spent += 1
                if spent > budget:
                    raise ScanBudgetExceeded(budget)
                moved = T[T[inv[s], arr], s]
                m2 = 0
                for e in moved:
                    m2 |= 1 << int(e)
                if m2 in seen:
                    continue
                g = G.mul(conjugator, s)
                seen[m2] = g
                conj_gens = [G.conj(a, g) for a in egens]
                if all(T[a, b] == T[b, a]
                       for a in conj_gens for b in egens):
                    return False, g
                nxt.append((m2, [int(x) for x in moved], g))
        frontier = nxt
    return True, None


def abelian_normal_span(G: FiniteGroup) -> Subgroup:
    union = 0
    for n in G.normal_subgroups():
        if n.is_abelian():
            union |= n.mask
    return G.subgroup_from_mask(G.closure_mask(union))


def support_profile(G: FiniteGroup, F: Subgroup) -> tuple[int, ...]:
    """For W = P wr C_p and F inside the base P^p: the 1-based coordinates
    where F projects outside Z(P)."""
    bp = G.meta.get("blueprint")
    if bp is None or bp.meta.get("kind") != "wreath":
        raise NotWreathGroup("support profiles need a wreath-built group")
    copies = bp.meta["copies"]
    n = bp.meta["block_size"]
    inner_bp = bp.meta["inner"]
    inner = bp.meta.get("_inner_group")
    if inner is None:
        inner = inner_bp.build()
        bp.meta["_inner_group"] = inner
    center_values = {inner.elements[i] for i in inner.center.indices()}
    support = set()
    for idx in F.indices():
        v = G.elements[idx]
        if any(v[x] // n != x // n for x in range(copies * n)):
            raise NotInBase(f"element {word_str(G, idx)} moves blocks")
        for i in range(copies):
            comp = tuple(v[i * n + x] - i * n for x in range(n))
            if comp not in center_values:
                support.add(i + 1)
    return tuple(sorted(support))


def lemma56_check(G: FiniteGroup, budget: int | None = None) -> CheckResult:
    """For nonabelian G with cyclic center: every non-central weakly closed
    elementary abelian F satisfies [F, N_G(F)] meet Z_2(G) != 1."""
    name = G.name or "?"
    if G.is_abelian():
        return CheckResult("lemma56", name, NOT_APPLICABLE,
                           {"reason": "abelian group"})
    if not G.center.is_cyclic():
        return CheckResult("lemma56", name, NOT_APPLICABLE,
                           {"reason": "center is not cyclic"})
    ucs = G.upper_central_series.terms
    z2 = ucs[2] if len(ucs) > 2 else ucs[-1]
    zmask = G.center.mask
    certificates = []
    for F in all_elementary_abelians(G, 1, budget):
        if F.mask | zmask == zmask:
            continue
        closed, _ = is_weakly_closed(G, F, budget)
        if not closed:
            continue
        comm = G.commutator_subgroup(F, G.normalizer(F))
        meet = comm.mask & z2.mask
        if meet == 1:
            return CheckResult(
                "lemma56", name, VIOLATION,
                {"failing_subgroup": subgroup_witness(G, F),
                 "commutator_with_normalizer": subgroup_witness(G, comm)})
        wit = min(i for i in indices_from_mask(meet) if i != 0)
        certificates.append({"subgroup": subgroup_witness(G, F),
                             "witness": element_witness(G, wit)})
    return CheckResult("lemma56", name, HOLDS,
                       {"subgroups_checked": len(certificates)},
                       {"certificates": certificates})
