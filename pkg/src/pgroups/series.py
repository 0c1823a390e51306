"""Ascending chains of normal subgroups constrained by iterated
commutators with omega-centralizers, and the checks built on them.

A k-chain for N is 1 = Y_0 <= ... <= Y_n = N of normal subgroups with
[Omega_1(C_S(Y_{i-1})), Y_i ; k] = 1 at every step.  The largest normal
subgroup admitting such a chain is computed by a fixed point over the
normal lattice: start from the trivial subgroup and keep adding any
normal N that extends a chain of an already-admitted M <= N.  k = 2
gives the Y-characteristic subgroup; k = p-1 the larger X-variant
(k = 1 for p = 2, where the Y-variant is the whole group).
"""

from __future__ import annotations

from dataclasses import dataclass

from .analysis import thompson_subgroup
from .constructions import Blueprint
from .core import TABLE_CAP, FiniteGroup, Subgroup
from .errors import CapExceeded, InconsistencyError, SubgroupCapExceeded
from .reports import (
    HOLDS,
    INCONCLUSIVE,
    VIOLATION,
    CheckResult,
    subgroup_witness,
)


@dataclass
class KSeriesCertificate:
    k: int
    terms: list[Subgroup]

    def to_witness(self, G) -> dict:
        return {"k": self.k,
                "chain": [subgroup_witness(G, t) for t in self.terms]}


def _omega_centralizer(S: FiniteGroup, M: Subgroup) -> Subgroup:
    cache = S._cache.setdefault("omega_centralizer", {})
    got = cache.get(M.mask)
    if got is None:
        got = S.centralizer(M).omega1()
        cache[M.mask] = got
    return got


def _step_ok(S: FiniteGroup, M: Subgroup, N: Subgroup, k: int) -> bool:
    cache = S._cache.setdefault(("kstep", k), {})
    key = (M.mask, N.mask)
    got = cache.get(key)
    if got is None:
        W = _omega_centralizer(S, M)
        got = S.iterated_commutator(W, N, k).is_trivial()
        cache[key] = got
    return got


def is_k_chain(S: FiniteGroup, chain: list[Subgroup],
               k: int) -> tuple[bool, int | None]:
    """Validate an ascending chain; on failure return the 0-based index of
    the first bad step (index 0 flags a bad start)."""
    if not chain or not chain[0].is_trivial():
        return False, 0
    prev = chain[0]
    for i, term in enumerate(chain):
        if not term.is_normal():
            return False, i
        if i == 0:
            continue
        if not prev.issubset(term):
            return False, i
        if not _step_ok(S, prev, term, k):
            return False, i
        prev = term
    return True, None


def admitting_set(S: FiniteGroup, k: int,
                  cap: int | None = None) -> list[Subgroup]:
    """All normal subgroups admitting a k-chain, ascending by (order, mask)."""
    members, _ = _admitting(S, k, cap)
    return members


def _admitting(S: FiniteGroup, k: int, cap=None):
    cache = S._cache.setdefault("admitting", {})
    got = cache.get(k)
    if got is not None:
        return got
    normals = S.normal_subgroups(cap) if cap else S.normal_subgroups()
    trivial = normals[0]
    assert trivial.is_trivial()
    pred: dict[int, int | None] = {trivial.mask: None}
    if S.is_abelian():
        for n in normals[1:]:
            pred[n.mask] = trivial.mask
        result = (normals, pred)
        cache[k] = result
        return result
    changed = True
    while changed:
        changed = False
        admitted = [n for n in normals if n.mask in pred]
        admitted.sort(key=lambda s: (-s.order, s.mask))
        for n in normals:
            if n.mask in pred:
                continue
            for m in admitted:
                if m.mask & n.mask == m.mask and _step_ok(S, m, n, k):
                    pred[n.mask] = m.mask
                    changed = True
                    break
    members = [n for n in normals if n.mask in pred]
    result = (members, pred)
    cache[k] = result
    return result


def _chain_for(S: FiniteGroup, target: Subgroup, k: int) -> KSeriesCertificate:
    _, pred = _admitting(S, k)
    terms = []
    mask = target.mask
    while mask is not None:
        terms.append(S.subgroup_from_mask(mask))
        mask = pred[mask]
    terms.reverse()
    ok, bad = is_k_chain(S, terms, k)
    if not ok:
        raise InconsistencyError(
            f"constructed chain fails its own validation at step {bad}")
    return KSeriesCertificate(k, terms)


def _largest_admitting(S: FiniteGroup, k: int) -> Subgroup:
    members, _ = _admitting(S, k)
    top = max(members, key=lambda s: (s.order, s.mask))
    for m in members:
        if m.mask & top.mask != m.mask:
            raise InconsistencyError(
                "admitting set has no unique maximal member: "
                f"{m.order} not inside {top.order}")
    return top


def y_subgroup(S: FiniteGroup, force_dp: bool = False) -> Subgroup:
    """Largest normal subgroup admitting a 2-chain.  For p = 2 this is the
    whole group; the fixed point is still run as a cross-check whenever the
    normal lattice is within caps."""
    if S.p == 2 and not force_dp:
        whole = S.whole_subgroup()
        try:
            computed = _largest_admitting(S, 2)
        except (CapExceeded, SubgroupCapExceeded):
            return whole
        if computed.mask != whole.mask:
            raise InconsistencyError(
                "2-chain fixed point disagrees with the p=2 whole-group rule")
        return whole
    return _largest_admitting(S, 2)


def x_subgroup(S: FiniteGroup) -> Subgroup:
    k = S.p - 1 if S.p > 2 else 1
    return _largest_admitting(S, k)


def y_certificate(S: FiniteGroup) -> KSeriesCertificate:
    return _chain_for(S, y_subgroup(S), 2)


def check_y1(bp: Blueprint | FiniteGroup, mode: str = "auto",
             element_cap: int | None = None) -> CheckResult:
    """Thompson subgroup inside the Y-subgroup.

    direct mode enumerates and decides membership exactly.  Certificate
    mode never enumerates: it verifies, on raw generator values, that the
    construction's claimed Thompson subgroup is elementary abelian and
    normal, which suffices because abelian normal subgroups always admit
    a 2-chain.  Certificate failures are INCONCLUSIVE, never VIOLATION.
    """
    if isinstance(bp, FiniteGroup):
        return _check_y1_direct(bp, bp.name or "?")
    name = bp.spec
    if mode not in ("auto", "direct", "certificate"):
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "auto":
        known = bp.order
        mode = ("direct" if known is not None and known <= TABLE_CAP
                else "certificate")
    if mode == "direct":
        kwargs = {"cap": element_cap} if element_cap else {}
        return _check_y1_direct(bp.build(**kwargs), name)
    return _check_y1_certificate(bp, name)


def _check_y1_direct(G: FiniteGroup, name: str) -> CheckResult:
    J = thompson_subgroup(G)
    Y = y_subgroup(G)
    holds = J.mask & Y.mask == J.mask
    details = {"mode": "direct", "j_order": J.order, "y_order": Y.order,
               "group_order": G.order}
    witness = {"thompson": subgroup_witness(G, J),
               "y_chain": _chain_for(G, Y, 2).to_witness(G)}
    return CheckResult("y1", name, HOLDS if holds else VIOLATION,
                       details, witness)


def _check_y1_certificate(bp: Blueprint, name: str) -> CheckResult:
    hint = bp.hint
    if hint is None:
        return CheckResult("y1", name, INCONCLUSIVE,
                           {"mode": "certificate",
                            "reason": "construction carries no Thompson "
                                      "subgroup description"})
    real = bp.realization
    gens = hint.generators
    problems = []
    for i, a in enumerate(gens):
        acc = a
        for _ in range(bp.p - 1):
            acc = real.mul(acc, a)
        if acc != real.identity():
            problems.append(f"claimed generator {i} does not have order {bp.p}")
    for i, a in enumerate(gens):
        for j, b in enumerate(gens[i + 1:], start=i + 1):
            if real.mul(a, b) != real.mul(b, a):
                problems.append(f"claimed generators {i},{j} do not commute")
    member = _disjoint_span_membership(real, gens, bp.p)
    if member is None:
        problems.append("claimed generators lack disjoint supports; "
                        "membership test unavailable")
    else:
        inv_cache = {i: real.inv(s) for i, s in enumerate(bp.generators)}
        for i, s in enumerate(bp.generators):
            for a in gens:
                conj = real.mul(real.mul(inv_cache[i], a), s)
                if not member(conj):
                    problems.append(
                        f"conjugate by group generator {i} leaves the span")
                    break
    if problems:
        return CheckResult("y1", name, INCONCLUSIVE,
                           {"mode": "certificate", "problems": problems})
    details = {
        "mode": "certificate",
        "verified": ["claimed subgroup is elementary abelian of rank "
                     f"{hint.rank}", "claimed subgroup is normal"],
        "assumed": f"claimed subgroup equals the Thompson subgroup "
                   f"({hint.provenance})",
        "reasoning": "abelian normal subgroups admit a 2-chain, hence lie "
                     "in the Y-subgroup",
    }
    return CheckResult("y1", name, HOLDS, details)


def _disjoint_span_membership(real, gens, p):
    """Membership test for the span of commuting permutations with pairwise
    disjoint supports; None when supports overlap."""
    degree = real.degree if hasattr(real, "degree") else None
    if degree is None:
        return None
    supports = []
    for g in gens:
        supports.append(frozenset(x for x in range(degree) if g[x] != x))
    union: set[int] = set()
    for s in supports:
        if union & s:
            return None
        union |= s
    powers = []
    for g in gens:
        row = [tuple(range(degree))]
        for _ in range(p - 1):
            row.append(real.mul(row[-1], g))
        powers.append(row)

    def member(v):
        for x in range(degree):
            if v[x] != x and x not in union:
                return False
        for sup, rows in zip(supports, powers):
            if not sup:
                continue
            x0 = min(sup)
            for cand in rows:
                if cand[x0] == v[x0]:
                    if all(cand[x] == v[x] for x in sup):
                        break
                    return False
            else:
                return False
        return True

    return member


def thm19_conditions(G: FiniteGroup) -> CheckResult:
    """Three nested sufficient conditions for the central-quadratic
    conjecture: generated by abelian normals; Y-subgroup is everything;
    socle of the Y-subgroup's center equals the socle of the center.
    Each implication (1) => (2) => (3) is asserted on the instance."""
    from .analysis import abelian_normal_span

    name = G.name or "?"
    c1 = abelian_normal_span(G).order == G.order
    Y = y_subgroup(G)
    c2 = Y.order == G.order
    zy = G.subgroup_from_mask(Y.mask & G.centralizer(Y).mask)
    o_zy = zy.omega1()
    o_zg = G.center.omega1()
    c3 = o_zy.mask == o_zg.mask
    if c1 and not c2:
        raise InconsistencyError("condition (1) held but (2) failed")
    if c2 and not c3:
        raise InconsistencyError("condition (2) held but (3) failed")
    return CheckResult(
        "thm19", name, HOLDS,
        {"cond1_generated_by_abelian_normals": c1,
         "cond2_y_is_whole_group": c2,
         "cond3_socle_match": c3,
         "y_order": Y.order,
         "socle_of_center_of_y": o_zy.order,
         "socle_of_center": o_zg.order,
         "any_condition_holds": c1 or c2 or c3})
