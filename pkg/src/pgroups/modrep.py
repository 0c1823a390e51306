"""Faithful modules over F_p and everything computed from them: fixed
subspaces, the integer j-exponents, offenders and the F-module predicate,
quadratic elements and subgroups, the orthogonality calculus, the
weakly-closed-offender search, the conjecture checkers, and the
deepest/late/last commutator classification.

Row vectors act on the right: v -> v * rho(g).  A group element is
quadratic on V when g != 1 and (rho(g) - I)^2 = 0.  The exponent form of
the j-invariant is e = log_p|H| + dim C_V(H) - d, an exact integer.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .analysis import all_elementary_abelians, is_weakly_closed
from .core import (
    DEFAULT_SCAN_BUDGET,
    FiniteGroup,
    Subgroup,
    mask_from_indices,
)
from .errors import (
    DimensionMismatch,
    InconsistencyError,
    NoDeepest,
    NotHomomorphism,
    NotInvertible,
    NotNormal,
    OddPrimeRequired,
    PGroupsError,
    ScanBudgetExceeded,
    WrongRealization,
)
from .realizations import MatRealization, PermRealization
from .reports import (
    HOLDS,
    NOT_APPLICABLE,
    VIOLATION,
    CheckResult,
    element_witness,
    subgroup_witness,
    word_str,
)

# ---------------------------------------------------------------------------
# linear algebra over F_p


def _mod_inv(a: int, p: int) -> int:
    return pow(int(a) % p, p - 2, p)


def rref(rows, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form mod p; returns (nonzero rows, pivot columns)."""
    A = np.array(rows, dtype=np.int64) % p
    if A.ndim != 2 or A.size == 0:
        return np.zeros((0, A.shape[1] if A.ndim == 2 else 0),
                        dtype=np.int64), []
    nrows, ncols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        hit = None
        for rr in range(r, nrows):
            if A[rr, c]:
                hit = rr
                break
        if hit is None:
            continue
        if hit != r:
            A[[r, hit]] = A[[hit, r]]
        A[r] = (A[r] * _mod_inv(A[r, c], p)) % p
        others = np.flatnonzero(A[:, c])
        for rr in others:
            if rr != r:
                A[rr] = (A[rr] - A[rr, c] * A[r]) % p
        pivots.append(c)
        r += 1
    return A[:r], pivots


def row_space_dim(rows, p: int) -> int:
    return rref(rows, p)[0].shape[0]


def kernel_basis(A, p: int) -> np.ndarray:
    """Canonical basis of {x : A x = 0} (columns), returned as rows."""
    A = np.array(A, dtype=np.int64) % p
    ncols = A.shape[1]
    R, pivots = rref(A, p)
    free = [c for c in range(ncols) if c not in pivots]
    if not free:
        return np.zeros((0, ncols), dtype=np.int64)
    vecs = []
    for f in free:
        v = np.zeros(ncols, dtype=np.int64)
        v[f] = 1
        for r, c in enumerate(pivots):
            v[c] = (-R[r, f]) % p
        vecs.append(v)
    out, _ = rref(np.array(vecs), p)
    return out


def same_row_space(rows_a, rows_b, p: int) -> bool:
    Ra, _ = rref(rows_a, p)
    Rb, _ = rref(rows_b, p)
    return Ra.shape == Rb.shape and bool((Ra == Rb).all())


# ---------------------------------------------------------------------------
# representations


@dataclass
class JExponent:
    """j = p^e stored by its exact integer exponent."""
    e: int


class Representation:
    """Faithful-or-not action of a group on F_p^d, row vectors, right action."""

    kind = "abstract"

    def __init__(self, group: FiniteGroup, dim: int, faithful: bool):
        self.group = group
        self.p = group.p
        self.dim = dim
        self.faithful = faithful
        self._cache: dict = {}

    # subclasses provide: matrix(i), generator_matrix(pos),
    # fixed_rows(gen_indices), unipotency_degree(i), pair_zero(g, h)

    def quadratic(self, i: int) -> bool:
        if i == 0:
            return False
        return self.unipotency_degree(i) <= 2

    def fixed_dim_of(self, H: Subgroup) -> int:
        got = self._cache.setdefault("fixdim", {}).get(H.mask)
        if got is None:
            got = self.fixed_rows(H.generators()).shape[0]
            self._cache["fixdim"][H.mask] = got
        return got

    def describe(self) -> str:
        return f"{self.kind}(dim={self.dim}, p={self.p})"


class MatrixRep(Representation):
    """Explicit matrices, one per element, derived along the enumeration."""

    kind = "matrix"

    def __init__(self, group: FiniteGroup, gen_mats: np.ndarray):
        p = group.p
        d = int(gen_mats.shape[1]) if gen_mats.size else 1
        n = group.order
        mats = np.zeros((n, d, d), dtype=np.int64)
        mats[0] = np.eye(d, dtype=np.int64)
        for i in range(1, n):
            parent, pos = group.parents[i]
            mats[i] = mats[parent] @ gen_mats[pos] % p
        self.mats = mats
        self.gen_mats = gen_mats
        eye = np.eye(d, dtype=np.int64)
        trivial_kernel = [i for i in range(n) if (mats[i] == eye).all()]
        super().__init__(group, d, faithful=trivial_kernel == [0])
        self.kernel_indices = tuple(trivial_kernel)

    def verify_homomorphism(self):
        G = self.group
        T = G.table
        p = self.p
        for pos, s_idx in enumerate(G.gen_indices):
            lhs = self.mats[T[:, s_idx]]
            rhs = self.mats @ self.gen_mats[pos] % p
            if not (lhs == rhs).all():
                bad = int(np.flatnonzero((lhs != rhs).any(axis=(1, 2)))[0])
                raise NotHomomorphism(
                    f"product rule fails at element {word_str(G, bad)} "
                    f"with generator g{pos}")

    def matrix(self, i: int) -> np.ndarray:
        return self.mats[i]

    def generator_matrix(self, pos: int) -> np.ndarray:
        return self.gen_mats[pos]

    def fixed_rows(self, gen_indices) -> np.ndarray:
        d, p = self.dim, self.p
        if not gen_indices:
            return np.eye(d, dtype=np.int64)
        eye = np.eye(d, dtype=np.int64)
        blocks = [self.mats[i] - eye for i in gen_indices]
        stacked = np.hstack(blocks) % p
        return kernel_basis(stacked.T, p)

    def unipotency_degree(self, i: int) -> int:
        p = self.p
        N = (self.mats[i] - np.eye(self.dim, dtype=np.int64)) % p
        k = 1
        cur = N
        while cur.any():
            cur = cur @ N % p
            k += 1
            if k > self.dim + 1:
                raise InconsistencyError(
                    "action of a p-element is not unipotent")
        return k

    def pair_zero(self, g: int, h: int) -> bool:
        p = self.p
        eye = np.eye(self.dim, dtype=np.int64)
        prod = (self.mats[g] - eye) @ (self.mats[h] - eye) % p
        return not prod.any()


class PermRep(Representation):
    """Permutation-basis module; everything has a combinatorial shortcut.

    The matrix of a permutation sigma (row convention) is
    P[i, j] = 1 iff j = sigma(i); unipotency degree is the longest cycle,
    fixed dimension is the orbit count, and the orthogonality product
    (P_g - I)(P_h - I) vanishes row-by-row through a four-point
    cancellation test.
    """

    kind = "perm"

    def __init__(self, group: FiniteGroup, images: np.ndarray,
                 free_action: bool = False):
        n, degree = images.shape
        ident = np.arange(degree)
        trivial_kernel = [i for i in range(n) if (images[i] == ident).all()]
        super().__init__(group, degree, faithful=trivial_kernel == [0])
        self.images = images
        self.free_action = free_action
        self.kernel_indices = tuple(trivial_kernel)

    def matrix(self, i: int) -> np.ndarray:
        d = self.dim
        M = np.zeros((d, d), dtype=np.int64)
        M[np.arange(d), self.images[i]] = 1
        return M

    def generator_matrix(self, pos: int) -> np.ndarray:
        return self.matrix(self.group.gen_indices[pos])

    def fixed_rows(self, gen_indices) -> np.ndarray:
        d = self.dim
        orbits = self._orbits(gen_indices)
        rows = np.zeros((len(orbits), d), dtype=np.int64)
        for r, orb in enumerate(orbits):
            rows[r, orb] = 1
        return rows

    def _orbits(self, gen_indices) -> list[list[int]]:
        d = self.dim
        seen = [False] * d
        rows = [self.images[i] for i in gen_indices]
        orbits = []
        for start in range(d):
            if seen[start]:
                continue
            orb = [start]
            seen[start] = True
            stack = [start]
            while stack:
                x = stack.pop()
                for row in rows:
                    y = int(row[x])
                    if not seen[y]:
                        seen[y] = True
                        orb.append(y)
                        stack.append(y)
            orbits.append(sorted(orb))
        return orbits

    def fixed_dim_of(self, H: Subgroup) -> int:
        if self.free_action:
            return self.dim // H.order
        return super().fixed_dim_of(H)

    def unipotency_degree(self, i: int) -> int:
        img = self.images[i]
        d = self.dim
        seen = [False] * d
        best = 1
        for start in range(d):
            if seen[start]:
                continue
            length = 0
            x = start
            while not seen[x]:
                seen[x] = True
                length += 1
                x = int(img[x])
            best = max(best, length)
        return best

    def pair_zero(self, g: int, h: int) -> bool:
        a = self.images[g]
        b = self.images[h]
        i = np.arange(self.dim)
        ba = b[a]
        ok = ((ba == b) & (i == a)) | ((ba == a) & (i == b))
        if self.p == 2:
            ok |= (ba == i) & (a == b)
        return bool(ok.all())


def build_representation(G: FiniteGroup, generator_matrices) -> MatrixRep:
    """Matrices-per-generator in, verified representation out."""
    mats = [np.array(m, dtype=np.int64) for m in generator_matrices]
    if len(mats) != len(G.generators):
        raise DimensionMismatch(
            f"need {len(G.generators)} matrices, got {len(mats)}")
    if not mats:
        raise DimensionMismatch("group has no generators")
    d = mats[0].shape[0] if mats[0].ndim == 2 else -1
    p = G.p
    for m in mats:
        if m.ndim != 2 or m.shape != (d, d):
            raise DimensionMismatch(
                f"expected {d}x{d} matrices throughout, got {m.shape}")
    stack = np.stack(mats) % p
    for pos in range(len(mats)):
        if row_space_dim(stack[pos], p) != d:
            raise NotInvertible(f"generator matrix {pos} is singular mod {p}")
    rep = MatrixRep(G, stack)
    rep.verify_homomorphism()
    return rep


def regular_representation(G: FiniteGroup) -> PermRep:
    """Right-translation action on the group's own elements; always faithful."""
    images = np.ascontiguousarray(G.table.T)
    rep = PermRep(G, images, free_action=True)
    if not rep.faithful:
        raise InconsistencyError("right translation action not faithful")
    return rep


def permutation_module(G: FiniteGroup) -> PermRep:
    """Module spanned by the points the group's own permutations move."""
    if not isinstance(G.realization, PermRealization):
        raise WrongRealization(
            "permutation module needs a permutation realization")
    images = np.array(G.elements, dtype=np.int64)
    return PermRep(G, images)


def _field_entry_block(f, code: int) -> np.ndarray:
    """e x e multiplication matrix of a field element over the prime field."""
    e = f.e
    M = np.zeros((e, e), dtype=np.int64)
    basis = 1
    for r in range(e):
        prod = f.mul(basis, code)
        M[r] = f._code_to_coeffs(prod)
        basis *= f.p
    return M


def natural_module(G: FiniteGroup) -> MatrixRep:
    """Inclusion module of a matrix group: rho(g) = transpose(g^{-1}),
    blown up over the prime field when the coefficient field is larger."""
    real = G.realization
    if not isinstance(real, MatRealization):
        raise WrongRealization("natural module needs a matrix realization")
    f = real.field
    d = real.dim
    gen_mats = []
    for val in G.generators:
        inv_t = np.array(real.inv(val), dtype=np.int64).reshape(d, d).T
        if f.e == 1:
            gen_mats.append(inv_t)
        else:
            big = np.zeros((d * f.e, d * f.e), dtype=np.int64)
            for i in range(d):
                for j in range(d):
                    big[i * f.e:(i + 1) * f.e, j * f.e:(j + 1) * f.e] = \
                        _field_entry_block(f, int(inv_t[i, j]))
            gen_mats.append(big)
    return build_representation(G, gen_mats)


def load_module_file(path: str, G: FiniteGroup) -> MatrixRep:
    """JSON module file: {"p": int, "dim": int, "generators": [row-major]}."""
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    for key in ("p", "dim", "generators"):
        if key not in data:
            raise PGroupsError(f"module file missing key {key!r}")
    if data["p"] != G.p:
        raise PGroupsError(
            f"module file prime {data['p']} does not match group prime {G.p}")
    d = data["dim"]
    mats = []
    for flat in data["generators"]:
        if len(flat) != d * d:
            raise DimensionMismatch(
                f"module file generator has {len(flat)} entries, wanted {d*d}")
        mats.append(np.array(flat, dtype=np.int64).reshape(d, d))
    return build_representation(G, mats)


# ---------------------------------------------------------------------------
# fixed spaces, j-exponents, offenders


def fixed_subspace(V: Representation, H: Subgroup) -> list[list[int]]:
    """Canonical echelon basis of the joint fixed space of H's generators."""
    rows = V.fixed_rows(H.generators())
    return [[int(x) for x in row] for row in rows]


def _log_p(n: int, p: int) -> int:
    e = 0
    while n > 1:
        if n % p:
            raise InconsistencyError(f"{n} is not a power of {p}")
        n //= p
        e += 1
    return e


def j_exponent(V: Representation, H: Subgroup) -> JExponent:
    e = _log_p(H.order, V.p) + V.fixed_dim_of(H) - V.dim
    return JExponent(e)


def offenders(V: Representation, budget: int | None = None) -> list[tuple[Subgroup, int]]:
    """(E, e) for every elementary abelian E != 1 with e >= 0, ascending."""
    got = V._cache.get("offenders")
    if got is None:
        G = V.group
        out = []
        for E in all_elementary_abelians(G, min_rank=1, budget=budget):
            e = j_exponent(V, E).e
            if e >= 0:
                out.append((E, e))
        got = out
        V._cache["offenders"] = got
    return got


def best_offenders(V: Representation) -> tuple[int | None, list[Subgroup]]:
    offs = offenders(V)
    if not offs:
        return None, []
    e0 = max(e for _, e in offs)
    return e0, [E for E, e in offs if e == e0]


def is_f_module(V: Representation) -> bool:
    return V.faithful and bool(offenders(V))


def mfs_check(V: Representation, H: Subgroup, K: Subgroup) -> CheckResult:
    """Submultiplicativity of j over a subgroup product, with the exact
    equality criterion C_V(H meet K) = C_V(H) + C_V(K)."""
    G = V.group
    name = G.name or "?"
    meet = G.subgroup_from_mask(H.mask & K.mask)
    join = G.subgroup(H.generators() + K.generators())
    product_size = H.order * K.order // meet.order
    if join.order != product_size:
        return CheckResult(
            "mfs", name, NOT_APPLICABLE,
            {"reason": "productNotSubgroup",
             "join_order": join.order, "product_size": product_size})
    e_h = j_exponent(V, H).e
    e_k = j_exponent(V, K).e
    e_join = j_exponent(V, join).e
    e_meet = j_exponent(V, meet).e
    inequality = e_join + e_meet >= e_h + e_k
    equality = e_join + e_meet == e_h + e_k
    summed = np.vstack([V.fixed_rows(H.generators()),
                        V.fixed_rows(K.generators())])
    sum_matches_meet = same_row_space(
        summed, V.fixed_rows(meet.generators()), V.p)
    consistent = inequality and (equality == sum_matches_meet)
    details = {
        "e_left": e_h, "e_right": e_k, "e_product": e_join, "e_meet": e_meet,
        "inequality": inequality, "equality": equality,
        "fixed_space_sum_matches": sum_matches_meet,
    }
    return CheckResult("mfs", name, HOLDS if consistent else VIOLATION,
                       details)


# ---------------------------------------------------------------------------
# quadratic elements and the orthogonality calculus


def is_quadratic_element(V: Representation, g: int) -> bool:
    return V.quadratic(g)


def unipotency_degree(V: Representation, g: int) -> int:
    return V.unipotency_degree(g)


def ghl_bound_check(V: Representation, g: int) -> bool:
    return V.unipotency_degree(g) <= V.p - 1


def quadratic_elements(V: Representation) -> list[int]:
    got = V._cache.get("quadratics")
    if got is None:
        G = V.group
        orders = G.element_orders
        got = [int(i) for i in np.flatnonzero(orders == G.p)
               if V.quadratic(int(i))]
        V._cache["quadratics"] = got
    return got


def is_orthogonal(V: Representation, g: int, h: int) -> bool:
    G = V.group
    if G.mul(g, h) != G.mul(h, g):
        return False
    return V.pair_zero(g, h)


def perp_subgroup(V: Representation, g: int) -> Subgroup:
    """{h : g and h commute and (rho(g)-I)(rho(h)-I) = 0}, verified closed."""
    if V.p == 2:
        raise OddPrimeRequired(
            "orthogonal-set subgroup structure is an odd-p statement")
    G = V.group
    members = [h for h in range(G.order) if is_orthogonal(V, g, h)]
    mask = mask_from_indices(members)
    if G.closure_mask(mask) != mask:
        raise InconsistencyError(
            f"orthogonal set of {word_str(G, g)} is not closed")
    H = G.subgroup_from_mask(mask)
    C = G.centralizer(g)
    if not H.issubset(C):
        raise InconsistencyError(
            "orthogonal set escapes the centralizer")
    return H


def is_quadratic_subgroup(V: Representation, E: Subgroup) -> bool:
    """Three equivalent criteria, all evaluated; disagreement is fatal."""
    if V.p == 2:
        raise OddPrimeRequired("quadratic-subgroup calculus is odd-p only")
    if not E.is_elementary_abelian():
        raise PGroupsError("quadratic-subgroup test needs elementary abelian")
    members = E.indices()
    by_elements = all(V.quadratic(g) for g in members if g != 0)
    by_pairs = all(is_orthogonal(V, g, h) for g in members for h in members)
    gens = E.generators()
    by_gens = all(is_orthogonal(V, a, b) for a in gens for b in gens)
    if not (by_elements == by_pairs == by_gens):
        raise InconsistencyError(
            "quadratic-subgroup criteria disagree: "
            f"elements={by_elements} pairs={by_pairs} generators={by_gens}")
    return by_elements


def _all_members_quadratic(V: Representation, E: Subgroup) -> bool:
    quad = set(quadratic_elements(V))
    return all(g == 0 or g in quad for g in E.indices())


# ---------------------------------------------------------------------------
# weakly closed quadratic offender search


def prop46_search(V: Representation, D: Subgroup | None = None) -> CheckResult:
    """Exhaustive search for a weakly closed quadratic offender attaining
    the maximum exponent, optionally inside the normal closure of D."""
    G = V.group
    name = G.name or "?"
    if not is_f_module(V):
        return CheckResult("offender-search", name, NOT_APPLICABLE,
                           {"reason": "not an F-module"})
    e0, best = best_offenders(V)
    pool = list(best)
    details: dict = {"e0": e0, "candidates_at_e0": len(pool)}
    if D is not None:
        e_d = j_exponent(V, D).e
        if not D.is_elementary_abelian() or D.is_trivial() or e_d != e0:
            return CheckResult(
                "offender-search", name, NOT_APPLICABLE,
                {"reason": "constraint subgroup is not an offender "
                           "attaining the maximum", "e_constraint": e_d,
                 "e0": e0})
        ncl = G.normal_closure(D.indices())
        pool = [E for E in pool if E.issubset(ncl)]
        details["constrained_to_normal_closure_of"] = subgroup_witness(G, D)
        details["pool_inside_closure"] = len(pool)
    pool.sort(key=lambda E: (-E.order, E.mask))
    rejected = []
    for E in pool:
        if V.p == 2:
            quad = _all_members_quadratic(V, E)
        else:
            quad = is_quadratic_subgroup(V, E)
        if not quad:
            rejected.append({"subgroup": subgroup_witness(G, E),
                             "reason": "not quadratic"})
            continue
        closed, bad = is_weakly_closed(G, E)
        if not closed:
            rejected.append({"subgroup": subgroup_witness(G, E),
                             "reason": "not weakly closed",
                             "conjugator": word_str(G, bad)})
            continue
        details["rejected"] = rejected
        return CheckResult(
            "offender-search", name, HOLDS, details,
            {"offender": subgroup_witness(G, E), "e": e0,
             "rank": E.rank(), "weakly_closed": True, "quadratic": True})
    details["rejected"] = rejected
    return CheckResult("offender-search", name, VIOLATION, details)


# ---------------------------------------------------------------------------
# conjecture checkers


def _central_socle(G: FiniteGroup) -> Subgroup:
    return G.center.omega1()


def _scan_central_quadratic(G, V):
    soc = _central_socle(G)
    hits = [g for g in soc.indices() if g != 0 and V.quadratic(g)]
    scan = [{"element": word_str(G, g), "degree": V.unipotency_degree(g)}
            for g in soc.indices() if g != 0]
    return hits, scan


def check_y2(G: FiniteGroup, V: Representation) -> CheckResult:
    """Central quadratic elements must exist once the module is an F-module."""
    name = G.name or "?"
    if G.order == 1:
        return CheckResult("y2", name, NOT_APPLICABLE,
                           {"reason": "trivial group"})
    if G.p == 2:
        hits, _ = _scan_central_quadratic(G, V)
        if not hits:
            raise InconsistencyError(
                "an involution in the center socle must act quadratically")
        return CheckResult("y2", name, HOLDS,
                           {"reason": "trivially true at p=2"},
                           {"central_quadratic": element_witness(G, hits[0])})
    if not is_f_module(V):
        reason = ("module not faithful" if not V.faithful
                  else "no offender exists")
        return CheckResult("y2", name, NOT_APPLICABLE, {"reason": reason})
    hits, scan = _scan_central_quadratic(G, V)
    e0, best = best_offenders(V)
    if hits:
        ghl_hits = [g for g in _central_socle(G).indices()
                    if g != 0 and V.unipotency_degree(g) <= G.p - 1]
        if not ghl_hits:
            raise InconsistencyError(
                "central quadratic element found but the degree bound "
                "has no witness: checks contradict each other")
        return CheckResult("y2", name, HOLDS, {"e0": e0},
                           {"central_quadratic": element_witness(G, hits[0])})
    return CheckResult(
        "y2", name, VIOLATION,
        {"e0": e0,
         "best_offenders": [subgroup_witness(G, E) for E in best],
         "central_socle_scan": scan,
         "module": V.describe()})


def check_ghl(G: FiniteGroup, V: Representation) -> CheckResult:
    """Some central socle element must act with degree at most p-1."""
    name = G.name or "?"
    if G.p == 2:
        return CheckResult("ghl", name, NOT_APPLICABLE,
                           {"reason": "stated for odd primes only"})
    if G.order == 1:
        return CheckResult("ghl", name, NOT_APPLICABLE,
                           {"reason": "trivial group"})
    if not is_f_module(V):
        reason = ("module not faithful" if not V.faithful
                  else "no offender exists")
        return CheckResult("ghl", name, NOT_APPLICABLE, {"reason": reason})
    soc = _central_socle(G)
    e0, best = best_offenders(V)
    hits = [g for g in soc.indices()
            if g != 0 and V.unipotency_degree(g) <= G.p - 1]
    if hits:
        g = hits[0]
        return CheckResult(
            "ghl", name, HOLDS, {"e0": e0},
            {"element": element_witness(G, g),
             "degree": V.unipotency_degree(g), "bound": G.p - 1})
    scan = [{"element": word_str(G, g), "degree": V.unipotency_degree(g)}
            for g in soc.indices() if g != 0]
    return CheckResult(
        "ghl", name, VIOLATION,
        {"e0": e0,
         "best_offenders": [subgroup_witness(G, E) for E in best],
         "central_socle_scan": scan,
         "module": V.describe()})


def check_weak_closure(G: FiniteGroup, V: Representation) -> CheckResult:
    """If some weakly closed quadratic elementary abelian subgroup exists,
    central quadratic elements must exist."""
    name = G.name or "?"
    if G.order == 1:
        return CheckResult("wc", name, NOT_APPLICABLE,
                           {"reason": "trivial group"})
    if G.p == 2:
        hits, _ = _scan_central_quadratic(G, V)
        if not hits:
            raise InconsistencyError(
                "an involution in the center socle must act quadratically")
        return CheckResult("wc", name, HOLDS,
                           {"reason": "trivially true at p=2"},
                           {"central_quadratic": element_witness(G, hits[0])})
    found = None
    for E in all_elementary_abelians(G, min_rank=1):
        if not _all_members_quadratic(V, E):
            continue
        closed, _ = is_weakly_closed(G, E)
        if closed:
            found = E
            break
    if found is None:
        return CheckResult(
            "wc", name, NOT_APPLICABLE,
            {"reason": "no weakly closed quadratic elementary abelian "
                       "subgroup exists"})
    hits, scan = _scan_central_quadratic(G, V)
    if hits:
        return CheckResult(
            "wc", name, HOLDS, {},
            {"weakly_closed_subgroup": subgroup_witness(G, found),
             "central_quadratic": element_witness(G, hits[0])})
    return CheckResult(
        "wc", name, VIOLATION,
        {"weakly_closed_subgroup": subgroup_witness(G, found),
         "central_socle_scan": scan,
         "module": V.describe()})


def hypothesis_instance(P: Subgroup, H: Subgroup,
                        V: Representation) -> CheckResult:
    """Direct-product instance: inside G = H x P with P nonabelian of
    cyclic center, any weakly closed quadratic elementary abelian subgroup
    not inside H x Z(P) forces the copy of the central socle of P to be
    quadratic."""
    G = V.group
    name = G.name or "?"
    if H.mask & P.mask != 1:
        raise PGroupsError("factors overlap; not an internal direct product")
    if H.order * P.order != G.order:
        raise PGroupsError("factor orders do not multiply to the group order")
    for a in H.generators():
        for b in P.generators():
            if G.mul(a, b) != G.mul(b, a):
                raise PGroupsError("factors do not commute elementwise")
    if P.is_abelian():
        return CheckResult("hyp52", name, NOT_APPLICABLE,
                           {"reason": "second factor is abelian"})
    zp = G.subgroup_from_mask(G.centralizer(P).mask & P.mask)
    if not zp.is_cyclic():
        return CheckResult("hyp52", name, NOT_APPLICABLE,
                           {"reason": "center of the second factor "
                                      "is not cyclic"})
    base = G.product_subgroup(H, zp)
    found = None
    for E in all_elementary_abelians(G, min_rank=1):
        if E.issubset(base):
            continue
        if not _all_members_quadratic(V, E):
            continue
        closed, _ = is_weakly_closed(G, E)
        if closed:
            found = E
            break
    if found is None:
        return CheckResult(
            "hyp52", name, NOT_APPLICABLE,
            {"reason": "no weakly closed quadratic elementary abelian "
                       "subgroup outside the first factor times the "
                       "second factor's center"})
    target = zp.omega1()
    bad = [g for g in target.indices() if g != 0 and not V.quadratic(g)]
    if bad:
        return CheckResult(
            "hyp52", name, VIOLATION,
            {"witness_subgroup": subgroup_witness(G, found),
             "non_quadratic_central": [element_witness(G, g) for g in bad],
             "module": V.describe()})
    return CheckResult(
        "hyp52", name, HOLDS, {},
        {"witness_subgroup": subgroup_witness(G, found),
         "central_socle": subgroup_witness(G, target)})


# ---------------------------------------------------------------------------
# deepest commutators, late and last quadratics


def _series_of_subgroup(G: FiniteGroup, L: Subgroup) -> list[Subgroup]:
    """Descending commutator chain of L as a group in its own right."""
    terms = [L]
    while not terms[-1].is_trivial():
        nxt = G.commutator_subgroup(terms[-1], L)
        if nxt.mask == terms[-1].mask:
            raise InconsistencyError("commutator chain of a p-subgroup stalls")
        terms.append(nxt)
    return terms[:-1]


def _deepest_within(G: FiniteGroup, terms: list[Subgroup],
                    g: int) -> tuple[int, set[int]]:
    T = G.table
    inv = G.inverses
    ig = int(inv[g])
    for r in range(len(terms), 0, -1):
        ks = np.fromiter(terms[r - 1].indices(), dtype=np.int64)
        vals = T[T[ig, inv[ks]], T[g, ks]]
        nz = vals[vals != 0]
        if nz.size:
            return r, {int(v) for v in nz}
    return 0, set()


def r0(G: FiniteGroup, g: int) -> int:
    if G.center.contains(g):
        raise NoDeepest(f"{word_str(G, g)} is central")
    terms = list(G.lower_central_series.terms)
    if terms[-1].is_trivial():
        terms = terms[:-1]
    r, _ = _deepest_within(G, terms, g)
    return r


def deepest_commutators(G: FiniteGroup, g: int) -> set[int]:
    if G.center.contains(g):
        raise NoDeepest(f"{word_str(G, g)} is central")
    terms = list(G.lower_central_series.terms)
    if terms[-1].is_trivial():
        terms = terms[:-1]
    _, vals = _deepest_within(G, terms, g)
    return vals


def locally_deepest(G: FiniteGroup, g: int, N: Subgroup) -> set[int]:
    """Deepest commutators of g computed inside C_G(g)N, cross-checked
    against the witnesses-in-N description."""
    if not N.is_normal():
        raise NotNormal("locally deepest commutators need a normal subgroup")
    C = G.centralizer(g)
    if N.issubset(C):
        raise NoDeepest(
            "the normal subgroup centralizes the element; no deepest "
            "commutator exists in the local subgroup")
    key = ("locdeep", g, N.mask)
    got = G._cache.get(key)
    if got is not None:
        return got
    L = G.product_subgroup(C, N)
    terms = _series_of_subgroup(G, L)
    r, vals = _deepest_within(G, terms, g)
    if r == 0:
        raise InconsistencyError("no deepest commutator despite a "
                                 "non-centralizing normal subgroup")
    T = G.table
    inv = G.inverses
    ig = int(inv[g])
    ks = np.fromiter(N.indices(), dtype=np.int64)
    via_n = T[T[ig, inv[ks]], T[g, ks]]
    if not vals.issubset(int(v) for v in via_n):
        raise InconsistencyError(
            "a deepest commutator in the local subgroup has no witness "
            "in the normal subgroup")
    G._cache[key] = vals
    return vals


@dataclass
class QuadReport:
    """Per-element verdicts for every element of order p."""
    group: str
    entries: list[dict] = field(default_factory=list)

    def quadratic_words(self) -> list[str]:
        return [e["element"] for e in self.entries if e["quadratic"]]

    def late_words(self) -> list[str]:
        return [e["element"] for e in self.entries if e.get("late")]

    def last_words(self) -> list[str]:
        return [e["element"] for e in self.entries if e.get("last")]

    def to_details(self) -> dict:
        return {"group": self.group, "entries": self.entries}


def _commutator_closure(G: FiniteGroup, g: int,
                        budget: int = DEFAULT_SCAN_BUDGET) -> set[int]:
    """All iterated commutators [g, h1, ..., hr], r >= 1, to stabilization."""
    T = G.table
    inv = G.inverses
    everyone = np.arange(G.order, dtype=np.int64)
    inv_all = inv[everyone]
    seen: set[int] = set()
    frontier = [g]
    spent = 0
    while frontier:
        nxt = []
        for c in frontier:
            spent += G.order
            if spent > budget:
                raise ScanBudgetExceeded(budget)
            ic = int(inv[c])
            vals = T[T[ic, inv_all], T[c, everyone]]
            for v in np.unique(vals):
                v = int(v)
                if v != 0 and v not in seen:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    return seen


def _late_verdict(G: FiniteGroup, V: Representation, g: int,
                  normals: list[Subgroup], quad: set[int]):
    C = G.centralizer(g)
    for N in normals:
        if N.issubset(C):
            continue
        for y in sorted(locally_deepest(G, g, N)):
            if y in quad:
                return False, {"normal": subgroup_witness(G, N),
                               "deepest_quadratic": word_str(G, y)}
    return True, None


def classify_quadratics(G: FiniteGroup, V: Representation) -> QuadReport:
    """Late/last classification of every quadratic element."""
    if G.p == 2:
        raise OddPrimeRequired("late/last classification is odd-p only")
    got = V._cache.get("quadreport")
    if got is not None:
        return got
    report = QuadReport(G.name or "?")
    quad = set(quadratic_elements(V))
    normals = G.normal_subgroups()
    orders = G.element_orders
    for g in np.flatnonzero(orders == G.p):
        g = int(g)
        entry = {"element": word_str(G, g), "quadratic": g in quad}
        if g in quad:
            late, lw = _late_verdict(G, V, g, normals, quad)
            closure = _commutator_closure(G, g)
            bad_last = sorted(y for y in closure if y in quad)
            entry["late"] = late
            if lw:
                entry["late_witness"] = lw
            entry["last"] = not bad_last
            if bad_last:
                entry["last_witness"] = word_str(G, bad_last[0])
            if entry["last"] and not entry["late"]:
                raise InconsistencyError(
                    f"{entry['element']} is last but not late: "
                    "classification is internally inconsistent")
        report.entries.append(entry)
    V._cache["quadreport"] = report
    return report


def lemma83_check(G: FiniteGroup, V: Representation) -> CheckResult:
    """Late quadratics live in the socle of the center of the Y-subgroup."""
    from .series import y_subgroup

    name = G.name or "?"
    if G.p == 2:
        return CheckResult("lemma83", name, NOT_APPLICABLE,
                           {"reason": "odd-p classification machinery"})
    report = classify_quadratics(G, V)
    late = [e for e in report.entries if e.get("late")]
    Y = y_subgroup(G)
    socle = G.subgroup_from_mask(Y.mask & G.centralizer(Y).mask).omega1()
    socle_words = {word_str(G, i) for i in socle.indices()}
    escapes = [e["element"] for e in late
               if e["element"] not in socle_words]
    details = {"late_count": len(late), "y_order": Y.order,
               "socle_order": socle.order}
    if escapes:
        details["outside"] = escapes
        return CheckResult("lemma83", name, VIOLATION, details)
    return CheckResult("lemma83", name, HOLDS, details)


def lemma84_check(G: FiniteGroup, V: Representation) -> CheckResult:
    """Every quadratic element centralizes the span of the last quadratics."""
    name = G.name or "?"
    if G.p == 2:
        return CheckResult("lemma84", name, NOT_APPLICABLE,
                           {"reason": "odd-p classification machinery"})
    quad = quadratic_elements(V)
    quad_set = set(quad)
    last = []
    for g in quad:
        closure = _commutator_closure(G, g)
        if not (closure & quad_set):
            last.append(g)
    H = G.subgroup(last) if last else G.trivial_subgroup()
    bad = []
    for g in quad:
        if any(G.mul(g, h) != G.mul(h, g) for h in H.generators()):
            bad.append(word_str(G, g))
    details = {"last_count": len(last), "span_order": H.order,
               "quadratic_count": len(quad)}
    if bad:
        details["non_centralizing"] = bad
        return CheckResult("lemma84", name, VIOLATION, details)
    return CheckResult("lemma84", name, HOLDS, details)


def thm17_check(G: FiniteGroup, V: Representation) -> CheckResult:
    """No central quadratic elements forces the quadratic span proper."""
    name = G.name or "?"
    if G.p == 2:
        return CheckResult("thm17", name, NOT_APPLICABLE,
                           {"reason": "odd-p statement"})
    if G.order == 1:
        return CheckResult("thm17", name, NOT_APPLICABLE,
                           {"reason": "trivial group"})
    hits, _ = _scan_central_quadratic(G, V)
    if hits:
        return CheckResult(
            "thm17", name, NOT_APPLICABLE,
            {"reason": "a central quadratic element exists",
             "witness": word_str(G, hits[0])})
    quad = quadratic_elements(V)
    span = G.subgroup(quad) if quad else G.trivial_subgroup()
    details = {"quadratic_count": len(quad), "span_order": span.order,
               "group_order": G.order}
    if span.order < G.order:
        return CheckResult("thm17", name, HOLDS, details)
    return CheckResult("thm17", name, VIOLATION, details)


# ---------------------------------------------------------------------------
# powerful groups


def prop91_premise(G: FiniteGroup) -> bool:
    """Is the intersection of the derived subgroup with the order-p span
    abelian?"""
    if G.p == 2:
        raise OddPrimeRequired("premise is examined for odd primes")
    whole = G.whole_subgroup()
    derived = G.commutator_subgroup(whole, whole)
    meet = G.subgroup_from_mask(derived.mask & G.omega1.mask)
    return meet.is_abelian()


def thm92_check(G: FiniteGroup, V: Representation) -> CheckResult:
    """Powerful groups must never produce a central-quadratic violation."""
    name = G.name or "?"
    if G.p == 2:
        return CheckResult("thm92", name, NOT_APPLICABLE,
                           {"reason": "powerful is defined here for odd p"})
    if not G.is_powerful():
        return CheckResult("thm92", name, NOT_APPLICABLE,
                           {"reason": "group is not powerful"})
    inner = check_y2(G, V)
    details = {"inner_verdict": inner.verdict, "inner_details": inner.details}
    if inner.verdict in (HOLDS, NOT_APPLICABLE):
        return CheckResult("thm92", name, HOLDS, details, inner.witness)
    return CheckResult("thm92", name, VIOLATION, details, inner.witness)
