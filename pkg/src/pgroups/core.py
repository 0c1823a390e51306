"""Exact finite p-group machinery on top of a value-level realization.

A FiniteGroup is produced by breadth-first enumeration from the
identity: within each BFS level the newly discovered values are sorted
by their realization order before indices are assigned, so element
numbering, generator words and every downstream report are reproducible
across runs and platforms.  Element 0 is always the identity.

Subgroups are bitmasks over element indices.  The multiplication table
(built lazily, via the parent-pointer column recurrence) makes the hot
scans cheap: centralizers, normalizers, conjugacy classes, commutator
subgroups and series are all numpy gathers over table columns.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import (
    CapExceeded,
    InconsistencyError,
    NotNormal,
    NotPGroup,
    OddPrimeRequired,
    PGroupsError,
    SubgroupCapExceeded,
)
from .realizations import Realization

DEFAULT_ELEMENT_CAP = 2_000_000
DEFAULT_SUBGROUP_CAP = 100_000
DEFAULT_SCAN_BUDGET = 5_000_000

# lazy multiplication tables are only built up to this order
TABLE_CAP = 4600


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def mask_from_indices(indices) -> int:
    m = 0
    for i in indices:
        m |= 1 << int(i)
    return m


def indices_from_mask(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


class Subgroup:
    """A subgroup of an enumerated group, stored as a member bitmask."""

    __slots__ = ("group", "mask", "_cache")

    def __init__(self, group: "FiniteGroup", mask: int):
        self.group = group
        self.mask = mask
        self._cache: dict = {}

    @property
    def order(self) -> int:
        return self.mask.bit_count()

    def indices(self) -> tuple[int, ...]:
        got = self._cache.get("indices")
        if got is None:
            got = indices_from_mask(self.mask)
            self._cache["indices"] = got
        return got

    def generators(self) -> tuple[int, ...]:
        """Canonical generating set: greedy over ascending element index."""
        got = self._cache.get("gens")
        if got is None:
            G = self.group
            closed = 1  # identity
            gens = []
            for i in self.indices():
                if i and not (closed >> i) & 1:
                    gens.append(i)
                    closed = G.closure_mask(closed | (1 << i))
            if closed != self.mask:
                raise InconsistencyError("subgroup mask is not closed")
            got = tuple(gens)
            self._cache["gens"] = got
        return got

    def contains(self, idx: int) -> bool:
        return bool((self.mask >> idx) & 1)

    def issubset(self, other: "Subgroup") -> bool:
        return self.mask & other.mask == self.mask

    def is_trivial(self) -> bool:
        return self.mask == 1

    def is_whole_group(self) -> bool:
        return self.order == self.group.order

    def is_normal(self) -> bool:
        got = self._cache.get("normal")
        if got is None:
            G = self.group
            got = True
            for s in range(len(G.generators)):
                col = G.conj_column(s)
                for x in self.generators():
                    if not self.contains(int(col[x])):
                        got = False
                        break
                if not got:
                    break
            self._cache["normal"] = got
        return got

    def is_abelian(self) -> bool:
        got = self._cache.get("abelian")
        if got is None:
            G = self.group
            gens = self.generators()
            got = all(G.mul(a, b) == G.mul(b, a) for a in gens for b in gens)
            self._cache["abelian"] = got
        return got

    def is_elementary_abelian(self) -> bool:
        if not self.is_abelian():
            return False
        p = self.group.p
        return all(self.group.element_orders[g] == p for g in self.generators())

    def rank(self) -> int:
        """log_p of the order, for elementary abelian subgroups."""
        n = self.order
        p = self.group.p
        r = 0
        while n > 1:
            n //= p
            r += 1
        return r

    def is_cyclic(self) -> bool:
        orders = self.group.element_orders
        return any(int(orders[i]) == self.order for i in self.indices())

    def omega1(self) -> "Subgroup":
        """Subgroup generated by the members of order dividing p."""
        got = self._cache.get("omega1")
        if got is None:
            G = self.group
            orders = G.element_orders
            got = G.subgroup([i for i in self.indices()
                              if int(orders[i]) <= G.p])
            self._cache["omega1"] = got
        return got

    def conjugate(self, g: int) -> "Subgroup":
        G = self.group
        ig = G.inverse(g)
        members = np.fromiter(self.indices(), dtype=np.int64)
        conj = G.table[G.table[ig, members], g]
        return Subgroup(G, mask_from_indices(conj.tolist()))

    def __eq__(self, other):
        return (isinstance(other, Subgroup) and self.group is other.group
                and self.mask == other.mask)

    def __hash__(self):
        return hash((id(self.group), self.mask))

    def __repr__(self):
        return f"Subgroup(order={self.order} of |G|={self.group.order})"


@dataclass
class SeriesChain:
    """An ascending chain of subgroups with a label for its kind."""

    kind: str
    terms: list[Subgroup]

    def orders(self) -> list[int]:
        return [t.order for t in self.terms]


class FiniteGroup:
    """An exactly enumerated finite p-group."""

    def __init__(self, realization: Realization, generators, p: int,
                 cap: int = DEFAULT_ELEMENT_CAP, name: str = "",
                 named_subgroups=None, meta=None, validate: bool = True):
        if not _is_prime(p):
            raise NotPGroup(f"{p} is not prime")
        self.realization = realization
        self.p = p
        self.name = name
        gen_values = list(generators)
        if validate:
            for g in gen_values:
                realization.validate(g)
        self._enumerate(gen_values, cap)
        self.named_raw = dict(named_subgroups or {})
        self.meta = dict(meta or {})
        self._cache: dict = {}

    # -- enumeration -------------------------------------------------

    def _enumerate(self, gen_values, cap):
        real = self.realization
        ident = real.identity()
        elements = [ident]
        index = {ident: 0}
        words: list[tuple[int, ...]] = [()]
        parents: list[tuple[int, int]] = [(-1, -1)]
        frontier = [0]
        while frontier:
            discovered = {}
            for i in frontier:
                base = elements[i]
                for pos, g in enumerate(gen_values):
                    v = real.mul(base, g)
                    if v not in index and v not in discovered:
                        discovered[v] = (i, pos)
                        if len(index) + len(discovered) > cap:
                            raise CapExceeded(cap)
            new_vals = sorted(discovered)
            frontier = []
            for v in new_vals:
                idx = len(elements)
                parent, pos = discovered[v]
                elements.append(v)
                index[v] = idx
                words.append(words[parent] + (pos,))
                parents.append((parent, pos))
                frontier.append(idx)
        self.elements = elements
        self.index = index
        self.words = words
        self.parents = parents
        self.generators = gen_values
        self.gen_indices = tuple(index[g] for g in gen_values)
        order = len(elements)
        self.order = order
        n, k = order, 0
        while n % self.p == 0:
            n //= self.p
            k += 1
        if n != 1:
            raise NotPGroup(f"group order {order} is not a power of {self.p}")
        self.log_order = k

    # -- table machinery ---------------------------------------------

    @property
    def table(self) -> np.ndarray:
        got = getattr(self, "_table", None)
        if got is None:
            if self.order > TABLE_CAP:
                raise SubgroupCapExceeded(
                    TABLE_CAP,
                    f"order {self.order} beyond multiplication-table bound",
                )
            got = self._build_table()
            self._table = got
        return got

    def _build_table(self) -> np.ndarray:
        n = self.order
        real = self.realization
        gencols = []
        for g in self.generators:
            col = np.fromiter(
                (self.index[real.mul(e, g)] for e in self.elements),
                dtype=np.int32, count=n)
            gencols.append(col)
        table = np.zeros((n, n), dtype=np.int32)
        table[:, 0] = np.arange(n, dtype=np.int32)
        # column j follows from its BFS parent: j = parent * gen
        for j in range(1, n):
            parent, pos = self.parents[j]
            table[:, j] = gencols[pos][table[:, parent]]
        return table

    @property
    def inverses(self) -> np.ndarray:
        got = getattr(self, "_inverses", None)
        if got is None:
            got = np.argmax(self.table == 0, axis=1).astype(np.int32)
            self._inverses = got
        return got

    @property
    def element_orders(self) -> np.ndarray:
        got = getattr(self, "_orders", None)
        if got is None:
            n = self.order
            T = self.table
            orders = np.zeros(n, dtype=np.int64)
            orders[0] = 1
            power = np.arange(n, dtype=np.int32)
            k = 1
            while (orders == 0).any():
                k += 1
                power = T[power, np.arange(n)]
                hit = (power == 0) & (orders == 0)
                orders[hit] = k
                if k > n:
                    raise InconsistencyError("order computation ran away")
            self._orders = orders
            got = orders
        return got

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inverse(self, a: int) -> int:
        return int(self.inverses[a])

    def conj(self, g: int, h: int) -> int:
        """h^-1 g h"""
        T = self.table
        return int(T[T[self.inverse(h), g], h])

    def comm(self, g: int, h: int) -> int:
        """[g, h] = g^-1 h^-1 g h"""
        T = self.table
        return int(T[T[self.inverse(g), self.inverse(h)], T[g, h]])

    def power(self, g: int, k: int) -> int:
        if k < 0:
            return self.power(self.inverse(g), -k)
        result, base = 0, g
        T = self.table
        while k:
            if k & 1:
                result = int(T[result, base])
            base = int(T[base, base])
            k >>= 1
        return result

    def conj_column(self, gen_pos: int) -> np.ndarray:
        """Vector of s^-1 g s over all g, for generator number gen_pos."""
        cols = self._cache.setdefault("conj_columns", {})
        got = cols.get(gen_pos)
        if got is None:
            T = self.table
            s = self.gen_indices[gen_pos]
            got = T[T[self.inverse(s)], s]
            cols[gen_pos] = got
        return got

    def comm_column(self, h: int) -> np.ndarray:
        """Vector of [g, h] over all g."""
        T = self.table
        a = T[self.inverses, self.inverse(h)]
        b = T[:, h]
        return T[a, b]

    # -- elements and words ------------------------------------------

    def word_of(self, idx: int) -> tuple[int, ...]:
        return self.words[idx]

    def element_from_word(self, word) -> int:
        acc = 0
        for pos in word:
            if not (0 <= pos < len(self.gen_indices)):
                raise PGroupsError(f"word position {pos} out of range")
            acc = self.mul(acc, self.gen_indices[pos])
        return acc

    # -- subgroup construction ---------------------------------------

    def subgroup(self, seed_indices) -> Subgroup:
        return Subgroup(self, self.closure_mask(mask_from_indices(seed_indices) | 1))

    def subgroup_from_mask(self, mask: int) -> Subgroup:
        return Subgroup(self, mask)

    def trivial_subgroup(self) -> Subgroup:
        return Subgroup(self, 1)

    def whole_subgroup(self) -> Subgroup:
        return Subgroup(self, (1 << self.order) - 1)

    def closure_mask(self, seed_mask: int) -> int:
        """Closure of a set of elements (identity implied) under products."""
        T = self.table
        seen = np.zeros(self.order, dtype=bool)
        seed = indices_from_mask(seed_mask | 1)
        members = np.fromiter(seed, dtype=np.int64)
        seen[members] = True
        new = members
        while new.size:
            prods = np.concatenate(
                [T[np.ix_(new, members)].ravel(), T[np.ix_(members, new)].ravel()])
            prods = np.unique(prods)
            fresh = prods[~seen[prods]]
            if fresh.size == 0:
                break
            seen[fresh] = True
            members = np.flatnonzero(seen)
            new = fresh
        return mask_from_indices(np.flatnonzero(seen).tolist())

    def named_subgroup(self, name: str) -> Subgroup:
        try:
            raw = self.named_raw[name]
        except KeyError:
            raise PGroupsError(f"no named subgroup {name!r}") from None
        return self.subgroup([self.index[v] for v in raw])

    # -- centralizers, normalizers, center ---------------------------

    def centralizer_mask(self, target_indices) -> int:
        T = self.table
        ok = np.ones(self.order, dtype=bool)
        for t in target_indices:
            ok &= T[:, t] == T[t, :]
        return mask_from_indices(np.flatnonzero(ok).tolist())

    def centralizer(self, target) -> Subgroup:
        if isinstance(target, Subgroup):
            idxs = target.generators()
        elif isinstance(target, int):
            idxs = (target,)
        else:
            idxs = tuple(target)
        return Subgroup(self, self.centralizer_mask(idxs))

    def normalizer(self, H: Subgroup) -> Subgroup:
        T = self.table
        n = self.order
        member = np.zeros(n, dtype=bool)
        member[list(H.indices())] = True
        ok = np.ones(n, dtype=bool)
        rng = np.arange(n, dtype=np.int32)
        for x in H.generators():
            conj = T[T[self.inverses, x], rng]
            ok &= member[conj]
        return Subgroup(self, mask_from_indices(np.flatnonzero(ok).tolist()))

    @property
    def center(self) -> Subgroup:
        got = self._cache.get("center")
        if got is None:
            T = self.table
            got = Subgroup(self, mask_from_indices(
                np.flatnonzero((T == T.T).all(axis=1)).tolist()))
            self._cache["center"] = got
        return got

    def is_abelian(self) -> bool:
        return self.center.order == self.order

    # -- characteristic subgroups ------------------------------------

    @property
    def omega1(self) -> Subgroup:
        """Subgroup generated by the elements of order dividing p."""
        got = self._cache.get("omega1")
        if got is None:
            small = np.flatnonzero(self.element_orders <= self.p)
            got = self.subgroup(small.tolist())
            self._cache["omega1"] = got
        return got

    @property
    def agemo(self) -> Subgroup:
        """Subgroup generated by the p-th powers."""
        got = self._cache.get("agemo")
        if got is None:
            T = self.table
            n = self.order
            result = np.zeros(n, dtype=np.int32)
            base = np.arange(n, dtype=np.int32)
            k = self.p
            while k:
                if k & 1:
                    result = T[result, base]
                base = T[base, base]
                k >>= 1
            got = self.subgroup(np.unique(result).tolist())
            self._cache["agemo"] = got
        return got

    def is_powerful(self) -> bool:
        """Commutators lie among p-th powers; defined here for odd p only."""
        if self.p == 2:
            raise OddPrimeRequired("powerful test implemented for odd p")
        derived = self.commutator_subgroup(self.whole_subgroup(),
                                           self.whole_subgroup())
        return derived.issubset(self.agemo)

    # -- commutator machinery ----------------------------------------

    def commutator_subgroup(self, A: Subgroup, B: Subgroup) -> Subgroup:
        """Subgroup generated by all [a, b] over members of A and B."""
        key = ("comm", A.mask, B.mask)
        got = self._cache.get(key)
        if got is not None:
            return got
        T = self.table
        inv = self.inverses
        small, big = (A, B) if A.order <= B.order else (B, A)
        big_idx = np.fromiter(big.indices(), dtype=np.int64)
        seen = np.zeros(self.order, dtype=bool)
        seen[0] = True
        for a in small.indices():
            ia = inv[a]
            vals = T[T[ia, inv[big_idx]], T[a, big_idx]]
            seen[vals] = True
        got = self.subgroup(np.flatnonzero(seen).tolist())
        self._cache[key] = got
        self._cache[("comm", B.mask, A.mask)] = got
        return got

    def iterated_commutator(self, A: Subgroup, B: Subgroup, k: int) -> Subgroup:
        """[A, B; k] with [A, B; 1] = [A, B] and [X; k+1] = [[X; k], B]."""
        if k < 1:
            raise PGroupsError("iteration count must be at least 1")
        cur = self.commutator_subgroup(A, B)
        for _ in range(k - 1):
            if cur.is_trivial():
                return cur
            cur = self.commutator_subgroup(cur, B)
        return cur

    @property
    def lower_central_series(self) -> SeriesChain:
        got = self._cache.get("lcs")
        if got is None:
            whole = self.whole_subgroup()
            terms = [whole]
            while terms[-1].order > 1:
                nxt = self.commutator_subgroup(terms[-1], whole)
                if nxt.mask == terms[-1].mask:
                    raise InconsistencyError("lower central series stalled")
                terms.append(nxt)
            got = SeriesChain("lower-central", terms)
            self._cache["lcs"] = got
        return got

    @property
    def upper_central_series(self) -> SeriesChain:
        got = self._cache.get("ucs")
        if got is None:
            n = self.order
            terms = [self.trivial_subgroup()]
            member = np.zeros(n, dtype=bool)
            member[0] = True
            while terms[-1].order < n:
                ok = np.ones(n, dtype=bool)
                for s in range(len(self.generators)):
                    h = self.gen_indices[s]
                    ok &= member[self.comm_column(h)]
                nxt = mask_from_indices(np.flatnonzero(ok).tolist())
                if nxt == terms[-1].mask:
                    raise InconsistencyError("upper central series stalled")
                terms.append(Subgroup(self, nxt))
                member = np.zeros(n, dtype=bool)
                member[list(terms[-1].indices())] = True
            got = SeriesChain("upper-central", terms)
            self._cache["ucs"] = got
        return got

    @property
    def nilpotency_class(self) -> int:
        return len(self.lower_central_series.terms) - 1

    @property
    def exponent(self) -> int:
        return int(self.element_orders.max())

    def lower_central_term(self, r: int) -> Subgroup:
        """K_r with K_1 the whole group; K_r = 1 beyond the series."""
        terms = self.lower_central_series.terms
        if r < 1:
            raise PGroupsError("series index starts at 1")
        if r <= len(terms):
            return terms[r - 1]
        return self.trivial_subgroup()

    # -- conjugacy and normal structure ------------------------------

    @property
    def conjugacy_classes(self) -> list[tuple[int, ...]]:
        got = self._cache.get("classes")
        if got is None:
            n = self.order
            cols = [self.conj_column(s) for s in range(len(self.generators))]
            assigned = np.full(n, -1, dtype=np.int64)
            classes = []
            for i in range(n):
                if assigned[i] >= 0:
                    continue
                orbit = {i}
                frontier = [i]
                while frontier:
                    nxt = []
                    for x in frontier:
                        for col in cols:
                            y = int(col[x])
                            if y not in orbit:
                                orbit.add(y)
                                nxt.append(y)
                    frontier = nxt
                cid = len(classes)
                members = tuple(sorted(orbit))
                classes.append(members)
                for m in members:
                    assigned[m] = cid
            self._cache["class_of"] = assigned
            self._cache["classes"] = classes
            got = classes
        return got

    def normal_closure(self, seed_indices) -> Subgroup:
        class_of = self._class_of()
        classes = self.conjugacy_classes
        members = set()
        for i in seed_indices:
            members.update(classes[class_of[i]])
        sub = self.subgroup(sorted(members))
        # the closure of a union of classes is again class-closed
        return sub

    def _class_of(self) -> np.ndarray:
        self.conjugacy_classes
        return self._cache["class_of"]

    def normal_subgroups(self, cap: int = DEFAULT_SUBGROUP_CAP) -> list[Subgroup]:
        """All normal subgroups, by breadth-first joins of conjugacy classes."""
        got = self._cache.get("normals")
        if got is not None:
            return got
        classes = self.conjugacy_classes
        class_masks = [mask_from_indices(c) for c in classes]
        trivial = 1
        found = {trivial}
        queue = [trivial]
        while queue:
            cur = queue.pop()
            for cm in class_masks:
                if cm & cur == cm:
                    continue
                joined = self.closure_mask(cur | cm)
                if joined not in found:
                    found.add(joined)
                    if len(found) > cap:
                        raise SubgroupCapExceeded(cap, "normal lattice cap hit")
                    queue.append(joined)
        got = [Subgroup(self, m) for m in
               sorted(found, key=lambda m: (m.bit_count(), m))]
        self._cache["normals"] = got
        return got

    def all_subgroups(self, cap: int = DEFAULT_SUBGROUP_CAP) -> list[Subgroup]:
        """Every subgroup, by index-p cyclic extensions level by level."""
        got = self._cache.get("allsubs")
        if got is not None:
            return got
        p = self.p
        T = self.table
        powcol = self._power_column(p)
        found = {1}
        level = [1]
        while level:
            nxt = []
            for hm in level:
                H = Subgroup(self, hm)
                ncand = self.normalizer(H).indices()
                h_idx = np.fromiter(H.indices(), dtype=np.int64)
                for x in ncand:
                    if (hm >> x) & 1:
                        continue
                    if not (hm >> int(powcol[x])) & 1:
                        continue
                    mask = hm
                    cur = x
                    for _ in range(p):
                        mask |= mask_from_indices(T[h_idx, cur].tolist())
                        cur = int(T[cur, x])
                    if mask not in found:
                        found.add(mask)
                        if len(found) > cap:
                            raise SubgroupCapExceeded(cap, "subgroup cap hit")
                        nxt.append(mask)
            level = nxt
        got = [Subgroup(self, m) for m in
               sorted(found, key=lambda m: (m.bit_count(), m))]
        self._cache["allsubs"] = got
        return got

    def _power_column(self, k: int) -> np.ndarray:
        key = ("powcol", k)
        got = self._cache.get(key)
        if got is None:
            T = self.table
            n = self.order
            result = np.zeros(n, dtype=np.int32)
            base = np.arange(n, dtype=np.int32)
            e = k
            while e:
                if e & 1:
                    result = T[result, base]
                base = T[base, base]
                e >>= 1
            self._cache[key] = result
            got = result
        return got

    # -- quotients and products --------------------------------------

    def quotient(self, N: Subgroup):
        """Quotient group realized by its own multiplication table.

        Returns (Q, project, reps): project maps an element index of
        this group to a coset index of Q, reps lists one representative
        per coset (the smallest member, which also orders the cosets).
        """
        if not N.is_normal():
            raise NotNormal("quotient by a non-normal subgroup")
        T = self.table
        n = self.order
        n_idx = np.fromiter(N.indices(), dtype=np.int64)
        coset = np.full(n, -1, dtype=np.int64)
        reps = []
        for i in range(n):
            if coset[i] < 0:
                cid = len(reps)
                reps.append(i)
                coset[T[n_idx, i]] = cid
        m = len(reps)
        reps_arr = np.fromiter(reps, dtype=np.int64)
        qtable = coset[T[np.ix_(reps_arr, reps_arr)]]
        from .realizations import TableRealization

        real = TableRealization(qtable.tolist())
        gen_imgs = [int(coset[g]) for g in self.gen_indices]
        Q = FiniteGroup(real, gen_imgs, self.p,
                        name=f"{self.name or 'G'}/N")
        # table indices of the quotient realization are re-enumerated;
        # map coset ids through Q's index for a stable projection
        proj = np.fromiter((Q.index[int(c)] for c in coset), dtype=np.int64)
        rep_of = [0] * m
        for cid in range(m):
            rep_of[Q.index[cid]] = reps[cid]
        return Q, proj, rep_of

    def product_subgroup(self, C: Subgroup, N: Subgroup) -> Subgroup:
        """The product set CN, which must equal the join (N normal)."""
        if not N.is_normal():
            raise NotNormal("product subgroup needs a normal right factor")
        T = self.table
        n_idx = np.fromiter(N.indices(), dtype=np.int64)
        seen = np.zeros(self.order, dtype=bool)
        for c in C.indices():
            seen[T[c, n_idx]] = True
        prod_mask = mask_from_indices(np.flatnonzero(seen).tolist())
        join = self.closure_mask(C.mask | N.mask)
        if prod_mask != join:
            raise InconsistencyError("product set CN differs from join")
        return Subgroup(self, prod_mask)

    # -- misc ---------------------------------------------------------

    def abelian_invariants(self) -> tuple[int, ...]:
        """Cyclic factor orders of the abelianization, largest first.

        Read off the order histogram of G/G': in an abelian p-group with
        factors p^(a_1) >= p^(a_2) >= ..., the count of elements with
        x^(p^k) = 1 is p^sum(min(a_i, k)), which pins down the partition.
        """
        derived = self.commutator_subgroup(self.whole_subgroup(),
                                           self.whole_subgroup())
        Q, _, _ = self.quotient(derived)
        if Q.order == 1:
            return ()
        p = self.p
        orders = Q.element_orders
        s = [0]
        bound = 1
        while bound < Q.exponent:
            bound *= p
            cnt = int((orders <= bound).sum())
            k = 0
            while p ** k < cnt:
                k += 1
            s.append(k)
        # d_k = number of factors with exponent >= k
        d = [s[k] - s[k - 1] for k in range(1, len(s))]
        factors = []
        for i in range(d[0]):
            a = max(k + 1 for k in range(len(d)) if d[k] > i)
            factors.append(p ** a)
        return tuple(sorted(factors, reverse=True))

    def __repr__(self):
        return (f"FiniteGroup(p={self.p}, order={self.order}, "
                f"kind={self.realization.kind}" +
                (f", name={self.name!r}" if self.name else "") + ")")


def enumerate_group(realization, generators, p, cap=DEFAULT_ELEMENT_CAP,
                    **kw) -> FiniteGroup:
    return FiniteGroup(realization, generators, p, cap=cap, **kw)
