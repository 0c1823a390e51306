"""Concrete element realizations behind every group.

A realization owns the value-level arithmetic: permutation values are
tuples of images, matrix values are row-major tuples of field codes,
table values are integer indices into an explicit multiplication table.
All values are immutable and totally ordered within one realization,
which is what makes breadth-first enumeration deterministic.

Composition convention is "apply left factor first": permutations are
composed so that (a * b)(i) = b(a(i)), and matrix products act on row
vectors multiplied on the right.  The two conventions agree when a
permutation is written as the matrix that permutes basis row vectors.
"""

from __future__ import annotations

from .errors import DimensionMismatch, MixedRealization, NotInvertible, PGroupsError
from .gf import GF, gf


class Realization:
    kind = "abstract"

    def mul(self, a, b):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def identity(self):
        raise NotImplementedError

    def validate(self, a):
        raise NotImplementedError

    def check_same(self, other: "Realization"):
        if self != other:
            raise MixedRealization(f"cannot mix {self} with {other}")


class PermRealization(Realization):
    """Permutations of 0..degree-1 as image tuples."""

    kind = "perm"

    def __init__(self, degree: int):
        if degree < 1:
            raise PGroupsError("permutation degree must be positive")
        self.degree = degree

    def mul(self, a, b):
        return tuple(b[x] for x in a)

    def inv(self, a):
        out = [0] * self.degree
        for i, x in enumerate(a):
            out[x] = i
        return tuple(out)

    def identity(self):
        return tuple(range(self.degree))

    def validate(self, a):
        if len(a) != self.degree or sorted(a) != list(range(self.degree)):
            raise PGroupsError(f"not a permutation of degree {self.degree}: {a!r}")

    def __eq__(self, other):
        return isinstance(other, PermRealization) and self.degree == other.degree

    def __hash__(self):
        return hash(("perm", self.degree))

    def __repr__(self):
        return f"PermRealization(degree={self.degree})"


class MatRealization(Realization):
    """Invertible dim x dim matrices over GF(q), row-major code tuples."""

    kind = "mat"

    def __init__(self, dim: int, field: GF | int):
        if dim < 1:
            raise PGroupsError("matrix dimension must be positive")
        self.dim = dim
        self.field = field if isinstance(field, GF) else gf(field)

    def mul(self, a, b):
        d = self.dim
        f = self.field
        fmul = f._mul
        fadd = f._add
        out = []
        for i in range(d):
            row = a[i * d:(i + 1) * d]
            for j in range(d):
                acc = 0
                for k in range(d):
                    acc = fadd[acc][fmul[row[k]][b[k * d + j]]]
                out.append(acc)
        return tuple(out)

    def identity(self):
        d = self.dim
        return tuple(1 if i == j else 0 for i in range(d) for j in range(d))

    def inv(self, a):
        # Gauss-Jordan over the field
        d = self.dim
        f = self.field
        m = [list(a[i * d:(i + 1) * d]) + [1 if j == i else 0 for j in range(d)]
             for i in range(d)]
        for col in range(d):
            piv = None
            for r in range(col, d):
                if m[r][col] != 0:
                    piv = r
                    break
            if piv is None:
                raise NotInvertible("singular matrix")
            m[col], m[piv] = m[piv], m[col]
            s = f.inv(m[col][col])
            m[col] = [f.mul(s, x) for x in m[col]]
            for r in range(d):
                if r != col and m[r][col] != 0:
                    c = m[r][col]
                    m[r] = [f.sub(x, f.mul(c, y)) for x, y in zip(m[r], m[col])]
        return tuple(m[i][d + j] for i in range(d) for j in range(d))

    def validate(self, a):
        d = self.dim
        if len(a) != d * d:
            raise DimensionMismatch(f"expected {d}x{d} matrix, got {len(a)} entries")
        q = self.field.q
        if any(not (0 <= x < q) for x in a):
            raise PGroupsError("matrix entry outside field code range")
        self.inv(a)

    def __eq__(self, other):
        return (isinstance(other, MatRealization)
                and self.dim == other.dim and self.field == other.field)

    def __hash__(self):
        return hash(("mat", self.dim, self.field))

    def __repr__(self):
        return f"MatRealization(dim={self.dim}, field={self.field})"


class TableRealization(Realization):
    """Element indices 0..n-1 with an explicit multiplication table.

    Index 0 must be the identity.  Used for quotient groups and for
    groups defined directly by a table.
    """

    kind = "table"

    def __init__(self, table):
        n = len(table)
        if n < 1:
            raise PGroupsError("empty multiplication table")
        self.size = n
        self.table = tuple(tuple(row) for row in table)
        if any(len(row) != n for row in self.table):
            raise PGroupsError("multiplication table is not square")
        if any(self.table[0][j] != j or self.table[j][0] != j for j in range(n)):
            raise PGroupsError("index 0 is not an identity for the table")
        inv = [None] * n
        for i in range(n):
            for j in range(n):
                if self.table[i][j] == 0:
                    inv[i] = j
                    break
            if inv[i] is None:
                raise PGroupsError(f"table row {i} has no inverse")
        self._inv = tuple(inv)

    def mul(self, a, b):
        return self.table[a][b]

    def inv(self, a):
        return self._inv[a]

    def identity(self):
        return 0

    def validate(self, a):
        if not (0 <= a < self.size):
            raise PGroupsError(f"table index {a} out of range")

    def __eq__(self, other):
        return isinstance(other, TableRealization) and self.table is other.table

    def __hash__(self):
        return hash(("table", id(self.table)))

    def __repr__(self):
        return f"TableRealization(size={self.size})"
