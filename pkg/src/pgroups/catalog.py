"""Bundled small-group catalog: permutation generators for p-groups of
order dividing 2^6 and 3^5, shipped as JSON-lines data files.

Each line holds one group: a stable name, the prime, the order, the
permutation degree, the generators as image tuples, the recipe that
produced it, and a fingerprint of structural invariants.  Entries are
pairwise non-isomorphic (exact-isomorphism tested at build time by
tools/build_catalog.py); the per-order completeness status is documented
in the README, not recomputed here.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .core import FiniteGroup
from .errors import InconsistencyError, PGroupsError
from .realizations import PermRealization


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    p: int
    order: int
    degree: int
    generators: tuple[tuple[int, ...], ...]
    source: str
    invariants: dict

    def build(self) -> FiniteGroup:
        real = PermRealization(self.degree)
        G = FiniteGroup(real, self.generators, self.p,
                        cap=self.order, name=self.name,
                        meta={"catalog": self.name, "source": self.source})
        if G.order != self.order:
            raise InconsistencyError(
                f"catalog entry {self.name} enumerates to order {G.order}, "
                f"file claims {self.order}")
        return G

    def blueprint(self):
        """The entry as a construction blueprint, so it can be nested in
        group specs (dp, wr, ...) and run through certificate paths."""
        from .constructions import Blueprint

        return Blueprint(f"catalog({self.p},{self.name})", self.p,
                         PermRealization(self.degree),
                         [tuple(g) for g in self.generators], self.order)


def _data_text(filename: str) -> str:
    path = resources.files("pgroups").joinpath("data").joinpath(filename)
    return path.read_text(encoding="utf-8")


def load_catalog(p: int) -> list[CatalogEntry]:
    """All bundled groups for the given prime, ascending by (order, name)."""
    if p not in (2, 3):
        raise PGroupsError(f"no bundled catalog for p={p}")
    entries = []
    for line in _data_text(f"catalog_{p}.jsonl").splitlines():
        line = line.strip()
        if not line:
            continue
        row = json.loads(line)
        entry = CatalogEntry(
            name=row["name"], p=row["p"], order=row["order"],
            degree=row["degree"],
            generators=tuple(tuple(g) for g in row["generators"]),
            source=row["source"], invariants=row.get("invariants", {}))
        if entry.p != p:
            raise PGroupsError(
                f"catalog file for p={p} contains an entry with p={entry.p}")
        entries.append(entry)
    entries.sort(key=lambda e: (e.order, e.name))
    return entries


def catalog_entry(p: int, name: str) -> CatalogEntry:
    for e in load_catalog(p):
        if e.name == name:
            return e
    raise PGroupsError(f"no catalog entry named {name!r} for p={p}")
