"""Tiny recursive-descent parser for group spec strings.

A spec names a construction and its arguments, e.g. ``dp(cyclic(3,1),ut(3,3))``
or ``file(groups/my_group.json)``.  Parse errors carry the 0-based offset of
the offending character.  ``unparse`` produces the canonical spelling
(lowercase, no whitespace), and parse/unparse round-trips.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import constructions as cons
from .errors import SpecSyntaxError
from .gf import gf
from .realizations import MatRealization, PermRealization, TableRealization

_NAMES = ("cyclic", "dihedral", "dp", "wr", "iwr", "sylsym", "ut", "sylgl",
          "jordan", "file", "catalog")


@dataclass(frozen=True)
class SpecNode:
    name: str
    args: tuple
    pos: int

    def unparse(self) -> str:
        if not self.args:
            return self.name
        parts = []
        for a in self.args:
            if isinstance(a, SpecNode):
                parts.append(a.unparse())
            else:
                parts.append(str(a))
        return f"{self.name}({','.join(parts)})"


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.i = 0

    def fail(self, message, pos=None):
        raise SpecSyntaxError(self.i if pos is None else pos, message)

    def skip_ws(self):
        while self.i < len(self.text) and self.text[self.i].isspace():
            self.i += 1

    def expect(self, ch):
        if self.i >= len(self.text) or self.text[self.i] != ch:
            got = self.text[self.i] if self.i < len(self.text) else "end of input"
            self.fail(f"expected '{ch}', got {got!r}")
        self.i += 1

    def ident(self) -> tuple[str, int]:
        self.skip_ws()
        start = self.i
        while self.i < len(self.text) and (self.text[self.i].isalnum()
                                           or self.text[self.i] == "_"):
            self.i += 1
        if start == self.i:
            self.fail("expected a construction name")
        return self.text[start:self.i].lower(), start

    def integer(self) -> int:
        self.skip_ws()
        start = self.i
        while self.i < len(self.text) and self.text[self.i].isdigit():
            self.i += 1
        if start == self.i:
            self.fail("expected an integer")
        return int(self.text[start:self.i])

    def path(self) -> str:
        self.skip_ws()
        start = self.i
        if self.i < len(self.text) and self.text[self.i] == '"':
            self.i += 1
            pstart = self.i
            while self.i < len(self.text) and self.text[self.i] != '"':
                self.i += 1
            if self.i >= len(self.text):
                self.fail("unterminated quoted path", start)
            out = self.text[pstart:self.i]
            self.i += 1
            return out
        while self.i < len(self.text) and self.text[self.i] not in "(),":
            self.i += 1
        out = self.text[start:self.i].strip()
        if not out:
            self.fail("expected a file path")
        return out

    def expr(self) -> SpecNode:
        name, start = self.ident()
        if name not in _NAMES:
            self.fail(f"unknown construction {name!r}", start)
        self.skip_ws()
        if self.i >= len(self.text) or self.text[self.i] != "(":
            self.fail("expected '(' after construction name")
        self.expect("(")
        args = []
        if name == "file":
            args.append(self.path())
        elif name == "catalog":
            args.append(self.integer())
            self.skip_ws()
            self.expect(",")
            entry_name, _ = self.ident()
            args.append(entry_name)
        else:
            while True:
                self.skip_ws()
                if self.i < len(self.text) and self.text[self.i].isdigit():
                    args.append(self.integer())
                else:
                    args.append(self.expr())
                self.skip_ws()
                if self.i < len(self.text) and self.text[self.i] == ",":
                    self.i += 1
                    continue
                break
        self.skip_ws()
        self.expect(")")
        return SpecNode(name, tuple(args), start)

    def parse(self) -> SpecNode:
        node = self.expr()
        self.skip_ws()
        if self.i != len(self.text):
            self.fail("unexpected trailing input")
        return node


def parse_spec(text: str) -> SpecNode:
    return _Parser(text).parse()


def _want(node: SpecNode, kinds: str):
    """Arity/type gate; kinds is a string of 'i' (int) / 's' (sub-spec) /
    'p' (path) characters."""
    if len(node.args) != len(kinds):
        raise SpecSyntaxError(
            node.pos, f"{node.name} takes {len(kinds)} argument(s), "
                      f"got {len(node.args)}")
    for a, k in zip(node.args, kinds):
        ok = (isinstance(a, int) if k == "i"
              else isinstance(a, SpecNode) if k == "s"
              else isinstance(a, str))
        if not ok:
            kindname = {"i": "an integer", "s": "a group spec",
                        "p": "a file path"}[k]
            raise SpecSyntaxError(node.pos, f"{node.name} expects {kindname}")


def blueprint_from_node(node: SpecNode) -> cons.Blueprint:
    name = node.name
    if name == "cyclic":
        _want(node, "ii")
        return cons.cyclic(*node.args)
    if name == "dihedral":
        _want(node, "i")
        return cons.dihedral(node.args[0])
    if name == "dp":
        _want(node, "ss")
        return cons.direct_product(blueprint_from_node(node.args[0]),
                                   blueprint_from_node(node.args[1]))
    if name == "wr":
        _want(node, "si")
        return cons.wreath_cyclic(blueprint_from_node(node.args[0]),
                                  node.args[1])
    if name == "iwr":
        _want(node, "ii")
        return cons.iterated_wreath(*node.args)
    if name == "sylsym":
        _want(node, "ii")
        return cons.sylow_symmetric(*node.args)
    if name == "ut":
        _want(node, "ii")
        return cons.unitriangular(*node.args)
    if name == "sylgl":
        _want(node, "iii")
        return cons.sylow_gl_coprime(*node.args)
    if name == "jordan":
        _want(node, "ii")
        return cons.jordan_extension(*node.args)
    if name == "file":
        _want(node, "p")
        return load_group_file(node.args[0])
    if name == "catalog":
        _want(node, "ip")
        from .catalog import catalog_entry

        return catalog_entry(node.args[0], node.args[1]).blueprint()
    raise SpecSyntaxError(node.pos, f"unknown construction {name!r}")


def blueprint_from_spec(text: str) -> cons.Blueprint:
    return blueprint_from_node(parse_spec(text))


def load_group_file(path: str) -> cons.Blueprint:
    """Group files hold a realization payload plus generators.

    Permutation form: {"kind": "perm", "p": .., "degree": n,
    "generators": [[image, ...], ...]}.  Matrix form replaces degree with
    "dim" and "q" (plus optional "poly" low-degree coefficients) and lists
    row-major matrices.  Table form: {"kind": "table", "p": ..,
    "table": [[..]], "generators": [index, ...]}.
    """
    with open(path) as fh:
        data = json.load(fh)
    return blueprint_from_group_data(data, f"file({path})")


def blueprint_from_group_data(data: dict, origin: str) -> cons.Blueprint:
    """Build a blueprint from an already-parsed group-file payload."""
    try:
        kind = data["kind"]
        p = int(data["p"])
        if kind == "perm":
            real = PermRealization(int(data["degree"]))
            gens = [tuple(int(x) for x in g) for g in data["generators"]]
        elif kind == "mat":
            poly = data.get("poly")
            f = gf(int(data["q"]), tuple(poly) if poly is not None else None)
            real = MatRealization(int(data["dim"]), f)
            gens = [tuple(int(x) for x in g) for g in data["generators"]]
        elif kind == "table":
            table = [[int(x) for x in row] for row in data["table"]]
            real = TableRealization(table)
            gens = [int(g) for g in data["generators"]]
        else:
            raise SpecSyntaxError(0, f"unknown group file kind {kind!r}")
    except KeyError as exc:
        raise SpecSyntaxError(0, f"group file missing field {exc}") from None
    for g in gens:
        real.validate(g)
    named = {}
    for key, vals in data.get("named", {}).items():
        if kind == "table":
            named[key] = [int(v) for v in vals]
        else:
            named[key] = [tuple(int(x) for x in v) for v in vals]
        for v in named[key]:
            real.validate(v)
    order = data.get("order")
    return cons.Blueprint(origin, p, real, gens,
                          int(order) if order is not None else None, named)


def save_group_file(group, path: str) -> None:
    """Inverse of load_group_file for an enumerated group's generators."""
    real = group.realization
    if isinstance(real, PermRealization):
        data = {"kind": "perm", "p": group.p, "degree": real.degree,
                "generators": [list(g) for g in group.generators]}
    elif isinstance(real, MatRealization):
        data = {"kind": "mat", "p": group.p, "dim": real.dim,
                "q": real.field.q, "poly": list(real.field.poly),
                "generators": [list(g) for g in group.generators]}
    elif isinstance(real, TableRealization):
        data = {"kind": "table", "p": group.p,
                "table": [list(row) for row in real.table],
                "generators": [int(g) for g in group.gen_indices]}
    else:
        raise SpecSyntaxError(0, "unsupported realization")
    with open(path, "w") as fh:
        json.dump(data, fh, sort_keys=True)
        fh.write("\n")
