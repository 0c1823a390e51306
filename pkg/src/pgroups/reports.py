"""Check verdicts, witness serialization, and JSON-lines report output.

Witnesses are serialized as words in the group's generators ("g0*g1*g0"),
never as element indices, so a report can be re-verified without knowing
the enumeration order that produced it.  Report lines are emitted with
sorted keys and no timestamps, making repeated runs byte-identical;
timing data is attached only on request.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import PGroupsError

HOLDS = "HOLDS"
VIOLATION = "VIOLATION"
NOT_APPLICABLE = "NOT_APPLICABLE"
INCONCLUSIVE = "INCONCLUSIVE"
ERROR = "ERROR"

_VERDICTS = (HOLDS, VIOLATION, NOT_APPLICABLE, INCONCLUSIVE, ERROR)


def word_str(group, index: int) -> str:
    """Express element #index as a product of generators, e.g. "g0*g2*g0"."""
    word = group.words[index]
    if not word:
        return "1"
    return "*".join(f"g{pos}" for pos in word)


def parse_word(group, text: str) -> int:
    """Inverse of word_str; also accepts explicit powers like "g1^2"."""
    text = text.strip()
    if text in ("1", ""):
        return 0
    cur = 0
    for token in text.split("*"):
        token = token.strip()
        if "^" in token:
            base, _, exp = token.partition("^")
            k = int(exp)
        else:
            base, k = token, 1
        if not base.startswith("g"):
            raise PGroupsError(f"bad word token {token!r}")
        pos = int(base[1:])
        if not (0 <= pos < len(group.gen_indices)):
            raise PGroupsError(f"generator index out of range in {token!r}")
        if k < 0:
            raise PGroupsError("negative powers not supported in words")
        gidx = group.gen_indices[pos]
        for _ in range(k):
            cur = group.mul(cur, gidx)
    return cur


def element_witness(group, index: int) -> dict:
    return {"word": word_str(group, index),
            "order": int(group.element_orders[index])}


def subgroup_witness(group, sub) -> dict:
    return {"generators": [word_str(group, i) for i in sub.generators()],
            "order": sub.order}


def subgroup_from_witness(group, data: dict):
    gens = [parse_word(group, w) for w in data["generators"]]
    sub = group.subgroup(gens)
    if sub.order != data["order"]:
        raise PGroupsError(
            f"witness subgroup order {sub.order} != recorded {data['order']}")
    return sub


@dataclass
class CheckResult:
    check: str
    group: str
    verdict: str
    details: dict = field(default_factory=dict)
    witness: dict | None = None

    def __post_init__(self):
        if self.verdict not in _VERDICTS:
            raise PGroupsError(f"unknown verdict {self.verdict!r}")

    def to_dict(self) -> dict:
        out = {"check": self.check, "group": self.group,
               "verdict": self.verdict, "details": self.details}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


def result_line(result: CheckResult, extra: dict | None = None) -> str:
    data = result.to_dict()
    if extra:
        data.update(extra)
    return json.dumps(data, sort_keys=True, separators=(",", ":"))


def write_report_lines(lines, out=None) -> None:
    text = "".join(line + "\n" for line in lines)
    if out is None:
        import sys

        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def exit_code_for(results) -> int:
    if any(r.verdict == VIOLATION for r in results):
        return 1
    return 0
