"""Command-line front end.

Verbs: construct / analyze / series / check <name> / classify / examples /
catalog {list,verify} / verify-witness.  Output is a compact line per check
by default, a JSON-lines report stream with --jsonl, and the same stream
written to a file with --out.  Reports never carry wall-clock data unless
--timings is passed, so repeated runs are byte-identical; catalog sweeps
emit their lines in input order regardless of --threads.

Exit codes: 0 all checks passed or were inapplicable/inconclusive, 1 at
least one VIOLATION, 2 input error, 3 a budget or cap was exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ThreadPoolExecutor

from .analysis import (lemma56_check, maximal_elementary_abelians,
                       thompson_subgroup, is_weakly_closed)
from .catalog import load_catalog
from .constructions import Blueprint
from .core import FiniteGroup
from .errors import (CapExceeded, InconsistencyError, NotApplicable,
                     OddPrimeRequired, PGroupsError, ScanBudgetExceeded,
                     SpecSyntaxError, SubgroupCapExceeded)
from .modrep import (check_ghl, check_weak_closure, check_y2,
                     classify_quadratics, hypothesis_instance, j_exponent,
                     is_quadratic_subgroup, load_module_file, natural_module,
                     permutation_module, prop46_search, regular_representation,
                     thm17_check, thm92_check, _all_members_quadratic)
from .realizations import MatRealization, PermRealization, TableRealization
from .reports import (ERROR, HOLDS, INCONCLUSIVE, NOT_APPLICABLE, VIOLATION,
                      CheckResult, parse_word, result_line, subgroup_witness,
                      subgroup_from_witness, write_report_lines)
from .series import (check_y1, is_k_chain, thm19_conditions, x_subgroup,
                     y_certificate, y_subgroup)
from .specdsl import blueprint_from_group_data, blueprint_from_spec

CHECK_NAMES = ("y1", "y2", "ghl", "wc", "hyp52", "lemma56", "thm17",
               "thm19", "thm92")
MODULE_CHECKS = frozenset({"y2", "ghl", "wc", "hyp52", "thm17", "thm92"})
BUDGET_ERRORS = (CapExceeded, SubgroupCapExceeded, ScanBudgetExceeded)


# ---------------------------------------------------------------------------
# target resolution


def _resolve_blueprint(text: str) -> Blueprint:
    return blueprint_from_spec(text)


def _module_for(G: FiniteGroup, spec: str):
    s = spec.strip()
    if s == "regular":
        return regular_representation(G)
    if s == "perm":
        return permutation_module(G)
    if s == "natural":
        return natural_module(G)
    if s.startswith("file(") and s.endswith(")"):
        s = s[5:-1]
    return load_module_file(s, G)


def _build(bp: Blueprint, args) -> FiniteGroup:
    cap = getattr(args, "element_cap", None)
    G = bp.build(cap=cap) if cap else bp.build()
    sub_cap = getattr(args, "subgroup_cap", None)
    if sub_cap:
        G.normal_subgroups(cap=sub_cap)
    return G


# ---------------------------------------------------------------------------
# report stream


class Reporter:
    def __init__(self, args):
        self.jsonl = getattr(args, "jsonl", False)
        self.out = getattr(args, "out", None)
        self.timings = getattr(args, "timings", False)
        self.results: list[CheckResult] = []
        self.lines: list[str] = []

    def emit(self, result: CheckResult, extra: dict | None = None,
             started: float | None = None):
        extra = dict(extra or {})
        if self.timings and started is not None:
            extra["timings"] = {"seconds": round(time.monotonic() - started,
                                                 3)}
        self.results.append(result)
        line = result_line(result, extra or None)
        self.lines.append(line)
        print(line if self.jsonl else _human(result, extra), flush=True)

    def emit_raw(self, data: dict, human: str):
        line = json.dumps(data, sort_keys=True, separators=(",", ":"))
        self.lines.append(line)
        print(line if self.jsonl else human, flush=True)

    def finish(self) -> int:
        if self.out:
            write_report_lines(self.lines, self.out)
        return _exit_code(self.results)


def _human(result: CheckResult, extra: dict) -> str:
    bits = []
    for key in sorted(result.details):
        val = result.details[key]
        if isinstance(val, bool):
            bits.append(f"{key}={'yes' if val else 'no'}")
        elif isinstance(val, int):
            bits.append(f"{key}={val}")
        elif isinstance(val, str) and len(val) <= 72:
            bits.append(f"{key}={val!r}" if " " in val else f"{key}={val}")
    tail = f"  [{', '.join(bits)}]" if bits else ""
    timing = ""
    if "timings" in extra:
        timing = f"  ({extra['timings']['seconds']}s)"
    return f"{result.check} {result.group}: {result.verdict}{tail}{timing}"


def _exit_code(results) -> int:
    if any(r.verdict == VIOLATION for r in results):
        return 1
    if any(r.verdict == ERROR and r.details.get("budget_exceeded")
           for r in results):
        return 3
    if any(r.verdict == ERROR for r in results):
        return 2
    return 0


def _run(check_name: str, label: str, thunk) -> CheckResult:
    """Run one check, folding failures into report verdicts."""
    try:
        return thunk()
    except InconsistencyError as exc:
        return CheckResult(check_name, label, VIOLATION,
                           {"inconsistency": str(exc)})
    except (OddPrimeRequired, NotApplicable) as exc:
        return CheckResult(check_name, label, NOT_APPLICABLE,
                           {"reason": str(exc)})
    except BUDGET_ERRORS as exc:
        return CheckResult(check_name, label, ERROR,
                           {"budget_exceeded": True, "reason": str(exc)})
    except (PGroupsError, OSError, json.JSONDecodeError) as exc:
        return CheckResult(check_name, label, ERROR, {"reason": str(exc)})


def _echo(verb: str, **flags) -> str:
    parts = ["pgroups"] + verb.split()
    for key, val in flags.items():
        if val not in (None, False):
            parts.append(f"--{key.replace('_', '-')}")
            if val is not True:
                parts.append(str(val))
    return " ".join(parts)


# ---------------------------------------------------------------------------
# construct / analyze / series


def _realization_summary(G: FiniteGroup) -> str:
    real = G.realization
    if isinstance(real, PermRealization):
        return f"perm(degree={real.degree})"
    if isinstance(real, MatRealization):
        return f"mat(dim={real.dim},q={real.field.q})"
    if isinstance(real, TableRealization):
        return f"table(size={len(real.table)})"
    return type(real).__name__


def cmd_construct(args, reporter: Reporter):
    bp = _resolve_blueprint(args.group)
    started = time.monotonic()

    def thunk():
        G = _build(bp, args)
        details = {
            "order": G.order,
            "exponent": G.exponent,
            "nilpotency_class": G.nilpotency_class,
            "abelian": G.is_abelian(),
            "center_order": G.center.order,
            "derived_order": G.lower_central_term(2).order,
            "abelianization": list(G.abelian_invariants()),
            "conjugacy_classes": len(G.conjugacy_classes),
            "generator_count": len(G.generators),
            "realization": _realization_summary(G),
        }
        if G.p > 2:
            details["powerful"] = G.is_powerful()
        return CheckResult("construct", bp.spec, HOLDS, details)

    reporter.emit(_run("construct", bp.spec, thunk),
                  {"command": _echo("construct", group=args.group)}, started)


def cmd_analyze(args, reporter: Reporter):
    bp = _resolve_blueprint(args.group)
    started = time.monotonic()

    def thunk():
        G = _build(bp, args)
        cat = maximal_elementary_abelians(G)
        J = thompson_subgroup(G)
        by_order: dict[int, int] = {}
        for E in cat.maximals:
            by_order[E.order] = by_order.get(E.order, 0) + 1
        details = {
            "order": G.order,
            "max_rank": cat.max_rank,
            "maximal_elementary_abelian_count": len(cat.maximals),
            "maximal_orders": sorted(by_order.items()),
            "thompson_order": J.order,
            "thompson_is_elementary_abelian": J.is_elementary_abelian(),
            "center_order": G.center.order,
            "socle_rank": G.center.omega1().rank(),
        }
        return CheckResult("analyze", bp.spec, HOLDS, details,
                           {"thompson": subgroup_witness(G, J)})

    reporter.emit(_run("analyze", bp.spec, thunk),
                  {"command": _echo("analyze", group=args.group)}, started)


def cmd_series(args, reporter: Reporter):
    bp = _resolve_blueprint(args.group)
    started = time.monotonic()

    def thunk():
        G = _build(bp, args)
        J = thompson_subgroup(G)
        Y = y_subgroup(G)
        X = x_subgroup(G)
        cert = y_certificate(G)
        details = {
            "group_order": G.order,
            "thompson_order": J.order,
            "y_order": Y.order,
            "x_order": X.order,
            "thompson_inside_y": J.issubset(Y),
            "x_inside_y": X.issubset(Y),
            "y_is_whole_group": Y.order == G.order,
        }
        witness = {"thompson": subgroup_witness(G, J),
                   "y_chain": cert.to_witness(G)}
        return CheckResult("series", bp.spec, HOLDS, details, witness)

    reporter.emit(_run("series", bp.spec, thunk),
                  {"command": _echo("series", group=args.group)}, started)


# ---------------------------------------------------------------------------
# check


def _check_thunk(name: str, bp: Blueprint, args):
    """Closure running one named check against one blueprint."""
    modspec = getattr(args, "module", None) or "regular"
    mode = getattr(args, "mode", None) or "auto"

    def thunk():
        if name == "y1":
            return check_y1(bp, mode=mode,
                            element_cap=getattr(args, "element_cap", None))
        G = _build(bp, args)
        if name == "lemma56":
            return lemma56_check(G)
        if name == "thm19":
            return thm19_conditions(G)
        V = _module_for(G, modspec)
        if name == "y2":
            return check_y2(G, V)
        if name == "ghl":
            return check_ghl(G, V)
        if name == "wc":
            return check_weak_closure(G, V)
        if name == "thm17":
            return thm17_check(G, V)
        if name == "thm92":
            return thm92_check(G, V)
        if name == "hyp52":
            try:
                H = G.named_subgroup("left")
                P = G.named_subgroup("right")
            except PGroupsError:
                return CheckResult(
                    "hyp52", bp.spec, NOT_APPLICABLE,
                    {"reason": "group was not built as an explicit direct "
                               "product; use dp(...)"})
            return hypothesis_instance(P, H, V)
        raise PGroupsError(f"unknown check {name!r}")

    return thunk


def cmd_check(args, reporter: Reporter):
    bp = _resolve_blueprint(args.group)
    started = time.monotonic()
    result = _run(args.check_name, bp.spec, _check_thunk(args.check_name,
                                                         bp, args))
    extra = {"command": _echo(f"check {args.check_name}", group=args.group,
                              module=getattr(args, "module", None),
                              mode=getattr(args, "mode", None))}
    if args.check_name in MODULE_CHECKS:
        extra["module"] = getattr(args, "module", None) or "regular"
    reporter.emit(result, extra, started)


def cmd_classify(args, reporter: Reporter):
    bp = _resolve_blueprint(args.group)
    modspec = getattr(args, "module", None) or "regular"
    started = time.monotonic()

    def thunk():
        G = _build(bp, args)
        V = _module_for(G, modspec)
        report = classify_quadratics(G, V)
        quad = report.quadratic_words()
        details = {
            "order_p_elements": len(report.entries),
            "quadratic_count": len(quad),
            "late_count": len(report.late_words()),
            "last_count": len(report.last_words()),
            "entries": report.entries,
        }
        return CheckResult("classify", bp.spec, HOLDS, details)

    reporter.emit(_run("classify", bp.spec, thunk),
                  {"command": _echo("classify", group=args.group,
                                    module=modspec),
                   "module": modspec}, started)


# ---------------------------------------------------------------------------
# bundled regression fixtures


FIXTURE_SERIES = (
    ("dihedral(8)", {"group_order": 8, "thompson_order": 8, "y_order": 8,
                     "x_order": 2}),
    ("jordan(5,3)", {"group_order": 625, "thompson_order": 125,
                     "y_order": 125, "x_order": 625}),
    ("sylsym(9,3)", {"group_order": 81, "thompson_order": 27,
                     "y_order": 27}),
)

FIXTURE_CHECKS = (
    ("y1", "dihedral(8)", None, HOLDS),
    ("y1", "jordan(5,3)", None, HOLDS),
    ("y1", "sylsym(9,3)", None, HOLDS),
    ("thm19", "jordan(5,3)", None, HOLDS),
    ("y2", "ut(3,3)", "natural", HOLDS),
    ("ghl", "ut(3,3)", "natural", HOLDS),
    ("wc", "ut(3,3)", "natural", HOLDS),
    ("lemma56", "ut(3,3)", None, HOLDS),
    ("lemma56", "wr(cyclic(3,1),3)", None, HOLDS),
)


def cmd_examples(args, reporter: Reporter):
    echo = {"command": _echo("examples")}
    for spec, want in FIXTURE_SERIES:
        started = time.monotonic()

        def thunk(spec=spec, want=want):
            G = _build(_resolve_blueprint(spec), args)
            got = {"group_order": G.order,
                   "thompson_order": thompson_subgroup(G).order,
                   "y_order": y_subgroup(G).order,
                   "x_order": x_subgroup(G).order}
            mismatch = {k: [want[k], got[k]] for k in want
                        if got.get(k) != want[k]}
            verdict = VIOLATION if mismatch else HOLDS
            details = {"expected": want, "computed": got}
            if mismatch:
                details["mismatch"] = mismatch
            return CheckResult("fixture-series", spec, verdict, details)

        reporter.emit(_run("fixture-series", spec, thunk), echo, started)

    class _FixtureArgs:
        element_cap = getattr(args, "element_cap", None)
        subgroup_cap = getattr(args, "subgroup_cap", None)
        mode = "auto"

    for name, spec, modspec, want_verdict in FIXTURE_CHECKS:
        started = time.monotonic()
        fargs = _FixtureArgs()
        fargs.module = modspec
        bp = _resolve_blueprint(spec)
        result = _run(name, spec, _check_thunk(name, bp, fargs))
        reporter.emit(result, echo, started)
        if result.verdict != want_verdict:
            reporter.emit(CheckResult(
                "fixture-expect", spec, VIOLATION,
                {"check": name, "expected_verdict": want_verdict,
                 "observed_verdict": result.verdict}), echo)

    started = time.monotonic()

    def offender_thunk():
        G = _build(_resolve_blueprint("ut(3,3)"), args)
        return prop46_search(natural_module(G))

    result = _run("offender-search", "ut(3,3)", offender_thunk)
    reporter.emit(result, echo, started)
    if result.verdict != HOLDS:
        reporter.emit(CheckResult(
            "fixture-expect", "ut(3,3)", VIOLATION,
            {"check": "offender-search", "expected_verdict": HOLDS,
             "observed_verdict": result.verdict}), echo)


# ---------------------------------------------------------------------------
# catalog


def cmd_catalog_list(args, reporter: Reporter):
    primes = [args.prime] if args.prime else [2, 3]
    for p in primes:
        for entry in load_catalog(p):
            data = {"degree": entry.degree, "name": entry.name,
                    "order": entry.order, "p": entry.p,
                    "source": entry.source}
            reporter.emit_raw(
                data,
                f"catalog({p},{entry.name}): order={entry.order} "
                f"degree={entry.degree} source={entry.source}")


def _catalog_rows(args):
    """Yield (label, blueprint-thunk, extra) rows in input order."""
    rows = []
    if args.bundled is not None:
        for entry in load_catalog(args.bundled):
            rows.append((f"catalog({entry.p},{entry.name})",
                         entry.blueprint,
                         {"catalog_prime": entry.p}))
    else:
        with open(args.file, encoding="utf-8") as fh:
            payload = fh.read()
        for lineno, raw in enumerate(payload.splitlines(), start=1):
            raw = raw.strip()
            if not raw:
                continue
            label_default = f"{args.file}#{lineno}"

            def make(raw=raw, label=label_default):
                data = json.loads(raw)
                label = data.get("name", label)
                return blueprint_from_group_data(data, label)

            rows.append((label_default, make,
                         {"group_file": args.file, "line": lineno}))
    return rows


def cmd_catalog_verify(args, reporter: Reporter):
    name = args.check
    rows = _catalog_rows(args)
    echo = _echo("catalog verify", bundled=args.bundled, file=args.file,
                 check=name, module=getattr(args, "module", None),
                 mode=getattr(args, "mode", None))

    def run_row(row):
        label, make_bp, extra = row
        started = time.monotonic()

        def thunk():
            bp = make_bp()
            inner = _check_thunk(name, bp, args)()
            return inner

        return _run(name, label, thunk), extra, started

    threads = max(1, args.threads)
    if threads == 1:
        outcomes = [run_row(r) for r in rows]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            outcomes = list(pool.map(run_row, rows))
    for result, extra, started in outcomes:
        merged = {"command": echo}
        merged.update(extra)
        if name in MODULE_CHECKS:
            merged["module"] = getattr(args, "module", None) or "regular"
        reporter.emit(result, merged, started)


# ---------------------------------------------------------------------------
# witness re-verification


def _looks_subgroup(value) -> bool:
    return (isinstance(value, dict) and "generators" in value
            and "order" in value)


def _looks_element(value) -> bool:
    return isinstance(value, dict) and "word" in value and "order" in value


def _reverify_walk(G, value, path, problems, verified):
    if _looks_subgroup(value):
        try:
            subgroup_from_witness(G, value)
            verified.append(f"{path}: subgroup of order {value['order']} "
                            "re-closed from its generator words")
        except PGroupsError as exc:
            problems.append(f"{path}: {exc}")
        return
    if _looks_element(value):
        try:
            idx = parse_word(G, value["word"])
            have = int(G.element_orders[idx])
            if have != int(value["order"]):
                problems.append(f"{path}: element order {have} != recorded "
                                f"{value['order']}")
            else:
                verified.append(f"{path}: element word re-parsed, order "
                                f"{have} confirmed")
        except PGroupsError as exc:
            problems.append(f"{path}: {exc}")
        return
    if isinstance(value, dict) and "chain" in value and "k" in value:
        terms = []
        ok = True
        for i, sub in enumerate(value["chain"]):
            try:
                terms.append(subgroup_from_witness(G, sub))
            except PGroupsError as exc:
                problems.append(f"{path}.chain[{i}]: {exc}")
                ok = False
                break
        if ok and terms:
            good, bad = is_k_chain(G, terms, int(value["k"]))
            if good:
                verified.append(f"{path}: valid {value['k']}-chain of "
                                f"length {len(terms)}")
            else:
                problems.append(f"{path}: chain fails at step {bad}")
        return
    if isinstance(value, dict):
        for key, sub in value.items():
            _reverify_walk(G, sub, f"{path}.{key}", problems, verified)
    elif isinstance(value, list):
        for i, sub in enumerate(value):
            _reverify_walk(G, sub, f"{path}[{i}]", problems, verified)


def _reverify_y1(G, V, line, wit, problems, verified, unverified):
    _reverify_walk(G, wit, "witness", problems, verified)
    try:
        J = subgroup_from_witness(G, wit["thompson"])
    except (KeyError, PGroupsError):
        return
    if not J.is_elementary_abelian():
        problems.append("claimed Thompson subgroup is not elementary abelian")
    if G.normal_closure(J.indices()).mask != J.mask:
        problems.append("claimed Thompson subgroup is not normal")
    chain = wit.get("y_chain", {}).get("chain")
    if chain:
        try:
            top = subgroup_from_witness(G, chain[-1])
        except PGroupsError:
            return
        if J.mask & top.mask == J.mask:
            verified.append("claimed Thompson subgroup sits inside the "
                            "chain's top term")
        else:
            problems.append("claimed Thompson subgroup escapes the chain's "
                            "top term")


def _reverify_central_quadratic(G, V, line, wit, problems, verified,
                                unverified):
    _reverify_walk(G, wit, "witness", problems, verified)
    data = wit.get("central_quadratic")
    if not data:
        return
    try:
        idx = parse_word(G, data["word"])
    except PGroupsError:
        return
    if G.centralizer(idx).order != G.order:
        problems.append("claimed central element is not central")
    else:
        verified.append("claimed element confirmed central")
    if V is None:
        unverified.append("module spec absent; quadratic action unchecked")
    elif not V.quadratic(idx):
        problems.append("claimed element does not act quadratically")
    else:
        verified.append("claimed element acts quadratically")


def _reverify_ghl(G, V, line, wit, problems, verified, unverified):
    _reverify_walk(G, wit, "witness", problems, verified)
    data = wit.get("element")
    if not data or "degree" not in wit:
        return
    if V is None:
        unverified.append("module spec absent; unipotency degree unchecked")
        return
    try:
        idx = parse_word(G, data["word"])
    except PGroupsError:
        return
    deg = V.unipotency_degree(idx)
    if deg != int(wit["degree"]):
        problems.append(f"recomputed unipotency degree {deg} != recorded "
                        f"{wit['degree']}")
    elif deg > int(wit.get("bound", deg)):
        problems.append("recorded degree exceeds the recorded bound")
    else:
        verified.append(f"unipotency degree {deg} within bound confirmed")


def _reverify_offender(G, V, line, wit, problems, verified, unverified):
    _reverify_walk(G, wit, "witness", problems, verified)
    data = wit.get("offender")
    if not data:
        return
    try:
        E = subgroup_from_witness(G, data)
    except PGroupsError:
        return
    if V is None:
        unverified.append("module spec absent; offender properties "
                          "unchecked")
        return
    e_have = j_exponent(V, E).e
    if e_have != int(wit.get("e", e_have)):
        problems.append(f"recomputed offender exponent {e_have} != recorded "
                        f"{wit['e']}")
    else:
        verified.append(f"offender exponent {e_have} confirmed")
    if wit.get("weakly_closed"):
        closed, _ = is_weakly_closed(G, E)
        if closed:
            verified.append("weak closure confirmed")
        else:
            problems.append("claimed weakly closed subgroup is not weakly "
                            "closed")
    if wit.get("quadratic"):
        quad = (_all_members_quadratic(V, E) if G.p == 2
                else is_quadratic_subgroup(V, E))
        if quad:
            verified.append("quadratic action confirmed")
        else:
            problems.append("claimed quadratic subgroup is not quadratic")


_WITNESS_VERIFIERS = {
    "y1": _reverify_y1,
    "y2": _reverify_central_quadratic,
    "wc": _reverify_central_quadratic,
    "ghl": _reverify_ghl,
    "offender-search": _reverify_offender,
}


def cmd_verify_witness(args, reporter: Reporter):
    with open(args.file, encoding="utf-8") as fh:
        raw_lines = [ln for ln in fh.read().splitlines() if ln.strip()]
    echo = {"command": _echo("verify-witness", file=args.file)}
    for lineno, raw in enumerate(raw_lines, start=1):
        started = time.monotonic()
        try:
            data = json.loads(raw)
        except json.JSONDecodeError as exc:
            reporter.emit(CheckResult("verify-witness", f"line {lineno}",
                                      ERROR, {"reason": str(exc)}), echo,
                          started)
            continue
        label = data.get("group", f"line {lineno}")
        wit = data.get("witness")
        if wit is None:
            reporter.emit(CheckResult(
                "verify-witness", label, NOT_APPLICABLE,
                {"source_check": data.get("check", "?"),
                 "reason": "report line carries no witness"}), echo, started)
            continue

        def thunk(data=data, wit=wit, label=label):
            source = data.get("check", "?")
            if "group_file" in data:
                with open(data["group_file"], encoding="utf-8") as fh:
                    rows = fh.read().splitlines()
                payload = json.loads(rows[int(data.get("line", 1)) - 1])
                bp = blueprint_from_group_data(payload, label)
            else:
                bp = _resolve_blueprint(data["group"])
            G = bp.build()
            V = None
            if data.get("module"):
                V = _module_for(G, data["module"])
            problems: list[str] = []
            verified: list[str] = []
            unverified: list[str] = []
            handler = _WITNESS_VERIFIERS.get(source)
            if handler:
                handler(G, V, data, wit, problems, verified, unverified)
            else:
                _reverify_walk(G, wit, "witness", problems, verified)
            details = {"source_check": source, "verified": verified}
            if unverified:
                details["unverified"] = unverified
            if problems:
                details["problems"] = problems
                return CheckResult("verify-witness", label, VIOLATION,
                                   details)
            if not verified:
                details["reason"] = "nothing checkable in the witness"
                return CheckResult("verify-witness", label, INCONCLUSIVE,
                                   details)
            if unverified:
                return CheckResult("verify-witness", label, INCONCLUSIVE,
                                   details)
            return CheckResult("verify-witness", label, HOLDS, details)

        reporter.emit(_run("verify-witness", label, thunk), echo, started)


# ---------------------------------------------------------------------------
# argument parsing


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--jsonl", action="store_true",
                        help="emit JSON-lines report objects on stdout")
    common.add_argument("--out", metavar="PATH",
                        help="also write the JSON-lines report to a file")
    common.add_argument("--timings", action="store_true",
                        help="attach wall-clock data (breaks byte-for-byte "
                             "reproducibility)")

    budgets = argparse.ArgumentParser(add_help=False)
    budgets.add_argument("--element-cap", type=int, metavar="N",
                         help="abort enumeration beyond N elements")
    budgets.add_argument("--subgroup-cap", type=int, metavar="N",
                         help="abort normal-lattice walks beyond N subgroups")

    grp = argparse.ArgumentParser(add_help=False)
    grp.add_argument("--group", required=True, metavar="SPEC",
                     help="group spec, e.g. 'dihedral(8)', 'wr(cyclic(3,1),3)'"
                          ", 'catalog(2,d8)', 'file(path.json)'")

    mod = argparse.ArgumentParser(add_help=False)
    mod.add_argument("--module", metavar="M",
                     help="module spec: regular | perm | natural | "
                          "file(path) (default regular)")

    parser = argparse.ArgumentParser(
        prog="pgroups",
        description="Exact finite p-group calculator: construction, "
                    "characteristic subgroups, module checks, catalog "
                    "sweeps, and witness re-verification.")
    sub = parser.add_subparsers(dest="verb", required=True)

    sub.add_parser("construct", parents=[grp, common, budgets],
                   help="build a group and report its basic invariants")
    sub.add_parser("analyze", parents=[grp, common, budgets],
                   help="elementary abelian structure and Thompson subgroup")
    sub.add_parser("series", parents=[grp, common, budgets],
                   help="Thompson subgroup and both characteristic "
                        "fixed-point subgroups, with a chain witness")

    chk = sub.add_parser("check", parents=[grp, mod, common, budgets],
                         help="run one named verification check")
    chk.add_argument("check_name", choices=CHECK_NAMES, metavar="NAME",
                     help="one of: " + ", ".join(CHECK_NAMES))
    chk.add_argument("--mode", choices=("auto", "direct", "certificate"),
                     help="y1 only: force full enumeration or "
                          "certificate-only verification")

    sub.add_parser("classify", parents=[grp, mod, common, budgets],
                   help="per-element quadratic/late/last classification")

    sub.add_parser("examples", parents=[common, budgets],
                   help="run the bundled regression fixtures end-to-end")

    cat = sub.add_parser("catalog", help="bundled small-group catalog")
    catsub = cat.add_subparsers(dest="catalog_verb", required=True)
    clist = catsub.add_parser("list", parents=[common],
                              help="list catalog entries")
    clist.add_argument("--prime", type=int, choices=(2, 3),
                       help="restrict to one prime (default: both)")
    cver = catsub.add_parser("verify", parents=[mod, common, budgets],
                             help="run one check across a catalog")
    src = cver.add_mutually_exclusive_group(required=True)
    src.add_argument("--bundled", type=int, choices=(2, 3), metavar="P",
                     help="sweep the bundled catalog for prime P")
    src.add_argument("--file", metavar="PATH",
                     help="sweep a JSON-lines file of group records")
    cver.add_argument("--check", choices=CHECK_NAMES, default="y1",
                      help="which check to run per entry (default y1)")
    cver.add_argument("--mode", choices=("auto", "direct", "certificate"),
                      help="y1 mode per entry")
    cver.add_argument("--threads", type=int, default=1, metavar="N",
                      help="worker threads (line order is preserved)")

    vw = sub.add_parser("verify-witness", parents=[common],
                        help="recompute every witness in a report stream")
    vw.add_argument("--file", required=True, metavar="PATH",
                    help="JSON-lines report produced by an earlier run")

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    reporter = Reporter(args)
    try:
        if args.verb == "construct":
            cmd_construct(args, reporter)
        elif args.verb == "analyze":
            cmd_analyze(args, reporter)
        elif args.verb == "series":
            cmd_series(args, reporter)
        elif args.verb == "check":
            cmd_check(args, reporter)
        elif args.verb == "classify":
            cmd_classify(args, reporter)
        elif args.verb == "examples":
            cmd_examples(args, reporter)
        elif args.verb == "catalog":
            if args.catalog_verb == "list":
                cmd_catalog_list(args, reporter)
            else:
                cmd_catalog_verify(args, reporter)
        elif args.verb == "verify-witness":
            cmd_verify_witness(args, reporter)
    except SpecSyntaxError as exc:
        print(f"pgroups: {exc}", file=sys.stderr)
        return 2
    except BUDGET_ERRORS as exc:
        print(f"pgroups: budget exceeded: {exc}", file=sys.stderr)
        return 3
    except (PGroupsError, OSError) as exc:
        print(f"pgroups: {exc}", file=sys.stderr)
        return 2
    return reporter.finish()


if __name__ == "__main__":
    raise SystemExit(main())
