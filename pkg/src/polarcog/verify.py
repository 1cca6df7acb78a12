"""Re-derive the obstruction results from scratch and report each check.

Every check is a function returning a :class:`CheckResult`.  The ``fast``
level skips the exhaustive k = 3 enumeration; ``full`` runs everything.
"""

from __future__ import annotations

import random
import time
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable

from . import graph as gr
from .catalog import Catalog, CatalogError, GENERATORS, family_member, load_catalog
from .certify import OBSTRUCTION, certify, check_certificate
from .formats import to_graph6
from .cograph import (
    code_size,
    complement_code,
    enumerate_codes,
    graph_from_code,
    random_cograph,
)
from .obstructions import (
    closure_classes,
    derive_obstruction_codes,
    derive_obstructions,
    has_isolated_vertex,
    is_minimal_obstruction,
    minimal_codes,
    partial_complement_codes,
    verify_structure_lemmas,
)
from .polarity import brute_force_sk_polar, code_is_sk_polar, is_sk_polar

LEVELS = ("fast", "full")


@dataclass
class CheckResult:
    name: str
    title: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0
    lines: list[str] = field(default_factory=list)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{self.name:<8} {status}  {self.title} ({self.seconds:.1f}s): {self.detail}"


@dataclass
class Context:
    level: str
    catalog: Catalog | None
    catalog_error: str | None = None

    @property
    def full(self) -> bool:
        return self.level == "full"


def _by_size(codes) -> str:
    counts = Counter(code_size(c) for c in codes)
    return ", ".join(f"n={n}: {counts[n]}" for n in sorted(counts)) or "none"


def _need_catalog(ctx: Context) -> Catalog:
    if ctx.catalog is None:
        raise CatalogError("load", ctx.catalog_error or "catalog unavailable")
    return ctx.catalog


def check_complete_list(ctx: Context):
    cat = _need_catalog(ctx)
    start = time.perf_counter()
    codes = derive_obstruction_codes(2, 2, 9)
    elapsed = time.perf_counter() - start
    found, listed = set(codes), set(cat.by_code)
    ok = len(codes) == 48 and found == listed and elapsed < 60
    detail = (f"{len(codes)} classes ({_by_size(codes)}), expected 48; "
              f"catalog has {len(cat)} entries, {len(found - listed)} missing from it, "
              f"{len(listed - found)} extra; search {elapsed:.1f}s")
    return ok, detail


def check_size_bound(ctx: Context):
    at10 = len(derive_obstruction_codes(2, 2, 10, min_n=10))
    others = {sk: len(derive_obstruction_codes(*sk, 10, min_n=7)) for sk in ((1, 2), (2, 1))}
    ok = at10 == 0 and all(v == 0 for v in others.values())
    detail = f"(2,2) n=10: {at10}; (1,2) n=7..10: {others[(1, 2)]}; (2,1) n=7..10: {others[(2, 1)]}"
    return ok, detail


def check_small_obstructions(ctx: Context):
    small = derive_obstruction_codes(2, 2, 6)
    seven = [graph_from_code(c) for c in derive_obstruction_codes(2, 2, 7, min_n=7)]
    three = [g for g in seven if len(gr.components(g)) == 3]
    iso_ok = all(has_isolated_vertex(g) for g in three)
    # the same two facts for arbitrary graphs, by brute force
    general_small = sum(1 for n in range(1, 7) for g in gr.graphs_up_to_iso(n)
                        if not brute_force_sk_polar(g, 2, 2))
    general_three = [g for g in gr.graphs_up_to_iso(7)
                     if len(gr.components(g)) == 3 and is_minimal_obstruction(g, 2, 2, oracle=True)]
    general_ok = all(has_isolated_vertex(g) for g in general_three)
    ok = not small and iso_ok and general_small == 0 and general_ok
    detail = (f"cograph obstructions on <=6 vertices: {len(small)}; 7-vertex 3-component: "
              f"{len(three)}, all with isolated vertex: {iso_ok}; all graphs <=6 vertices "
              f"non-2-polar: {general_small}; any 7-vertex 3-component obstruction: "
              f"{len(general_three)}, all with isolated vertex: {general_ok}")
    return ok, detail


def check_closure_generators(ctx: Context):
    cat = _need_catalog(ctx)
    classes = closure_classes(cat[g].graph for g in GENERATORS)
    members = set().union(*classes)
    ok = len(members) == 48 and members == set(cat.by_code) and len(classes) == 4
    sizes = ", ".join(f"{g}: {len(c)}" for g, c in zip(GENERATORS, classes))
    detail = (f"{len(members)} members in {len(classes)} classes ({sizes}), expected 48; "
              f"equal to catalog: {members == set(cat.by_code)}")
    return ok, detail


def check_split_case(ctx: Context):
    codes = set(derive_obstruction_codes(1, 1, 6))
    two_k2 = "U(J(vv)J(vv))"
    ok = codes == {two_k2, complement_code(two_k2)}
    return ok, f"{len(codes)} obstructions: {sorted(codes)}"


def check_one_two_case(ctx: Context):
    two_one = derive_obstruction_codes(2, 1, 6)
    one_two = set(derive_obstruction_codes(1, 2, 6))
    comps = {complement_code(c) for c in two_one}
    ok = len(two_one) == 9 and one_two == comps
    detail = (f"(2,1): {len(two_one)} ({_by_size(two_one)}), expected 9; "
              f"(1,2) equals their complements: {one_two == comps}")
    return ok, detail


def _either_monopolar(code: str) -> bool:
    return code_is_sk_polar(code, 1, None) or code_is_sk_polar(code, None, 1)


def check_polar_counts(ctx: Context):
    polar = derive_obstruction_codes(None, None, 10)
    mono = derive_obstruction_codes(1, None, 10)
    found = minimal_codes(10, _either_monopolar)
    either = [c for n in sorted(found) for c in found[n]]
    readings = [name for name, v in (("stable+cliques", mono), ("either side", either)) if len(v) == 18]
    ok = len(polar) == 8 and bool(readings)
    detail = (f"polar: {len(polar)} (expected 8); monopolar as stable set plus cliques: "
              f"{len(mono)}; monopolar on either side: {len(either)}; expected 18, "
              f"matching reading: {', '.join(readings) or 'none'}")
    return ok, detail


def check_families(ctx: Context):
    start = time.perf_counter()
    bad = []
    largest = 0
    for k in (2, 3):
        for i in range(1, 25):
            g = family_member(i, k)
            largest = max(largest, g.n)
            if not is_minimal_obstruction(g, k, k):
                bad.append(f"F{i}@k={k}")
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 30
    detail = f"48 members checked, largest {largest} vertices, failures: {bad or 'none'}; {elapsed:.1f}s"
    return ok, detail


def check_structure(ctx: Context):
    lines = []
    summary = []
    ok = True
    runs = [(2, 9)] + ([(3, 12)] if ctx.full else [])
    for k, max_n in runs:
        graphs = derive_obstructions(k, k, max_n)
        report = verify_structure_lemmas(graphs, k)
        ok &= report.ok
        summary.append(f"k={k} (n<={max_n}): {report.checked} obstructions, {len(report.violations)} violations")
        per = Counter(stmt for _, stmt, _ in report.violations)
        for stmt in "123456":
            lines.append(f"k={k} statement {stmt}: " + ("ok" if not per[stmt] else f"{per[stmt]} violation(s)"))
        for i, stmt, msg in report.violations:
            lines.append(f"k={k} statement {stmt} fails on {to_graph6(graphs[i])}: {msg}")
    if not ctx.full:
        summary.append("k=3 skipped at fast level")
    return ok, "; ".join(summary), lines


def check_oracle(ctx: Context):
    disagreements = []
    checked = 0
    for n in range(1, 9):
        for code in enumerate_codes(n):
            g = graph_from_code(code)
            for s in range(4):
                for k in range(4):
                    checked += 1
                    if is_sk_polar(g, s, k) != brute_force_sk_polar(g, s, k):
                        disagreements.append((code, s, k))
    return not disagreements, f"{checked} comparisons, {len(disagreements)} disagreements"


def check_certification(ctx: Context, seed: int = 2024, samples: int = 200):
    cat = _need_catalog(ctx)
    graphs = [graph_from_code(c) for n in range(1, 10) for c in enumerate_codes(n)]
    rng = random.Random(seed)
    graphs += [random_cograph(rng.randint(10, 40), rng) for _ in range(samples)]
    failures = 0
    unnamed = 0
    outcomes = Counter()
    for g in graphs:
        cert = certify(g, catalog=cat)
        outcomes[cert.outcome] += 1
        if not check_certificate(g, cert, catalog=cat):
            failures += 1
        if cert.outcome == OBSTRUCTION and cert.id is None:
            unnamed += 1
    ok = failures == 0 and unnamed == 0
    detail = (f"{len(graphs)} graphs ({dict(sorted(outcomes.items()))}); invalid certificates: "
              f"{failures}; obstructions without catalog id: {unnamed}")
    return ok, detail


def check_switching(ctx: Context, max_n: int = 8):
    cat = _need_catalog(ctx)
    polar = 0
    broken = 0
    for n in range(1, max_n + 1):
        for g in gr.graphs_up_to_iso(n):
            if not brute_force_sk_polar(g, 2, 2):
                continue
            polar += 1
            broken += sum(1 for v in range(n) if not brute_force_sk_polar(gr.switch_vertex(g, v), 2, 2))
    present = set(cat.by_code)
    missing = sum(1 for e in cat for d in partial_complement_codes(e.code) if d not in present)
    ok = broken == 0 and missing == 0
    detail = (f"{polar} 2-polar graphs on <= {max_n} vertices, {broken} switchings leave the class; "
              f"partial complements of catalog entries missing from it: {missing}")
    return ok, detail


CHECKS: list[tuple[str, str, Callable]] = [
    ("A1", "complete list of 2-polar obstructions", check_complete_list),
    ("A2", "no obstruction beyond (s+1)(k+1) vertices", check_size_bound),
    ("A3", "obstructions need seven vertices", check_small_obstructions),
    ("A4", "closure of four generators", check_closure_generators),
    ("A5", "split obstructions", check_split_case),
    ("A6", "(2,1) and (1,2) obstructions", check_one_two_case),
    ("A7", "polar and monopolar obstruction counts", check_polar_counts),
    ("A8", "family members are minimal", check_families),
    ("A9", "component structure of obstructions", check_structure),
    ("A10", "dynamic program agrees with brute force", check_oracle),
    ("A11", "certificates validate", check_certification),
    ("A12", "switching and partial complementation", check_switching),
]


def make_context(level: str = "fast", catalog_path: str | Path | None = None) -> Context:
    if level not in LEVELS:
        raise ValueError(f"level must be one of {LEVELS}")
    try:
        return Context(level, load_catalog(catalog_path))
    except (CatalogError, OSError) as exc:
        return Context(level, None, str(exc))


def run_check(name: str, ctx: Context) -> CheckResult:
    title, func = next((t, f) for n, t, f in CHECKS if n == name)
    start = time.perf_counter()
    lines: list[str] = []
    try:
        out = func(ctx)
        passed, detail = out[0], out[1]
        if len(out) > 2:
            lines = out[2]
    except CatalogError as exc:
        passed, detail = False, str(exc)
    return CheckResult(name, title, passed, detail, time.perf_counter() - start, lines)


def run_suite(level: str = "fast", catalog_path=None, only=None) -> list[CheckResult]:
    """Run every check (or those named in ``only``); a catalog that fails to
    load is reported as its own failing entry."""
    ctx = make_context(level, catalog_path)
    results = []
    if ctx.catalog is None:
        results.append(CheckResult("catalog", "catalog file loads and is consistent", False,
                                   ctx.catalog_error or ""))
    else:
        results.append(CheckResult("catalog", "catalog file loads and is consistent", True,
                                   f"{len(ctx.catalog)} entries"))
    for name, _, _ in CHECKS:
        if only is None or name in only:
            results.append(run_check(name, ctx))
    return results

