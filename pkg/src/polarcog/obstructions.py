"""Minimal obstructions: checking, extraction, enumeration and closure."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable

from . import graph as gr
from .cograph import (
    UNION,
    complement_code,
    code_size,
    cograph_code,
    enumerate_codes,
    graph_from_code,
    make_code,
    split_code,
    vertex_deletions,
)
from .graph import Graph
from .polarity import brute_force_sk_polar, code_is_sk_polar, is_sk_polar


def code_is_minimal(code: str, in_class: Callable[[str], bool]) -> bool:
    """True if ``code`` is outside a hereditary class but every one-vertex
    deletion is inside it."""
    if in_class(code):
        return False
    return all(in_class(d) for d in vertex_deletions(code))


def sk_class(s: int | None, k: int | None) -> Callable[[str], bool]:
    return lambda code: code_is_sk_polar(code, s, k)


def is_minimal_obstruction(g: Graph, s: int | None, k: int | None, oracle: bool = False) -> bool:
    """Minimal (s,k)-polar obstruction test.

    The default path requires a cograph.  ``oracle=True`` uses the
    brute-force check instead and accepts any graph with n <= 12.
    """
    if oracle:
        if brute_force_sk_polar(g, s, k):
            return False
        return all(brute_force_sk_polar(gr.delete_vertex(g, v), s, k) for v in range(g.n))
    return code_is_minimal(cograph_code(g), sk_class(s, k))


def extract_minimal_obstruction(g: Graph, s: int | None, k: int | None) -> int:
    """Vertex bitmask of a minimal obstruction inside a non-(s,k)-polar cograph.

    Vertices are scanned in ascending order and dropped whenever the rest
    stays non-(s,k)-polar.
    """
    if is_sk_polar(g, s, k):
        raise ValueError("graph is (s,k)-polar; there is no obstruction to extract")
    keep = g.all_vertices
    for v in range(g.n):
        trial = keep & ~(1 << v)
        if not is_sk_polar(gr.induced_subgraph(g, trial), s, k):
            keep = trial
    return keep


def minimal_codes(max_n: int, in_class: Callable[[str], bool], min_n: int = 1) -> dict[int, list[str]]:
    """Codes of all minimal non-members of ``in_class`` by vertex count."""
    return {
        n: [c for c in enumerate_codes(n) if code_is_minimal(c, in_class)]
        for n in range(min_n, max_n + 1)
    }


def derive_obstruction_codes(s: int | None, k: int | None, max_n: int, min_n: int = 1) -> list[str]:
    found = minimal_codes(max_n, sk_class(s, k), min_n)
    return [c for n in sorted(found) for c in found[n]]


def derive_obstructions(s: int | None, k: int | None, max_n: int, min_n: int = 1) -> list[Graph]:
    """Every cograph minimal (s,k)-polar obstruction with ``min_n..max_n``
    vertices, one per isomorphism class."""
    return [graph_from_code(c) for c in derive_obstruction_codes(s, k, max_n, min_n)]


# ---------------------------------------------------------------------------
# Partial complementation
# ---------------------------------------------------------------------------

def partial_complement_codes(code: str) -> set[str]:
    """Codes of every partial complement of the cograph ``code``.

    Includes the full complement (empty side).  For a connected cograph the
    full complement is the only partial complement.
    """
    if code == "":
        return {""}
    kind, comps = split_code(code)
    if kind != UNION:
        return {complement_code(code)}
    out = set()
    m = len(comps)
    for r in range(m + 1):
        for side in combinations(range(m), r):
            first = [comps[i] for i in side]
            rest = [comps[i] for i in range(m) if i not in side]
            out.add(make_code(UNION, [
                complement_code(make_code(UNION, first)),
                complement_code(make_code(UNION, rest)),
            ]))
    return out


def pc_closure_codes(seeds: Iterable[str]) -> set[str]:
    """Breadth-first closure under partial complementation."""
    seen = set(seeds)
    queue = deque(seen)
    while queue:
        c = queue.popleft()
        for d in partial_complement_codes(c):
            if d not in seen:
                seen.add(d)
                queue.append(d)
    return seen


def pc_closure(seeds: Iterable[Graph]) -> set[str]:
    """Isomorphism classes (as cotree codes) reachable from cograph seeds."""
    return pc_closure_codes(cograph_code(g) for g in seeds)


def closure_classes(seeds: Iterable[Graph]) -> list[set[str]]:
    """One closure class per seed, skipping seeds already covered."""
    classes: list[set[str]] = []
    for g in seeds:
        c = cograph_code(g)
        if any(c in cls for cls in classes):
            continue
        classes.append(pc_closure_codes([c]))
    return classes


# ---------------------------------------------------------------------------
# Structure of disconnected obstructions
# ---------------------------------------------------------------------------

def k_plus_two_template(k: int, ell: int) -> Graph:
    """``ell K_1 + (k - ell + 1) K_2 + K_{ell,ell}``."""
    if not 1 <= ell <= k + 1:
        raise ValueError("need 1 <= ell <= k+1")
    g = Graph.empty(ell)
    for _ in range(k - ell + 1):
        g = gr.disjoint_union(g, gr.complete(2))
    return gr.disjoint_union(g, gr.complete_multipartite([ell, ell]))


@dataclass
class StructureReport:
    k: int
    checked: int = 0
    violations: list[tuple[int, str, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, index: int, statement: str, message: str):
        self.violations.append((index, statement, message))


def verify_structure_lemmas(obstructions: Iterable[Graph], k: int) -> StructureReport:
    """Check the component structure of minimal k-polar obstructions.

    Statements checked per graph: (1) at most k+2 components; (2) a
    non-trivial component exists; (3) at most k+1 trivial components; (4)
    with a trivial component, at most one non-complete component; (5)
    unless extremal, complete components are K_1 or K_2; (6) with k+2
    components, isomorphic to the template for some ell and having a
    trivial component.
    """
    report = StructureReport(k)
    templates = [cograph_code(k_plus_two_template(k, ell)) for ell in range(1, k + 2)]
    for i, g in enumerate(obstructions):
        report.checked += 1
        comps = [gr.induced_subgraph(g, m) for m in gr.components(g)]
        trivial = sum(1 for c in comps if c.n == 1)
        complete_comps = [c for c in comps if c.num_edges() == c.n * (c.n - 1) // 2]
        non_complete = len(comps) - len(complete_comps)
        if len(comps) > k + 2:
            report.add(i, "1", f"{len(comps)} components")
        if trivial == len(comps):
            report.add(i, "2", "no non-trivial component")
        if trivial > k + 1:
            report.add(i, "3", f"{trivial} trivial components")
        if trivial >= 1 and non_complete > 1:
            report.add(i, "4", f"{non_complete} non-complete components beside a trivial one")
        if g.n != (k + 1) ** 2 and any(c.n > 2 for c in complete_comps):
            report.add(i, "5", "complete component larger than K_2 in a non-extremal obstruction")
        if len(comps) == k + 2:
            if trivial == 0:
                report.add(i, "6", "k+2 components but none trivial")
            if cograph_code(g) not in templates:
                report.add(i, "6", "k+2 components but not of template shape")
    return report


def has_isolated_vertex(g: Graph) -> bool:
    return any(g.degree(v) == 0 for v in range(g.n))


def code_vertex_count(code: str) -> int:
    return code_size(code)
