"""Certificates for (s,k)-polarity of a single graph.

A certificate is one of: a polar partition, an embedded minimal obstruction
(named by its catalogue id when ``s = k = 2``), or an induced P4 showing the
input is not a cograph.  :func:`check_certificate` re-validates a
certificate without using the dynamic program.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import graph as gr
from .catalog import Catalog
from .cograph import build_cotree, find_p4
from .graph import Graph
from .obstructions import extract_minimal_obstruction, is_minimal_obstruction
from .polarity import PolarPartition, extract_partition, validate_partition

POLAR = "polar"
OBSTRUCTION = "obstruction"
NOT_COGRAPH = "not_cograph"
EXIT_CODES = {POLAR: 0, OBSTRUCTION: 1, NOT_COGRAPH: 2}


@dataclass(frozen=True)
class Certificate:
    outcome: str
    partition: PolarPartition | None = None
    id: str | None = None
    vertices: tuple[int, ...] | None = None
    p4: tuple[int, int, int, int] | None = None

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.outcome]

    def to_json(self) -> dict:
        if self.outcome == POLAR:
            return {"outcome": POLAR, "partition": self.partition.to_json()}
        if self.outcome == OBSTRUCTION:
            return {"outcome": OBSTRUCTION, "id": self.id, "vertices": list(self.vertices)}
        return {"outcome": NOT_COGRAPH, "p4": list(self.p4)}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))


def certify(g: Graph, s: int = 2, k: int = 2, catalog: Catalog | None = None) -> Certificate:
    """Decide (s,k)-polarity of ``g`` and return the supporting evidence."""
    if any(c is not None and c < 0 for c in (s, k)):
        raise ValueError("s and k must be non-negative")
    p4 = find_p4(g)
    if p4 is not None:
        return Certificate(NOT_COGRAPH, p4=p4)
    if g.n == 0:
        return Certificate(POLAR, partition=PolarPartition((), ()))
    part = extract_partition(build_cotree(g), s, k)
    if part is not None:
        return Certificate(POLAR, partition=part)
    mask = extract_minimal_obstruction(g, s, k)
    entry_id = None
    if catalog is not None and (s, k) == (2, 2):
        entry_id = catalog.identify(gr.induced_subgraph(g, mask))
    return Certificate(OBSTRUCTION, id=entry_id, vertices=tuple(gr.bits(mask)))


def check_certificate(g: Graph, cert: Certificate, s: int = 2, k: int = 2,
                      catalog: Catalog | None = None) -> bool:
    if cert.outcome == POLAR:
        return cert.partition is not None and validate_partition(g, cert.partition, s, k)
    if cert.outcome == NOT_COGRAPH:
        if cert.p4 is None or len(set(cert.p4)) != 4 or not all(0 <= v < g.n for v in cert.p4):
            return False
        a, b, c, d = cert.p4
        edges = [g.has_edge(a, b), g.has_edge(b, c), g.has_edge(c, d)]
        non_edges = [g.has_edge(a, c), g.has_edge(b, d), g.has_edge(a, d)]
        return all(edges) and not any(non_edges)
    verts = cert.vertices or ()
    if len(set(verts)) != len(verts) or not all(0 <= v < g.n for v in verts):
        return False
    sub = gr.induced_subgraph(g, gr.mask_of(verts))
    if cert.id is not None:
        if catalog is None or cert.id not in catalog.by_id:
            return False
        pattern = catalog[cert.id].graph
        return pattern.n == sub.n and gr.find_induced_embedding(pattern, sub) is not None
    return is_minimal_obstruction(sub, s, k, oracle=sub.n <= 12)
