"""Immutable simple graphs stored as adjacency bitrows.

Vertex sets are plain ``int`` bitmasks over ``0..n-1``; bit ``v`` set means
vertex ``v`` is a member.  Every operation returns a new :class:`Graph`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator

MAX_ISO_N = 16
MAX_CANON_N = 12


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Graph:
    """A finite simple graph on vertices ``0..n-1``.

    ``adj[v]`` is the bitmask of neighbours of ``v``.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise ValueError("adjacency must have exactly n rows")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"row {v} references a vertex >= n")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric edge {v}-{u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int = 0) -> "Graph":
        return cls(n, (0,) * n)

    @property
    def all_vertices(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def num_edges(self) -> int:
        return sum(popcount(r) for r in self.adj) // 2

    def degree_sequence(self) -> list[int]:
        return sorted((popcount(r) for r in self.adj), reverse=True)

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------

def complete(n: int) -> Graph:
    if n < 0:
        raise ValueError("negative size")
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def path(n: int) -> Graph:
    if n < 0:
        raise ValueError("negative size")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_multipartite(sizes: Iterable[int]) -> Graph:
    sizes = list(sizes)
    if not sizes:
        raise ValueError("complete multipartite graph needs at least one part")
    if any(s < 0 for s in sizes):
        raise ValueError("negative size")
    g = Graph.empty(0)
    for s in sizes:
        g = join(g, Graph.empty(s))
    return g


def make_basic(kind: str, params: list[int]) -> Graph:
    """Build ``complete``, ``path``, ``cycle`` or ``complete_multipartite``."""
    if any(p < 0 for p in params):
        raise ValueError("negative size")
    if kind == "complete_multipartite":
        return complete_multipartite(params)
    if len(params) != 1:
        raise ValueError(f"{kind} takes exactly one size")
    if kind == "complete":
        return complete(params[0])
    if kind == "path":
        return path(params[0])
    if kind == "cycle":
        return cycle(params[0])
    raise ValueError(f"unknown kind {kind!r}")


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------

def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    shift = g1.n
    return Graph(g1.n + g2.n, g1.adj + tuple(r << shift for r in g2.adj))


def join(g1: Graph, g2: Graph) -> Graph:
    left = g1.all_vertices
    right = g2.all_vertices << g1.n
    rows = tuple(r | right for r in g1.adj) + tuple((r << g1.n) | left for r in g2.adj)
    return Graph(g1.n + g2.n, rows)


def complement(g: Graph) -> Graph:
    full = g.all_vertices
    return Graph(g.n, tuple(full & ~r & ~(1 << v) for v, r in enumerate(g.adj)))


def switch_vertex(g: Graph, v: int) -> Graph:
    """Complement the neighbourhood of ``v``."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    bit = 1 << v
    new_row = g.all_vertices & ~g.adj[v] & ~bit
    rows = []
    for u, r in enumerate(g.adj):
        if u == v:
            rows.append(new_row)
        elif new_row >> u & 1:
            rows.append(r | bit)
        else:
            rows.append(r & ~bit)
    return Graph(g.n, tuple(rows))


def components(g: Graph) -> list[int]:
    """Connected components as bitmasks, ordered by least vertex."""
    out = []
    left = g.all_vertices
    while left:
        seed = left & -left
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        out.append(comp)
        left &= ~comp
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def induced_subgraph(g: Graph, s: int) -> Graph:
    """Subgraph induced by the bitmask ``s``; ids renumbered ascending."""
    if s & ~g.all_vertices:
        raise ValueError("vertex set exceeds the host graph")
    verts = list(bits(s))
    index = {v: i for i, v in enumerate(verts)}
    rows = []
    for v in verts:
        rows.append(sum(1 << index[u] for u in bits(g.adj[v] & s)))
    return Graph(len(verts), tuple(rows))


def delete_vertex(g: Graph, v: int) -> Graph:
    return induced_subgraph(g, g.all_vertices & ~(1 << v))


def partial_complement(g: Graph, side: Iterable[int]) -> Graph:
    """Complement the components listed in ``side`` and the rest separately.

    ``side`` holds component indices as returned by :func:`components`.
    An empty or full side gives the ordinary complement.  Vertex ids are
    preserved.
    """
    comps = components(g)
    side = set(side)
    for i in side:
        if not 0 <= i < len(comps):
            raise ValueError(f"component index {i} out of range")
    first = 0
    for i in side:
        first |= comps[i]
    second = g.all_vertices & ~first
    rows = []
    for v, r in enumerate(g.adj):
        group = first if first >> v & 1 else second
        rows.append(group & ~r & ~(1 << v))
    return Graph(g.n, tuple(rows))


def relabel(g: Graph, perm: list[int]) -> Graph:
    """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
    rows = [0] * g.n
    for v, r in enumerate(g.adj):
        rows[perm[v]] = sum(1 << perm[u] for u in bits(r))
    return Graph(g.n, tuple(rows))


# ---------------------------------------------------------------------------
# Isomorphism
# ---------------------------------------------------------------------------

def _refine(nbrs: list[list[int]], colors: list[int]) -> list[int]:
    """Colour refinement to the coarsest equitable partition.

    Colours are renumbered by sorting refinement signatures, which keeps
    the result invariant under relabelling.
    """
    num = len(set(colors))
    while True:
        sigs = [(colors[v], tuple(sorted([colors[u] for u in nb]))) for v, nb in enumerate(nbrs)]
        order = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colors = [order[s] for s in sigs]
        if len(order) == num:
            return colors
        num = len(order)


def _neighbour_lists(g: Graph) -> list[list[int]]:
    return [list(bits(r)) for r in g.adj]


def _twin_classes(g: Graph) -> list[int]:
    """Map each vertex to the least vertex of its twin class."""
    rep = list(range(g.n))
    for u in range(g.n):
        if rep[u] != u:
            continue
        for v in range(u + 1, g.n):
            if rep[v] == v and g.adj[u] & ~(1 << v) == g.adj[v] & ~(1 << u):
                rep[v] = u
    return rep


def _pack(g: Graph, perm: list[int]) -> bytes:
    """Upper-triangle adjacency of the relabelled graph as bytes."""
    inv = [0] * g.n
    for v, p in enumerate(perm):
        inv[p] = v
    bitstr = 0
    for i in range(g.n):
        row = g.adj[inv[i]]
        for j in range(i + 1, g.n):
            bitstr = bitstr << 1 | (row >> inv[j] & 1)
    nbits = g.n * (g.n - 1) // 2
    return bytes([g.n]) + bitstr.to_bytes((nbits + 7) // 8, "big")


def canonical_form(g: Graph) -> bytes:
    """A string that is equal for two graphs exactly when they are isomorphic.

    Individualisation-refinement search over the equitable partition,
    keeping the lexicographically largest packed adjacency.  Twins are
    interchangeable, so only one vertex per twin class is tried in a cell.
    """
    if g.n > MAX_CANON_N:
        raise ValueError(f"canonical_form supports n <= {MAX_CANON_N}")
    if g.n == 0:
        return b"\x00"
    twins = _twin_classes(g)
    nbrs = _neighbour_lists(g)
    best = None

    def search(colors):
        nonlocal best
        colors = _refine(nbrs, colors)
        if len(set(colors)) == g.n:
            code = _pack(g, colors)
            if best is None or code > best:
                best = code
            return
        sizes = {}
        for c in colors:
            sizes[c] = sizes.get(c, 0) + 1
        target = min(c for c, s in sizes.items() if s > 1)
        tried = set()
        for v in range(g.n):
            if colors[v] != target or twins[v] in tried:
                continue
            tried.add(twins[v])
            # double to leave room, then place v just below its cell
            nxt = [2 * c + 1 for c in colors]
            nxt[v] -= 1
            search(nxt)

    search([0] * g.n)
    return best


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    return find_isomorphism(g1, g2) is not None


def find_isomorphism(g1: Graph, g2: Graph) -> list[int] | None:
    """Backtracking search for ``m`` with g1.adj(u,v) == g2.adj(m[u],m[v])."""
    if g1.n != g2.n:
        return None
    if g1.n > MAX_ISO_N:
        raise ValueError(f"isomorphism test supports n <= {MAX_ISO_N}")
    if g1.num_edges() != g2.num_edges() or g1.degree_sequence() != g2.degree_sequence():
        return None
    # refine both graphs jointly so that colours are comparable
    both = disjoint_union(g1, g2)
    colors = _refine(_neighbour_lists(both), [0] * both.n)
    c1, c2 = colors[: g1.n], colors[g1.n :]
    if sorted(c1) != sorted(c2):
        return None
    cand_by_color: dict[int, int] = {}
    for v, c in enumerate(c2):
        cand_by_color[c] = cand_by_color.get(c, 0) | 1 << v
    order = sorted(range(g1.n), key=lambda v: (popcount(cand_by_color[c1[v]]), v))
    return _extend(g1, g2, order, [cand_by_color[c1[v]] for v in range(g1.n)], induced=True)


def _extend(pattern: Graph, host: Graph, order: list[int], domains: list[int],
            induced: bool) -> list[int] | None:
    mapping = [-1] * pattern.n
    used = 0

    def rec(i):
        nonlocal used
        if i == len(order):
            return True
        u = order[i]
        cand = domains[u] & ~used
        for w in order[:i]:
            if pattern.adj[u] >> w & 1:
                cand &= host.adj[mapping[w]]
            elif induced:
                cand &= ~host.adj[mapping[w]]
            if not cand:
                return False
        for h in bits(cand):
            mapping[u] = h
            used |= 1 << h
            if rec(i + 1):
                return True
            used &= ~(1 << h)
        mapping[u] = -1
        return False

    return list(mapping) if rec(0) else None


def find_induced_embedding(pattern: Graph, host: Graph) -> list[int] | None:
    """Return ``m`` (pattern vertex -> host vertex) embedding ``pattern`` as an
    induced subgraph of ``host``, or ``None``."""
    if pattern.n > host.n:
        return None
    if pattern.n == 0:
        return []
    # connected-first order keeps the candidate masks tight
    order: list[int] = []
    seen = 0
    for comp in components(pattern):
        start = max(bits(comp), key=pattern.degree)
        queue = [start]
        seen |= 1 << start
        while queue:
            v = queue.pop(0)
            order.append(v)
            for u in sorted(bits(pattern.adj[v] & ~seen), key=lambda x: -pattern.degree(x)):
                seen |= 1 << u
                queue.append(u)
    domains = []
    for u in range(pattern.n):
        d = pattern.degree(u)
        domains.append(mask_of(h for h in range(host.n) if host.degree(h) >= d))
    return _extend(pattern, host, order, domains, induced=True)


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    """Every labelled graph on ``n`` vertices (2^(n choose 2) of them)."""
    pairs = list(combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        rows = [0] * n
        for i, (u, v) in enumerate(pairs):
            if code >> i & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        yield Graph(n, tuple(rows))


@lru_cache(maxsize=None)
def graphs_up_to_iso(n: int) -> tuple[Graph, ...]:
    """One graph per isomorphism class on ``n`` vertices.

    Grown one vertex at a time from the classes on ``n-1`` vertices and
    deduplicated by :func:`canonical_form`.
    """
    if n == 0:
        return (Graph.empty(0),)
    seen: dict[bytes, Graph] = {}
    for small in graphs_up_to_iso(n - 1):
        for nb in range(1 << (n - 1)):
            rows = [r | ((nb >> v & 1) << (n - 1)) for v, r in enumerate(small.adj)]
            g = Graph(n, tuple(rows) + (nb,))
            key = canonical_form(g)
            if key not in seen:
                seen[key] = g
    return tuple(seen.values())
