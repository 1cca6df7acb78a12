"""Cograph recognition, cotrees and enumeration of unlabelled cographs.

Unlabelled cographs are handled through canonical cotree codes: a leaf is
``v``, an internal node is ``U(...)`` (disjoint union) or ``J(...)`` (join)
around the concatenation of its children's codes in sorted order.  Two
cographs are isomorphic exactly when their codes agree.  The empty graph has
the empty code.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import combinations_with_replacement, product
from typing import Iterator

from .graph import Graph, bits

LEAF = "leaf"
UNION = "union"
JOIN = "join"
_TAG = {UNION: "U", JOIN: "J"}
_KIND = {"U": UNION, "J": JOIN}


class NotCographError(ValueError):
    """Raised for input containing an induced P4; ``witness`` is the path."""

    def __init__(self, witness: tuple[int, int, int, int]):
        super().__init__(f"graph is not a cograph: induced P4 on {list(witness)}")
        self.witness = witness


def find_p4(g: Graph, within: int | None = None) -> tuple[int, int, int, int] | None:
    """Return ``(a, b, c, d)`` inducing the path a-b-c-d, or ``None``.

    Every induced P4 has a middle edge ``bc``; ``a`` must be a private
    neighbour of ``b`` and ``d`` a private neighbour of ``c``, with ``a`` and
    ``d`` non-adjacent.  Checking every edge this way is complete.
    """
    mask = g.all_vertices if within is None else within
    adj = g.adj
    for b in bits(mask):
        for c in bits(adj[b] & mask):
            if c < b:
                continue
            ends_b = adj[b] & ~adj[c] & ~(1 << c) & mask
            ends_c = adj[c] & ~adj[b] & ~(1 << b) & mask
            if not ends_b or not ends_c:
                continue
            for a in bits(ends_b):
                d_mask = ends_c & ~adj[a]
                if d_mask:
                    d = (d_mask & -d_mask).bit_length() - 1
                    return (a, b, c, d)
    return None


def is_cograph(g: Graph) -> bool:
    return find_p4(g) is None


@dataclass(frozen=True)
class Cotree:
    """A union/join decomposition tree.  Leaves carry vertex ids."""

    kind: str
    children: tuple["Cotree", ...] = ()
    vertex: int | None = None

    @classmethod
    def leaf(cls, v: int) -> "Cotree":
        return cls(LEAF, (), v)

    @cached_property
    def code(self) -> str:
        if self.kind == LEAF:
            return "v"
        return _TAG[self.kind] + "(" + "".join(sorted(c.code for c in self.children)) + ")"

    @cached_property
    def leaves(self) -> tuple[int, ...]:
        if self.kind == LEAF:
            return (self.vertex,)
        return tuple(v for c in self.children for v in c.leaves)

    @property
    def n(self) -> int:
        return len(self.leaves)

    def leaf_mask(self) -> int:
        m = 0
        for v in self.leaves:
            m |= 1 << v
        return m

    def check(self) -> None:
        """Raise ``ValueError`` unless the alternation and arity rules hold."""
        if self.kind == LEAF:
            return
        if len(self.children) < 2:
            raise ValueError("internal cotree node with fewer than two children")
        for c in self.children:
            if c.kind == self.kind:
                raise ValueError("cotree node has a child of the same kind")
            c.check()

    def to_graph(self) -> Graph:
        n = self.n
        if sorted(self.leaves) != list(range(n)):
            raise ValueError("cotree leaves must be exactly 0..n-1")
        rows = [0] * n

        def walk(t: Cotree) -> int:
            if t.kind == LEAF:
                return 1 << t.vertex
            masks = [walk(c) for c in t.children]
            total = 0
            for m in masks:
                total |= m
            if t.kind == JOIN:
                for m in masks:
                    other = total & ~m
                    for v in bits(m):
                        rows[v] |= other
            return total

        walk(self)
        return Graph(n, tuple(rows))


def _co_components(g: Graph, mask: int) -> list[int]:
    out = []
    left = mask
    while left:
        seed = left & -left
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= ~g.adj[v] & mask & ~(1 << v)
            frontier = nxt & ~comp
            comp |= frontier
        out.append(comp)
        left &= ~comp
    return out


def _components_in(g: Graph, mask: int) -> list[int]:
    out = []
    left = mask
    while left:
        seed = left & -left
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v] & mask
            frontier = nxt & ~comp
            comp |= frontier
        out.append(comp)
        left &= ~comp
    return out


def build_cotree(g: Graph) -> Cotree:
    """Decompose ``g`` into its cotree; raises :class:`NotCographError`."""
    if g.n == 0:
        raise ValueError("the empty graph has no cotree")

    def rec(mask: int) -> Cotree:
        if mask & (mask - 1) == 0:
            return Cotree.leaf(mask.bit_length() - 1)
        parts = _components_in(g, mask)
        if len(parts) > 1:
            return Cotree(UNION, tuple(rec(p) for p in parts))
        parts = _co_components(g, mask)
        if len(parts) > 1:
            return Cotree(JOIN, tuple(rec(p) for p in parts))
        raise NotCographError(find_p4(g, mask))

    return rec(g.all_vertices)


def canonical_cotree_code(t: Cotree) -> str:
    return t.code


def cograph_code(g: Graph) -> str:
    """Canonical code of a cograph (``""`` for the empty graph)."""
    return "" if g.n == 0 else build_cotree(g).code


# ---------------------------------------------------------------------------
# Codes
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def split_code(code: str) -> tuple[str, tuple[str, ...]]:
    """Return ``(kind, child codes)`` for a canonical code."""
    if code == "v":
        return LEAF, ()
    if len(code) < 4 or code[0] not in _KIND or code[1] != "(" or code[-1] != ")":
        raise ValueError(f"malformed cotree code {code!r}")
    body = code[2:-1]
    children = []
    i = 0
    while i < len(body):
        if body[i] == "v":
            children.append("v")
            i += 1
            continue
        depth = 0
        j = i
        while True:
            if body[j] == "(":
                depth += 1
            elif body[j] == ")":
                depth -= 1
                if depth == 0:
                    break
            j += 1
        children.append(body[i : j + 1])
        i = j + 1
    return _KIND[code[0]], tuple(children)


@lru_cache(maxsize=None)
def code_size(code: str) -> int:
    return code.count("v")


def make_code(kind: str, children) -> str:
    """Code of the node ``kind`` over ``children``, normalised.

    Empty children are dropped, same-kind children are flattened, and a
    single remaining child is returned as is.
    """
    flat = []
    for c in children:
        if not c:
            continue
        ck, grand = split_code(c)
        if ck == kind:
            flat.extend(grand)
        else:
            flat.append(c)
    if not flat:
        return ""
    if len(flat) == 1:
        return flat[0]
    return _TAG[kind] + "(" + "".join(sorted(flat)) + ")"


@lru_cache(maxsize=None)
def complement_code(code: str) -> str:
    if code in ("", "v"):
        return code
    kind, children = split_code(code)
    other = JOIN if kind == UNION else UNION
    return _TAG[other] + "(" + "".join(sorted(complement_code(c) for c in children)) + ")"


@lru_cache(maxsize=None)
def vertex_deletions(code: str) -> frozenset[str]:
    """Codes of all graphs obtained by deleting one vertex."""
    if code == "v":
        return frozenset([""])
    kind, children = split_code(code)
    out = set()
    for i, c in enumerate(children):
        if c in children[:i]:
            continue
        rest = children[:i] + children[i + 1 :]
        for d in vertex_deletions(c):
            out.add(make_code(kind, rest + (d,)))
    return frozenset(out)


def cotree_from_code(code: str) -> Cotree:
    """Labelled cotree for ``code``; leaves numbered in depth-first order."""
    counter = iter(range(code_size(code)))

    def rec(c: str) -> Cotree:
        kind, children = split_code(c)
        if kind == LEAF:
            return Cotree.leaf(next(counter))
        return Cotree(kind, tuple(rec(x) for x in children))

    return rec(code)


def graph_from_code(code: str) -> Graph:
    if code == "":
        return Graph.empty(0)
    return cotree_from_code(code).to_graph()


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------

MAX_ENUM_N = 13


@dataclass
class _Census:
    union_rooted: dict[int, list[str]] = field(default_factory=dict)
    join_rooted: dict[int, list[str]] = field(default_factory=dict)


_census = _Census()


def _partitions(total: int, largest: int) -> Iterator[list[tuple[int, int]]]:
    """Partitions of ``total`` as ``(part size, multiplicity)``, sizes descending."""
    if total == 0:
        yield []
        return
    for size in range(min(total, largest), 0, -1):
        for mult in range(total // size, 0, -1):
            for rest in _partitions(total - size * mult, size - 1):
                yield [(size, mult)] + rest


def _multisets(pool: dict[int, list[str]], total: int) -> Iterator[list[str]]:
    """Multisets of at least two pool items whose sizes sum to ``total``."""
    for parts in _partitions(total, total - 1):
        if sum(m for _, m in parts) < 2:
            continue
        choices = [list(combinations_with_replacement(pool[size], mult)) for size, mult in parts]
        for pick in product(*choices):
            yield [c for group in pick for c in group]


def _rooted(n: int) -> tuple[list[str], list[str]]:
    if n in _census.union_rooted:
        return _census.union_rooted[n], _census.join_rooted[n]
    if n == 1:
        _census.union_rooted[1], _census.join_rooted[1] = [], []
        return [], []
    non_union: dict[int, list[str]] = {1: ["v"]}
    non_join: dict[int, list[str]] = {1: ["v"]}
    for m in range(2, n):
        u, j = _rooted(m)
        non_union[m] = j
        non_join[m] = u
    unions = ["U(" + "".join(sorted(ms)) + ")" for ms in _multisets(non_union, n)]
    joins = ["J(" + "".join(sorted(ms)) + ")" for ms in _multisets(non_join, n)]
    _census.union_rooted[n], _census.join_rooted[n] = unions, joins
    return unions, joins


def enumerate_codes(n: int) -> list[str]:
    """Canonical codes of all ``n``-vertex cographs, one per class."""
    if not 1 <= n <= MAX_ENUM_N:
        raise ValueError(f"enumeration supports 1 <= n <= {MAX_ENUM_N}")
    if n == 1:
        return ["v"]
    unions, joins = _rooted(n)
    return joins + unions


def enumerate_cographs(n: int) -> Iterator[Cotree]:
    """One labelled cotree per isomorphism class of ``n``-vertex cographs."""
    for code in enumerate_codes(n):
        yield cotree_from_code(code)


def random_cotree(n: int, rng) -> Cotree:
    """A random cotree on leaves ``0..n-1``; ``rng`` is a :class:`random.Random`."""
    if n < 1:
        raise ValueError("need at least one vertex")
    order = list(range(n))
    rng.shuffle(order)

    def rec(vs: list[int], kind: str) -> Cotree:
        if len(vs) == 1:
            return Cotree.leaf(vs[0])
        arity = rng.randint(2, min(4, len(vs)))
        cuts = sorted(rng.sample(range(1, len(vs)), arity - 1))
        groups = [vs[a:b] for a, b in zip([0] + cuts, cuts + [len(vs)])]
        other = JOIN if kind == UNION else UNION
        return Cotree(kind, tuple(rec(grp, other) for grp in groups))

    return rec(order, rng.choice([UNION, JOIN]))


def random_cograph(n: int, rng) -> Graph:
    return random_cotree(n, rng).to_graph()
