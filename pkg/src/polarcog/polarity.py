"""(s,k)-polarity of cographs.

A polar partition splits the vertices into ``A``, inducing a complete
multipartite graph, and ``B``, inducing a disjoint union of cliques; edges
between ``A`` and ``B`` are unrestricted.  The signature of a cograph is the
set of exact part counts ``(p, q)`` it realises: ``p`` nonempty parts in
``A`` and ``q`` cliques in ``B``.  Signatures combine bottom-up over the
cotree, so deciding (s,k)-polarity is a dynamic program.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cograph import JOIN, LEAF, UNION, Cotree, build_cotree, code_size, split_code
from .graph import Graph, bits, popcount

Signature = frozenset  # of (p, q) pairs

BRUTE_FORCE_MAX_N = 12
UNBOUNDED = None


def _cap(cap: int | None, n: int) -> int:
    if cap is None:
        return n
    if cap < 0:
        raise ValueError("part caps must be non-negative")
    return cap


def leaf_signature(s_cap: int, k_cap: int) -> Signature:
    return frozenset(pq for pq in ((1, 0), (0, 1)) if pq[0] <= s_cap and pq[1] <= k_cap)


def _union_pair(a, b):
    """Part counts of ``A`` and ``B`` after a disjoint union, or None."""
    (p1, q1), (p2, q2) = a, b
    if p1 == 0:
        p = p2
    elif p2 == 0:
        p = p1
    elif p1 == 1 and p2 == 1:
        # two stable sets with no edges between them merge into one part
        p = 1
    else:
        return None
    return p, q1 + q2


def _join_pair(a, b):
    (p1, q1), (p2, q2) = a, b
    if q1 == 0:
        q = q2
    elif q2 == 0:
        q = q1
    elif q1 == 1 and q2 == 1:
        q = 1
    else:
        return None
    return p1 + p2, q


_COMBINE = {UNION: _union_pair, JOIN: _join_pair}


def combine(kind: str, s1: Signature, s2: Signature, s_cap: int, k_cap: int) -> Signature:
    rule = _COMBINE[kind]
    out = set()
    for a in s1:
        for b in s2:
            pq = rule(a, b)
            if pq is not None and pq[0] <= s_cap and pq[1] <= k_cap:
                out.add(pq)
    return frozenset(out)


def signature(t: Cotree, s_cap: int, k_cap: int) -> Signature:
    """Set of exact ``(p, q)`` realised by the cograph of ``t`` within the caps."""
    if t.kind == LEAF:
        return leaf_signature(s_cap, k_cap)
    sigs = [signature(c, s_cap, k_cap) for c in t.children]
    acc = sigs[0]
    for sg in sigs[1:]:
        acc = combine(t.kind, acc, sg, s_cap, k_cap)
    return acc


@lru_cache(maxsize=None)
def code_signature(code: str, s_cap: int, k_cap: int) -> Signature:
    """:func:`signature` keyed by canonical cotree code (memoised)."""
    if code == "":
        return frozenset([(0, 0)])
    kind, children = split_code(code)
    if kind == LEAF:
        return leaf_signature(s_cap, k_cap)
    acc = code_signature(children[0], s_cap, k_cap)
    for c in children[1:]:
        acc = combine(kind, acc, code_signature(c, s_cap, k_cap), s_cap, k_cap)
    return acc


_BIG = 1 << 20


def code_is_sk_polar(code: str, s: int | None, k: int | None) -> bool:
    s_cap = _BIG if s is None else s
    k_cap = _BIG if k is None else k
    return bool(code_signature(code, s_cap, k_cap))


def is_sk_polar(g: Graph, s: int | None = 2, k: int | None = 2) -> bool:
    """Decide (s,k)-polarity of a cograph; ``None`` means unbounded.

    Raises :class:`~polarcog.cograph.NotCographError` for other graphs.
    """
    s_cap, k_cap = _cap(s, g.n), _cap(k, g.n)
    if g.n == 0:
        return True
    return bool(signature(build_cotree(g), s_cap, k_cap))


def is_polar(g: Graph) -> bool:
    return is_sk_polar(g, None, None)


def is_monopolar(g: Graph, disjunctive: bool = False) -> bool:
    """Stable set plus a union of cliques.

    With ``disjunctive=True`` the complementary reading is also accepted:
    a complete multipartite graph plus a single clique.
    """
    if is_sk_polar(g, 1, None):
        return True
    return disjunctive and is_sk_polar(g, None, 1)


# ---------------------------------------------------------------------------
# Partitions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PolarPartition:
    a_parts: tuple[tuple[int, ...], ...]
    b_cliques: tuple[tuple[int, ...], ...]

    @property
    def counts(self) -> tuple[int, int]:
        return len(self.a_parts), len(self.b_cliques)

    def labels(self, n: int) -> list[tuple[str, int]]:
        """Per-vertex ``("A", i)`` or ``("B", j)``, indices from 1."""
        out: list = [None] * n
        for i, part in enumerate(self.a_parts, 1):
            for v in part:
                out[v] = ("A", i)
        for j, clique in enumerate(self.b_cliques, 1):
            for v in clique:
                out[v] = ("B", j)
        return out

    def to_json(self) -> dict:
        return {"a_parts": [list(p) for p in self.a_parts],
                "b_cliques": [list(c) for c in self.b_cliques]}


def extract_partition(t: Cotree, s: int, k: int) -> PolarPartition | None:
    """A witness partition, or None when ``t`` is not (s,k)-polar.

    Among the realisable counts the one with fewest cliques in ``B`` is
    used, ties going to fewer parts in ``A``.  The signature is recomputed at every node and the target counts are
    replayed top-down.  At each fold step the lexicographically least
    feasible pair of child counts is used.
    """
    s, k = _cap(s, t.n), _cap(k, t.n)
    root = signature(t, s, k)
    if not root:
        return None
    a, b = _replay(t, min(root, key=lambda pq: (pq[1], pq[0])), s, k)
    return PolarPartition(tuple(tuple(sorted(p)) for p in a), tuple(tuple(sorted(c)) for c in b))


def _replay(t: Cotree, target, s, k):
    if t.kind == LEAF:
        if target == (1, 0):
            return [[t.vertex]], []
        return [], [[t.vertex]]
    sigs = [signature(c, s, k) for c in t.children]
    prefix = [sigs[0]]
    for sg in sigs[1:]:
        prefix.append(combine(t.kind, prefix[-1], sg, s, k))
    rule = _COMBINE[t.kind]
    targets = [None] * len(sigs)
    want = target
    for i in range(len(sigs) - 1, 0, -1):
        choice = min((x, y) for x in prefix[i - 1] for y in sigs[i] if rule(x, y) == want)
        want, targets[i] = choice
    targets[0] = want
    a_parts: list[list[int]] = []
    b_cliques: list[list[int]] = []
    for child, tgt in zip(t.children, targets):
        ca, cb = _replay(child, tgt, s, k)
        if t.kind == UNION:
            if a_parts and ca:
                a_parts[0].extend(ca[0])
            else:
                a_parts.extend(ca)
            b_cliques.extend(cb)
        else:
            a_parts.extend(ca)
            if b_cliques and cb:
                b_cliques[0].extend(cb[0])
            else:
                b_cliques.extend(cb)
    return a_parts, b_cliques


def validate_partition(g: Graph, part: PolarPartition, s: int | None, k: int | None) -> bool:
    """Check a partition against the definition, independently of the DP."""
    s_cap, k_cap = _cap(s, g.n), _cap(k, g.n)
    blocks = list(part.a_parts) + list(part.b_cliques)
    seen = [v for blk in blocks for v in blk]
    if sorted(seen) != list(range(g.n)) or any(not blk for blk in blocks):
        return False
    if len(part.a_parts) > s_cap or len(part.b_cliques) > k_cap:
        return False
    for blk in part.a_parts:
        if any(g.has_edge(u, v) for u in blk for v in blk if u < v):
            return False
    for i, p1 in enumerate(part.a_parts):
        for p2 in part.a_parts[i + 1 :]:
            if not all(g.has_edge(u, v) for u in p1 for v in p2):
                return False
    for blk in part.b_cliques:
        if not all(g.has_edge(u, v) for u in blk for v in blk if u < v):
            return False
    for i, c1 in enumerate(part.b_cliques):
        for c2 in part.b_cliques[i + 1 :]:
            if any(g.has_edge(u, v) for u in c1 for v in c2):
                return False
    return True


# ---------------------------------------------------------------------------
# Brute-force oracle (any graph, small n)
# ---------------------------------------------------------------------------

def _cluster_count(g: Graph, mask: int) -> int | None:
    """Number of cliques if ``g[mask]`` is a disjoint union of cliques."""
    count = 0
    left = mask
    while left:
        v = (left & -left).bit_length() - 1
        clique = (g.adj[v] & mask) | (1 << v)
        for u in bits(clique):
            if (g.adj[u] & mask) | (1 << u) != clique:
                return None
        count += 1
        left &= ~clique
    return count


def _multipartite_count(g: Graph, mask: int) -> int | None:
    """Number of parts if ``g[mask]`` is complete multipartite."""
    count = 0
    left = mask
    while left:
        v = (left & -left).bit_length() - 1
        part = mask & ~g.adj[v]
        for u in bits(part):
            if mask & ~g.adj[u] != part:
                return None
        count += 1
        left &= ~part
    return count


def brute_force_signature(g: Graph) -> frozenset:
    """All exact ``(p, q)`` realised by ``g``, by trying every set ``A``.

    The parts of a complete multipartite graph and the cliques of a cluster
    graph are forced, so each choice of ``A`` yields one pair.
    """
    if g.n > BRUTE_FORCE_MAX_N:
        raise ValueError(f"brute force supports n <= {BRUTE_FORCE_MAX_N}")
    full = g.all_vertices
    out = set()
    for a in range(full + 1):
        p = _multipartite_count(g, a)
        if p is None:
            continue
        q = _cluster_count(g, full & ~a)
        if q is not None:
            out.add((p, q))
    return frozenset(out)


def brute_force_sk_polar(g: Graph, s: int | None, k: int | None) -> bool:
    if g.n > BRUTE_FORCE_MAX_N:
        raise ValueError(f"brute force supports n <= {BRUTE_FORCE_MAX_N}")
    s_cap, k_cap = _cap(s, g.n), _cap(k, g.n)
    full = g.all_vertices
    for a in range(full + 1):
        if popcount(a) and s_cap == 0:
            continue
        p = _multipartite_count(g, a)
        if p is None or p > s_cap:
            continue
        q = _cluster_count(g, full & ~a)
        if q is not None and q <= k_cap:
            return True
    return False
