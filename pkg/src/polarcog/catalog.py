"""Catalogue of cograph minimal 2-polar obstructions and the k-families.

Each of the 24 families is a graph expression in ``k``; at ``k = 2`` they
give the disconnected obstructions ``F1..F24`` and their complements give
the connected ones (ids with a ``c`` suffix).  Exhaustive search turns up
one more disconnected obstruction on 8 vertices that no family produces; it
is kept as a supplementary entry ``S1`` (with ``S1c``) so that the catalogue
identifies every obstruction the search finds.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path

from . import graph as gr
from .cograph import (
    JOIN,
    LEAF,
    UNION,
    NotCographError,
    cograph_code,
    complement_code,
    graph_from_code,
    split_code,
)
from .expr import Atom, IntExpr, Join, Repeat, Union, eval_expr, format_expr, parse_expr
from .formats import FormatError, from_graph6, to_graph6
from .graph import Graph
from .obstructions import (
    closure_classes,
    code_is_minimal,
    derive_obstruction_codes,
    is_minimal_obstruction,
    partial_complement_codes,
    sk_class,
)

CATALOG_ENV = "POLAR_CATALOG"
GENERATORS = ("F1", "F6", "F13", "F21")


class CatalogError(ValueError):
    """A catalogue file or build violates ``invariant``."""

    def __init__(self, invariant: str, message: str):
        super().__init__(f"catalog invariant '{invariant}' violated: {message}")
        self.invariant = invariant


# ---------------------------------------------------------------------------
# Families
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Family:
    id: str
    text: str
    provenance: str = "transcribed"

    @property
    def index(self) -> int:
        return int(self.id[1:])

    @property
    def expr(self):
        return parse_expr(self.text)


@lru_cache(maxsize=None)
def families() -> tuple[Family, ...]:
    text = resources.files("polarcog").joinpath("data/families.txt").read_text()
    out = []
    for line in text.splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        fields = line.split("\t")
        out.append(Family(*fields))
    return tuple(out)


def family(i: int) -> Family:
    if not 1 <= i <= 24:
        raise ValueError(f"unknown family {i}")
    return families()[i - 1]


def family_member(i: int, k: int) -> Graph:
    """The member of family ``i`` for parameter ``k >= 2``."""
    if k < 2:
        raise ValueError("families are defined for k >= 2")
    return eval_expr(family(i).expr, k)


def derive_f20() -> Graph:
    """Recompute the base graph of family 20 from exhaustive search.

    Among the disconnected 8-vertex obstructions that families 6..19 do not
    produce, keep the ones whose extension by ``(k-2)K_1`` stays a minimal
    k-polar obstruction for k = 3 and 4.  Exactly one graph survives.
    """
    known = {cograph_code(family_member(i, 2)) for i in range(6, 20)}
    found = [c for c in derive_obstruction_codes(2, 2, 8, min_n=8)
             if split_code(c)[0] == UNION and c not in known]
    survivors = []
    for c in found:
        g = graph_from_code(c)
        if all(is_minimal_obstruction(_pad_isolated(g, k - 2), k, k) for k in (3, 4)):
            survivors.append(g)
    if len(survivors) != 1:
        raise RuntimeError(f"expected one candidate for F20, found {len(survivors)}")
    return survivors[0]


def _pad_isolated(g: Graph, count: int) -> Graph:
    return gr.disjoint_union(g, Graph.empty(count))


def expr_from_code(code: str):
    """A graph expression (without ``k``) for the cograph ``code``."""
    kind, children = split_code(code)
    if kind == LEAF:
        return Atom("K", (IntExpr(0, 1),))
    if kind == JOIN:
        leaves = children.count("v")
        items = [expr_from_code(c) for c in children if c != "v"]
        if leaves:
            items.insert(0, Atom("K", (IntExpr(0, leaves),)))
        return items[0] if len(items) == 1 else Join(tuple(items))
    items = []
    for c in sorted(set(children), key=lambda c: (c == "v", children.index(c))):
        m = children.count(c)
        e = expr_from_code(c)
        items.append(e if m == 1 else Repeat(IntExpr(0, m), e))
    return items[0] if len(items) == 1 else Union(tuple(items))


# ---------------------------------------------------------------------------
# Catalogue
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ObstructionEntry:
    id: str
    expression: str  # k-parametric family expression, or "derived"
    graph: Graph
    code: str
    generator: str
    provenance: str = "family"

    @property
    def connected(self) -> bool:
        return gr.is_connected(self.graph)

    def line(self) -> str:
        return "\t".join([self.id, self.expression, to_graph6(self.graph),
                          str(self.graph.n), self.generator, self.provenance])


class Catalog:
    """An immutable, code-indexed set of obstruction entries."""

    def __init__(self, entries):
        self.entries = tuple(entries)
        self.by_id = {e.id: e for e in self.entries}
        self.by_code = {e.code: e for e in self.entries}

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, entry_id: str) -> ObstructionEntry:
        return self.by_id[entry_id]

    def identify(self, g: Graph) -> str | None:
        try:
            code = cograph_code(g)
        except NotCographError:
            return None
        e = self.by_code.get(code)
        return e.id if e else None

    def family_entries(self) -> list[ObstructionEntry]:
        return [e for e in self.entries if e.provenance != "supplement"]

    def classes(self) -> dict[str, list[str]]:
        out: dict[str, list[str]] = {}
        for e in self.entries:
            out.setdefault(e.generator, []).append(e.id)
        return out

    def lines(self) -> list[str]:
        return [e.line() for e in self.entries]


def _sort_key(entry_id: str):
    prefix = entry_id[0]
    num = int(entry_id[1:].rstrip("c"))
    return (prefix != "F", entry_id.endswith("c"), num)


def _generator_of(codes: set[str], id_of: dict[str, str]) -> str:
    ids = sorted((id_of[c] for c in codes if c in id_of), key=_sort_key)
    return ids[0]


def build_catalog_k2(include_supplement: bool = True) -> Catalog:
    """Build the k = 2 catalogue from the family expressions.

    Every entry is checked to be a cograph minimal 2-polar obstruction.
    With ``include_supplement`` the obstructions found by exhaustive search
    but produced by no family are appended as ``S1``, ``S2``, ...
    """
    pending: list[tuple[str, str, Graph, str]] = []
    for fam in families():
        g = eval_expr(fam.expr, 2)
        expression = "derived" if fam.provenance == "derived" else fam.text
        pending.append((fam.id, expression, g, "family"))
        comp_expr = "derived" if fam.provenance == "derived" else f"co({fam.text})"
        pending.append((fam.id + "c", comp_expr, gr.complement(g), "family"))
    if include_supplement:
        have = {cograph_code(g) for _, _, g, _ in pending}
        extra = [c for c in derive_obstruction_codes(2, 2, 9)
                 if c not in have and split_code(c)[0] == UNION]
        for i, c in enumerate(extra, 1):
            g = graph_from_code(c)
            text = format_expr(expr_from_code(c))
            pending.append((f"S{i}", text, g, "supplement"))
            pending.append((f"S{i}c", f"co({text})", gr.complement(g), "supplement"))

    id_of: dict[str, str] = {}
    for entry_id, _, g, _ in pending:
        if not is_minimal_obstruction(g, 2, 2):
            raise CatalogError("minimal", f"{entry_id} is not a minimal 2-polar obstruction")
        code = cograph_code(g)
        if code in id_of:
            raise CatalogError("distinct", f"{entry_id} duplicates {id_of[code]}")
        id_of[code] = entry_id
    generator = {}
    for cls in closure_classes(graph_from_code(c) for c in id_of):
        gen = _generator_of(cls, id_of)
        for c in cls:
            generator[c] = gen
    entries = []
    for entry_id, expression, g, prov in sorted(pending, key=lambda p: _sort_key(p[0])):
        code = cograph_code(g)
        entries.append(ObstructionEntry(entry_id, expression, g, code, generator.get(code, "?"), prov))
    return Catalog(entries)


def default_catalog_path() -> Path:
    override = os.environ.get(CATALOG_ENV)
    if override:
        return Path(override)
    return Path(str(resources.files("polarcog").joinpath("data/catalog_k2.txt")))


def write_catalog(catalog: Catalog, path: Path) -> None:
    header = "# id\texpression\tgraph6\tn\tgenerator\tprovenance\n"
    path.write_text(header + "\n".join(catalog.lines()) + "\n")


def parse_catalog(text: str) -> Catalog:
    """Parse catalogue lines without checking graph-theoretic invariants."""
    entries = []
    seen = set()
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip() or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) not in (5, 6):
            raise CatalogError("format", f"line {lineno} has {len(fields)} fields")
        entry_id, expression, g6, n, gen = fields[:5]
        prov = fields[5] if len(fields) == 6 else "family"
        if entry_id in seen:
            raise CatalogError("format", f"duplicate id {entry_id}")
        seen.add(entry_id)
        try:
            g = from_graph6(g6)
        except FormatError as exc:
            raise CatalogError("format", f"{entry_id}: {exc}") from exc
        if not n.isdigit() or int(n) != g.n:
            raise CatalogError("vertex-count", f"{entry_id}: recorded n={n}, graph6 has {g.n}")
        try:
            code = cograph_code(g)
        except NotCographError as exc:
            raise CatalogError("cograph", f"{entry_id}: {exc}") from exc
        entries.append(ObstructionEntry(entry_id, expression, g, code, gen, prov))
    return Catalog(entries)


def check_catalog(catalog: Catalog) -> None:
    """Raise :class:`CatalogError` naming the first violated invariant."""
    codes = [e.code for e in catalog]
    if len(set(codes)) != len(codes):
        raise CatalogError("distinct", "two entries share a canonical code")
    for e in catalog:
        if not code_is_minimal(e.code, sk_class(2, 2)):
            raise CatalogError("minimal", f"{e.id} is not a minimal 2-polar obstruction")
        if e.expression != "derived":
            try:
                built = eval_expr(parse_expr(e.expression), 2)
            except ValueError as exc:
                raise CatalogError("expression", f"{e.id}: {exc}") from exc
            if cograph_code(built) != e.code:
                raise CatalogError("expression", f"{e.id}: expression and graph6 disagree")
    present = set(codes)
    for e in catalog:
        if complement_code(e.code) not in present:
            raise CatalogError("complement-closed", f"complement of {e.id} missing")
        for d in partial_complement_codes(e.code):
            if d not in present:
                raise CatalogError("pc-closed", f"a partial complement of {e.id} is missing")
    id_of = {e.code: e.id for e in catalog}
    for cls in closure_classes(e.graph for e in catalog):
        gen = _generator_of(cls, id_of)
        for c in cls:
            if catalog.by_code[c].generator != gen:
                raise CatalogError("generator", f"{id_of[c]} should list generator {gen}")
    listed = catalog.family_entries()
    if len(listed) != 48 or sum(1 for e in listed if not e.connected) != 24:
        raise CatalogError("family-count", f"{len(listed)} entries attributed to the families, expected 48")


def load_catalog(path: str | Path | None = None, check: bool = True) -> Catalog:
    path = Path(path) if path is not None else default_catalog_path()
    catalog = parse_catalog(path.read_text())
    if check:
        check_catalog(catalog)
    return catalog


@lru_cache(maxsize=None)
def default_catalog() -> Catalog:
    return load_catalog()
