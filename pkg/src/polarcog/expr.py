"""A small language for graphs built from K/P/C atoms.

Concrete syntax::

    expr    := term ('+' term)*            disjoint union
    term    := factor ('*' factor)*        join
    factor  := [mult] primary              mult-fold disjoint union
    primary := atom | 'co' '(' expr ')' | '(' expr ')'
    atom    := ('K' | 'P' | 'C') '_' sub
    sub     := INT | 'k' | '{' lin (',' lin)* '}'
    mult    := INT | INT 'k' | 'k' | '(' lin ')'
    lin     := ['-'] lterm (('+' | '-') lterm)*     with lterm := INT | INT 'k' | 'k'

Sizes are linear in the parameter ``k``.  ``K`` with several subscripts is
complete multipartite.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

from . import graph as gr
from .graph import Graph


class ParseError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


@dataclass(frozen=True)
class IntExpr:
    """``coef * k + const``."""

    coef: int = 0
    const: int = 0

    def __call__(self, k: int) -> int:
        return self.coef * k + self.const

    def is_constant(self) -> bool:
        return self.coef == 0

    def __str__(self):
        if self.coef == 0:
            return str(self.const)
        head = {1: "k", -1: "-k"}.get(self.coef, f"{self.coef}k")
        if self.const == 0:
            return head
        sign = "+" if self.const > 0 else "-"
        return f"{head}{sign}{abs(self.const)}"


@dataclass(frozen=True)
class Atom:
    kind: str  # "K", "P" or "C"
    args: tuple[IntExpr, ...]


@dataclass(frozen=True)
class Union:
    children: tuple


@dataclass(frozen=True)
class Join:
    children: tuple


@dataclass(frozen=True)
class Complement:
    child: object


@dataclass(frozen=True)
class Repeat:
    count: IntExpr
    child: object


GraphExpr = Atom | Union | Join | Complement | Repeat


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------

class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg, pos=None):
        raise ParseError(msg, self.pos if pos is None else pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def accept(self, s: str) -> bool:
        self.skip()
        if self.text.startswith(s, self.pos):
            self.pos += len(s)
            return True
        return False

    def expect(self, s: str):
        if not self.accept(s):
            found = self.peek() or "end of input"
            self.error(f"expected {s!r}, found {found!r}")

    def integer(self) -> int | None:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        return int(self.text[start : self.pos]) if self.pos > start else None

    def lin_term(self) -> IntExpr:
        num = self.integer()
        if self.pos < len(self.text) and self.text[self.pos] == "k":
            self.pos += 1
            return IntExpr(1 if num is None else num, 0)
        if num is None:
            self.error("expected integer or 'k'")
        return IntExpr(0, num)

    def lin(self) -> IntExpr:
        sign = -1 if self.accept("-") else 1
        t = self.lin_term()
        coef, const = sign * t.coef, sign * t.const
        while True:
            if self.accept("+"):
                sign = 1
            elif self.accept("-"):
                sign = -1
            else:
                return IntExpr(coef, const)
            t = self.lin_term()
            coef += sign * t.coef
            const += sign * t.const

    def parse(self):
        e = self.expr()
        self.skip()
        if self.pos != len(self.text):
            self.error(f"unexpected {self.text[self.pos]!r}")
        return e

    def expr(self):
        items = [self.term()]
        while self.accept("+"):
            items.append(self.term())
        return items[0] if len(items) == 1 else Union(tuple(items))

    def term(self):
        items = [self.factor()]
        while self.accept("*"):
            items.append(self.factor())
        return items[0] if len(items) == 1 else Join(tuple(items))

    def _starts_primary(self) -> bool:
        c = self.peek()
        return c in ("K", "P", "C", "(") or self.text.startswith("co(", self.pos)

    def factor(self):
        self.skip()
        c = self.peek()
        if c.isdigit() or c == "k":
            count = self.lin_term()
            if not self._starts_primary():
                self.error("expected a graph after multiplicity")
            return Repeat(count, self.primary())
        if c == "(":
            save = self.pos
            try:
                self.pos += 1
                count = self.lin()
                self.expect(")")
                if self._starts_primary():
                    return Repeat(count, self.primary())
            except ParseError:
                pass
            self.pos = save
        return self.primary()

    def primary(self):
        self.skip()
        start = self.pos
        if self.accept("co("):
            inner = self.expr()
            self.expect(")")
            return Complement(inner)
        if self.accept("("):
            inner = self.expr()
            self.expect(")")
            return inner
        c = self.peek()
        if c in ("K", "P", "C"):
            self.pos += 1
            self.expect("_")
            if self.accept("{"):
                args = [self.lin()]
                while self.accept(","):
                    args.append(self.lin())
                self.expect("}")
            else:
                num = self.integer()
                if num is None:
                    if self.peek() == "k":
                        self.pos += 1
                        args = [IntExpr(1, 0)]
                    else:
                        self.error("expected subscript")
                else:
                    args = [IntExpr(0, num)]
            if c in ("P", "C") and len(args) != 1:
                self.error(f"{c} takes exactly one subscript", start)
            if c == "C" and args[0].is_constant() and args[0].const < 3:
                self.error("cycle needs at least 3 vertices", start)
            return Atom(c, tuple(args))
        self.error(f"expected a graph, found {c or 'end of input'!r}")


def parse_expr(text: str) -> GraphExpr:
    """Parse the concrete syntax into an AST; raises :class:`ParseError`."""
    return _Parser(text).parse()


# ---------------------------------------------------------------------------
# Formatting
# ---------------------------------------------------------------------------

def _fmt_mult(c: IntExpr) -> str:
    if c.is_constant() and c.const >= 0:
        return str(c.const)
    if c.const == 0 and c.coef > 0:
        return str(c)
    return f"({c})"


def _fmt_sub(args: tuple[IntExpr, ...]) -> str:
    if len(args) == 1:
        a = args[0]
        if (a.is_constant() and a.const >= 0) or a == IntExpr(1, 0):
            return str(a)
    return "{" + ",".join(str(a) for a in args) + "}"


def format_expr(e: GraphExpr) -> str:
    if isinstance(e, Atom):
        return f"{e.kind}_{_fmt_sub(e.args)}"
    if isinstance(e, Complement):
        return f"co({format_expr(e.child)})"
    if isinstance(e, Repeat):
        inner = format_expr(e.child)
        if not isinstance(e.child, (Atom, Complement)):
            inner = f"({inner})"
        return _fmt_mult(e.count) + inner
    if isinstance(e, Union):
        return " + ".join(
            f"({format_expr(c)})" if isinstance(c, Union) else format_expr(c) for c in e.children
        )
    if isinstance(e, Join):
        return " * ".join(
            f"({format_expr(c)})" if isinstance(c, (Union, Join)) else format_expr(c)
            for c in e.children
        )
    raise TypeError(f"not a graph expression: {e!r}")


# ---------------------------------------------------------------------------
# Evaluation
# ---------------------------------------------------------------------------

def uses_k(e: GraphExpr) -> bool:
    if isinstance(e, Atom):
        return any(not a.is_constant() for a in e.args)
    if isinstance(e, Complement):
        return uses_k(e.child)
    if isinstance(e, Repeat):
        return not e.count.is_constant() or uses_k(e.child)
    return any(uses_k(c) for c in e.children)


def eval_expr(e: GraphExpr, k: int | None = None) -> Graph:
    """Build the graph denoted by ``e`` at parameter ``k``."""
    if k is None and uses_k(e):
        raise ValueError("expression references k but no k was given")
    return _eval(e, k)


def _eval(e, k):
    if isinstance(e, Atom):
        sizes = [a(k) if not a.is_constant() else a.const for a in e.args]
        if any(s < 0 for s in sizes):
            raise ValueError(f"negative size in {format_expr(e)} at k={k}")
        if e.kind == "K":
            return gr.complete(sizes[0]) if len(sizes) == 1 else gr.complete_multipartite(sizes)
        if e.kind == "P":
            return gr.path(sizes[0])
        return gr.cycle(sizes[0])
    if isinstance(e, Complement):
        return gr.complement(_eval(e.child, k))
    if isinstance(e, Repeat):
        m = e.count(k) if not e.count.is_constant() else e.count.const
        if m < 0:
            raise ValueError(f"negative multiplicity in {format_expr(e)} at k={k}")
        part = _eval(e.child, k)
        out = Graph.empty(0)
        for _ in range(m):
            out = gr.disjoint_union(out, part)
        return out
    if isinstance(e, Union):
        return reduce(gr.disjoint_union, (_eval(c, k) for c in e.children))
    if isinstance(e, Join):
        return reduce(gr.join, (_eval(c, k) for c in e.children))
    raise TypeError(f"not a graph expression: {e!r}")


def _poly_add(a, b):
    n = max(len(a), len(b))
    return tuple((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n))


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return tuple(out)


def vertex_count(e: GraphExpr) -> tuple[int, ...]:
    """Vertex count as polynomial coefficients in ``k`` (constant term first)."""
    coeffs = list(_count(e))
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _count(e):
    if isinstance(e, Atom):
        if e.kind == "K":
            return reduce(_poly_add, ((a.const, a.coef) for a in e.args))
        return (e.args[0].const, e.args[0].coef)
    if isinstance(e, Complement):
        return _count(e.child)
    if isinstance(e, Repeat):
        return _poly_mul((e.count.const, e.count.coef), _count(e.child))
    return reduce(_poly_add, (_count(c) for c in e.children))


def eval_poly(coeffs: tuple[int, ...], k: int) -> int:
    return sum(c * k**i for i, c in enumerate(coeffs))
