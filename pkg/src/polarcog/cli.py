"""Command-line entry point: ``polarcog <command> ...``.

Exit codes for ``certify``: 0 polar, 1 obstruction, 2 not a cograph.
Usage, parse and I/O errors exit with 3 or more.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import graph as gr
from .catalog import CatalogError, family, family_member, load_catalog
from .certify import certify, check_certificate
from .cograph import (
    MAX_ENUM_N,
    NotCographError,
    code_size,
    cograph_code,
    enumerate_codes,
    graph_from_code,
)
from .formats import FormatError, from_edge_list, from_graph6, to_graph6
from .obstructions import closure_classes, code_is_minimal, sk_class

EXIT_USAGE = 3
EXIT_IO = 4
EXIT_INTERNAL = 5


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 by default, which would read as "not a cograph"
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _cap(text: str) -> int | None:
    if text.lower() in ("inf", "none", "unbounded"):
        return None
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return value


def _read_text(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def read_graphs(text: str, fmt: str) -> list[gr.Graph]:
    if fmt == "el":
        return [from_edge_list(text)]
    lines = [ln.strip() for ln in text.splitlines()]
    graphs = [from_graph6(ln) for ln in lines if ln and not ln.startswith("#")]
    if not graphs:
        raise FormatError("no graph in input")
    return graphs


def _catalog():
    try:
        return load_catalog()
    except CatalogError as exc:
        raise UsageError(str(exc)) from exc


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def cmd_certify(args) -> int:
    graphs = read_graphs(_read_text(args.input), args.format)
    catalog = _catalog() if (args.s, args.k) == (2, 2) else None
    worst = 0
    for g in graphs:
        cert = certify(g, args.s, args.k, catalog)
        if not check_certificate(g, cert, args.s, args.k, catalog):
            print(f"internal error: certificate failed validation: {cert.dumps()}", file=sys.stderr)
            return EXIT_INTERNAL
        print(cert.dumps())
        worst = max(worst, cert.exit_code)
    return worst


def cmd_catalog(args) -> int:
    if args.k < 2:
        raise UsageError("--k must be at least 2")
    rows = []
    if args.k == 2:
        for e in _catalog():
            if args.families_only and e.provenance == "supplement":
                continue
            if args.disconnected and e.connected:
                continue
            rows.append({"id": e.id, "expression": e.expression, "graph6": to_graph6(e.graph),
                         "n": e.graph.n, "generator": e.generator, "provenance": e.provenance})
    else:
        for i in range(1, 25):
            g = family_member(i, args.k)
            rows.append({"id": f"F{i}", "expression": family(i).text, "graph6": to_graph6(g),
                         "n": g.n, "generator": "-", "provenance": "incomplete list"})
    if args.json:
        print(json.dumps({"k": args.k, "complete": args.k == 2, "entries": rows}, indent=1))
        return 0
    for r in rows:
        print("\t".join(str(r[f]) for f in ("id", "expression", "graph6", "n", "generator", "provenance")))
    return 0


def cmd_enumerate(args) -> int:
    if not 1 <= args.n <= MAX_ENUM_N:
        raise UsageError(f"n must be between 1 and {MAX_ENUM_N}")
    codes = enumerate_codes(args.n)
    if args.filter_obstructions:
        in_class = sk_class(args.s, args.k)
        codes = [c for c in codes if code_is_minimal(c, in_class)]
    out = sys.stdout
    for c in codes:
        out.write(to_graph6(graph_from_code(c)) + "\n")
    return 0


def _seed_graph(token: str, catalog):
    if token in catalog.by_id:
        return token, catalog[token].graph
    try:
        g = from_graph6(token)
    except FormatError:
        raise UsageError(f"unknown id or graph6 string: {token!r}") from None
    return catalog.identify(g) or token, g


def cmd_closure(args) -> int:
    catalog = _catalog()
    tokens = [t for arg in args.seeds for t in arg.split(",") if t]
    if not tokens:
        raise UsageError("no seeds given")
    seeds = [_seed_graph(t, catalog) for t in tokens]
    try:
        codes = [cograph_code(g) for _, g in seeds]
    except NotCographError as exc:
        raise UsageError(f"seed is not a cograph: {exc}") from exc
    classes = closure_classes(g for _, g in seeds)
    label_of = {}
    for (label, _), c in zip(seeds, codes):
        label_of.setdefault(c, label)
    report = []
    for cls in classes:
        gen = next(label_of[c] for c in codes if c in cls)
        members = []
        for c in sorted(cls, key=lambda c: (code_size(c), c)):
            e = catalog.by_code.get(c)
            members.append({"id": e.id if e else None, "graph6": to_graph6(graph_from_code(c)),
                            "n": code_size(c)})
        report.append({"generator": gen, "members": members})
    total = sum(len(r["members"]) for r in report)
    if args.json:
        print(json.dumps({"classes": report, "total": total}, indent=1))
        return 0
    for r in report:
        print(f"class {r['generator']}: {len(r['members'])} members")
        for m in r["members"]:
            print(f"  {m['id'] or '-'}\t{m['graph6']}\t{m['n']}")
    print(f"total: {total} members in {len(report)} classes")
    return 0


def cmd_verify(args) -> int:
    from .verify import CHECKS, run_suite

    only = None
    if args.only:
        only = {t.strip().upper() for t in args.only.split(",") if t.strip()}
        unknown = only - {name for name, _, _ in CHECKS}
        if unknown:
            raise UsageError(f"unknown check(s): {', '.join(sorted(unknown))}")
    results = run_suite(args.level, only=only)
    if args.json:
        print(json.dumps([{"name": r.name, "title": r.title, "passed": r.passed, "detail": r.detail,
                           "seconds": round(r.seconds, 3), "lines": r.lines} for r in results], indent=1))
    else:
        for r in results:
            print(r.line())
            for ln in r.lines:
                print("    " + ln)
        failed = [r.name for r in results if not r.passed]
        print(f"{len(results) - len(failed)}/{len(results)} passed" + (f"; failed: {', '.join(failed)}" if failed else ""))
    return 0 if all(r.passed for r in results) else 1


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="polarcog", description="Polarity of cographs and their minimal obstructions.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("certify", help="certify (s,k)-polarity of graphs")
    c.add_argument("input", nargs="?", help="input file (default: stdin)")
    c.add_argument("--format", choices=("g6", "el"), default="g6")
    c.add_argument("--s", type=_cap, default=2)
    c.add_argument("--k", type=_cap, default=2)
    c.set_defaults(func=cmd_certify)

    c = sub.add_parser("catalog", help="list the obstruction catalogue")
    c.add_argument("--k", type=int, default=2)
    c.add_argument("--disconnected", action="store_true", help="only disconnected entries")
    c.add_argument("--families-only", action="store_true", help="omit supplementary entries")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_catalog)

    c = sub.add_parser("enumerate", help="list n-vertex cographs as graph6")
    c.add_argument("n", type=int)
    c.add_argument("--filter-obstructions", action="store_true")
    c.add_argument("--s", type=_cap, default=2)
    c.add_argument("--k", type=_cap, default=2)
    c.set_defaults(func=cmd_enumerate)

    c = sub.add_parser("closure", help="closure classes under partial complementation")
    c.add_argument("seeds", nargs="+", help="catalogue ids or graph6 strings")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_closure)

    c = sub.add_parser("verify", help="run the verification suite")
    c.add_argument("--level", choices=("fast", "full"), default="fast")
    c.add_argument("--only", help="comma-separated check names, e.g. A1,A5")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, FormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
