import itertools

import pytest
from hypothesis import strategies as st

from polarcog.graph import Graph
from polarcog.polarity import PolarPartition, validate_partition

ACCEPTANCE_LINES: list[str] = []


def labeling_signature(g: Graph, s: int, k: int) -> set[tuple[int, int]]:
    """Exact (p, q) pairs found by trying every labelling with s A-labels
    and k B-labels.  Exponential; only for tiny graphs."""
    out = set()
    labels = [("A", i) for i in range(s)] + [("B", j) for j in range(k)]
    for assignment in itertools.product(labels, repeat=g.n):
        a = {}
        b = {}
        for v, (side, idx) in enumerate(assignment):
            (a if side == "A" else b).setdefault(idx, []).append(v)
        part = PolarPartition(tuple(tuple(x) for x in a.values()), tuple(tuple(x) for x in b.values()))
        if validate_partition(g, part, s, k):
            out.add(part.counts)
    return out


@st.composite
def graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, chosen) if keep])


@st.composite
def cographs(draw, min_n=1, max_n=12):
    import random

    from polarcog.cograph import random_cograph

    n = draw(st.integers(min_n, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_cograph(n, random.Random(seed))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def catalog():
    from polarcog.catalog import load_catalog

    return load_catalog()
