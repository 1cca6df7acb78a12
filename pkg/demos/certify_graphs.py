"""Certify a handful of graphs and show what each certificate says.

A polar graph gets a partition into A-parts (independent sets, pairwise
completely joined) and B-cliques (pairwise non-adjacent).  A cograph that is
not 2-polar gets a named minimal obstruction inside it, and anything else gets
an induced P4.
"""

from polarcog import graph as gr
from polarcog.catalog import default_catalog, family_member
from polarcog.certify import certify, check_certificate
from polarcog.formats import to_graph6

catalog = default_catalog()

samples = {
    "C_4": gr.cycle(4),
    "K_{3,3} + K_3": gr.disjoint_union(gr.complete_multipartite([3, 3]), gr.complete(3)),
    "F1 plus a triangle": gr.disjoint_union(family_member(1, 2), gr.complete(3)),
    "complement of F13 joined to K_2": gr.join(gr.complement(family_member(13, 2)), gr.complete(2)),
    "P_5": gr.path(5),
}

for name, g in samples.items():
    cert = certify(g, catalog=catalog)
    assert check_certificate(g, cert, catalog=catalog)
    print(f"{name}  ({g.n} vertices, graph6 {to_graph6(g)})")
    if cert.outcome == "polar":
        for i, part in enumerate(cert.partition.a_parts, 1):
            print(f"    A{i}: {list(part)}")
        for j, clique in enumerate(cert.partition.b_cliques, 1):
            print(f"    B{j}: {list(clique)}")
    elif cert.outcome == "obstruction":
        entry = catalog[cert.id]
        print(f"    contains {cert.id} = {entry.expression} on vertices {list(cert.vertices)}")
    else:
        print(f"    not a cograph, induced path {' - '.join(map(str, cert.p4))}")
    print(f"    json: {cert.dumps()}")
    print()

# The same graph can be polar for looser caps.
g = samples["F1 plus a triangle"]
for s, k in [(2, 2), (2, 3), (3, 2), (None, None)]:
    cert = certify(g, s, k)
    caps = ",".join("inf" if c is None else str(c) for c in (s, k))
    print(f"(s,k) = ({caps}): {cert.outcome}")
