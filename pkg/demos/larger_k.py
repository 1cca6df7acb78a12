"""Obstructions for k = 3 and the shape of their components.

The 24 families give one minimal k-polar obstruction each for every k; at
k = 3 exhaustive search up to 12 vertices finds many more.  The component
structure check looks for the patterns that hold at k = 2 and reports the
one graph where the five-component pattern breaks.
"""

from collections import Counter

from polarcog import graph as gr
from polarcog.catalog import family_member
from polarcog.formats import to_graph6
from polarcog.obstructions import (
    derive_obstructions,
    is_minimal_obstruction,
    k_plus_two_template,
    verify_structure_lemmas,
)

k = 3
sizes = [family_member(i, k).n for i in range(1, 25)]
ok = all(is_minimal_obstruction(family_member(i, k), k, k) for i in range(1, 25))
print(f"family members at k={k}: sizes {sizes}, all minimal: {ok}")

found = derive_obstructions(k, k, 12)
print(f"exhaustive search, n <= 12: {len(found)} obstructions", dict(sorted(Counter(g.n for g in found).items())))

for ell in range(1, k + 2):
    t = k_plus_two_template(k, ell)
    print(f"template with ell={ell}: {t.n} vertices, minimal: {is_minimal_obstruction(t, k, k)}")

report = verify_structure_lemmas(found, k)
print(f"structure check: {report.checked} graphs, {len(report.violations)} violation(s)")
for i, stmt, msg in report.violations:
    g = found[i]
    sizes = sorted(gr.popcount(m) for m in gr.components(g))
    print(f"  statement {stmt}: {to_graph6(g)} with component sizes {sizes}: {msg}")
    print(f"  still minimal by brute force: {is_minimal_obstruction(g, k, k, oracle=True)}")
