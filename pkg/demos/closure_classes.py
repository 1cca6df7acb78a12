"""Partial complementation splits the obstructions into four classes.

Partially complementing a graph means splitting its components into two
groups and complementing each group on its own.  Starting from one
obstruction per class and closing under this operation reaches every
obstruction in the catalogue.
"""

from polarcog import graph as gr
from polarcog.catalog import GENERATORS, default_catalog
from polarcog.obstructions import closure_classes, partial_complement_codes

catalog = default_catalog()

f1 = catalog["F1"]
print(f"F1 = {f1.expression} at k=2 has {len(gr.components(f1.graph))} components")
for code in sorted(partial_complement_codes(f1.code)):
    e = catalog.by_code[code]
    print(f"  one partial complement is {e.id}: {e.expression}")
print()

classes = closure_classes(catalog[g].graph for g in GENERATORS)
covered = set()
for gen, cls in zip(GENERATORS, classes):
    ids = sorted((catalog.by_code[c].id for c in cls), key=lambda i: (i[0], int(i[1:].rstrip("c")), i))
    covered |= cls
    print(f"class of {gen}: {len(cls)} members")
    print("   ", " ".join(ids))
print()
print(f"closure reaches {len(covered)} of {len(catalog)} catalogue entries")
