"""
Lambda-similarity relations and their transitive closure
========================================================

Builds the three relations on the small bundled table and shows why none of
them needs to be transitive.
"""

from ivrough import (RelationSpec, check_properties, lambda_relation, load_fixture,
                     transitive_closure)
from ivrough.relations import find_intransitive_triple

system = load_fixture("table1")
print(system)

for family in ("sf", "ss", "st"):
    spec = RelationSpec(("a1", "a2", "a3"), 0.6, family)
    rel = lambda_relation(system, spec)
    props = check_properties(rel)
    print(f"\n{family.upper()} relation, lambda = 0.6, B = a1..a3")
    print(rel.to_matrix_text(), end="")
    print("reflexive/symmetric/transitive:", tuple(props))

    triple = find_intransitive_triple(rel)
    if triple:
        x, y, z = triple
        print(f"  {x} ~ {y} and {y} ~ {z}, but not {x} ~ {z}")
        closed = transitive_closure(rel)
        for obj in system.objects:
            print(f"  t(R)({obj}) = {sorted(closed.neighborhood(obj))}")

# raising lambda can only remove pairs
print()
for lam in (0.2, 0.4, 0.6, 0.8):
    rel = lambda_relation(system, RelationSpec(system.attributes, lam, "ss"))
    print(f"lambda = {lam}: {int(rel.matrix.sum())} related pairs")
