"""
Transitive degree and cluster degree
====================================

Two ways of scoring a lambda-similarity relation: how far it is from being
transitive, and how tightly each neighbourhood clusters around its mean.
"""

from ivrough import RelationSpec, cluster_degree, lambda_relation, load_fixture, transitive_degree

system = load_fixture("table1")
B = ("a1", "a2", "a3")

for family in ("sf", "ss", "st"):
    spec = RelationSpec(B, 0.6, family)
    td = transitive_degree(lambda_relation(system, spec), exact=True)
    cd = cluster_degree(system, spec)
    print(f"{family.upper()}: TD = {td.exact} ({td.aggregate:.4f}), CD = {cd.aggregate:.4f}")

# the pieces behind one cluster-degree value
cd = cluster_degree(system, RelationSpec(B, 0.6, "ss"))
print()
print("neighbourhood mean of x1 on a1:", cd.centers[("x1", "a1")])
for attr in B:
    print(f"  component (x1, {attr}) = {cd.components[('x1', attr)]:.5f}")
print(cd.to_text())

# dividing by the single-attribute neighbourhood instead gives a different number
alt = cluster_degree(system, RelationSpec(B, 0.6, "ss"), denominator="attribute")
print("CD with the |R_a(x)| denominator:", round(alt.aggregate, 4))
