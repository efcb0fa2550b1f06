"""
Attribute reduction on the face dataset
=======================================

Searches for attribute subsets that keep the transitive degree (or cluster
degree) of the full attribute set, first greedily and then exhaustively.
"""

from ivrough import MeasureKind, enumerate_reductions, greedy_reduce, load_fixture

system = load_fixture("face27")
print(system, system.attributes)

for kind in (MeasureKind.td(), MeasureKind.cd()):
    for family in ("sf", "ss", "st"):
        result = greedy_reduce(system, 0.6, family, kind)
        every = enumerate_reductions(system, 0.6, family, kind)
        print(f"\n{kind} / {family.upper()}: greedy -> {{{', '.join(result.attributes)}}}"
              f"  ({len(every)} reductions in total)")
        for step in result.trace:
            print(f"    {step.action:6} {step.attribute:3} significance {step.significance:.4f}")
        for r in every:
            print("   ", "{" + ", ".join(r) + "}")
