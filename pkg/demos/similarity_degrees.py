"""
Similarity degrees between interval values
===========================================

Three ways of scoring how alike two closed intervals are, and where they
disagree.
"""

from ivrough import Interval, sim_sf, sim_ss, sim_st

pairs = [
    (Interval(0, 0.5), Interval(0.2, 0.6)),   # partial overlap
    (Interval(0, 1), Interval(2, 3)),         # disjoint
    (Interval(0.4, 0.6), Interval(0, 1)),     # nested, same midpoint
    (Interval(5, 5), Interval(5, 5)),         # the same point
]

print(f"{'u':>12} {'v':>12} {'SF':>8} {'SS':>8} {'ST':>8}")
for u, v in pairs:
    print(f"{str(u):>12} {str(v):>12} {sim_sf(u, v):8.4f} {sim_ss(u, v):8.4f} {sim_st(u, v):8.4f}")

# SF only sees the overlap, so disjoint values always score 0 while SS still
# rewards nearby endpoints. ST compares the two possibility degrees
# P(u >= v) and P(v >= u); intervals sharing a midpoint balance exactly and
# score 1 even when they differ.
u, v = Interval(0.4, 0.6), Interval(0, 1)
print()
print("nested pair:", u, v)
print("  ST =", sim_st(u, v), " SS =", round(sim_ss(u, v), 4))
