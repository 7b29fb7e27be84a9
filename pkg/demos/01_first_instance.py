"""Build a two-color instance by hand, solve it, and check the answer three ways.

    python3 demos/01_first_instance.py
"""
from simfes import EdgeColoredGraph, brute_simfes, kernelize, solve_simfes, verify_sfes, write_ecg

# A 4-cycle drawn in color 1 and a triangle in color 2 that share the edge 1-2.
G = EdgeColoredGraph(4, 2, (
    (1, 2, {1, 2}),
    (2, 3, {1}),
    (3, 4, {1}),
    (4, 1, {1}),
    (2, 4, {2}),
    (4, 1, {2}),
))
print(write_ecg(G, ["shared edge 1 closes both cycles"]))

for k in (0, 1, 2):
    v = solve_simfes(G, k)
    ref = brute_simfes(G, k)
    print(f"k={k}: solver {'YES' if v else 'NO'}, brute force {'YES' if ref else 'NO'}", end="")
    if v:
        print(f", delete {sorted(v.witness)} (verified: {verify_sfes(G, v.witness)})")
    else:
        print()

# Deleting edge 1 breaks both cycles at once, so one deletion is enough.
# Preprocessing only finds vertex 3 to suppress here (it has degree 2);
# the smaller instance still goes through the matroid search.
K = kernelize(G, 1)
print("\nkernel trace:")
for line in K.trace:
    print("  " + line)
print(f"verdict {K.verdict}, {K.graph.n} vertices and {K.graph.m} edges left, k = {K.k}")
