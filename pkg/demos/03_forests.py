"""The largest edge set that is a forest in every color, and its link to deletions.

Deleting F leaves every color acyclic exactly when the kept edges form a
simultaneous forest, so "k deletions suffice" and "m - k edges can be kept"
are the same question.

    python3 demos/03_forests.py
"""
from simfes.generators import gen_random
from simfes.maxsim_solver import brute_maxsim, max_simultaneous_forest, solve_maxsim
from simfes.simfes_solver import solve_simfes

G = gen_random(6, 10, 2, seed=7)
size, F = max_simultaneous_forest(G)
print(f"{G.m} edges, largest simultaneous forest has {size}: {sorted(F)}")
print(f"brute force agrees: size {size} feasible {bool(brute_maxsim(G, size))}, "
      f"size {size + 1} feasible {bool(brute_maxsim(G, size + 1))}")

print("\n k | delete k? | keep m-k?")
for k in range(G.m + 1):
    print(f"{k:2d} | {str(solve_simfes(G, k).answer):9s} | {solve_maxsim(G, G.m - k).answer}")
