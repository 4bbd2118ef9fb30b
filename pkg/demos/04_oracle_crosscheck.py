"""
Cross-checking the solver against the exhaustive oracle on random
P6-free instances, and timing both on a larger cograph.
"""

import time

import numpy as np

from wedp6 import brute_force_wed, gen_instance, solve_wed

## Agreement on a random corpus
kinds = ["gnp-filtered", "unipolar", "cograph"]
agree = 0
for seed in range(300):
    inst = gen_instance(kinds[seed % 3], 7 + seed % 8, 0.4, seed,
                        inf_fraction=0.1, p6_free=True)
    r, o = solve_wed(inst), brute_force_wed(inst)
    agree += r.weight == (o and o.total_weight)
print(f"{agree}/300 agree")

## Timing on a 500-vertex cograph
inst = gen_instance("cograph", 500, 0.5, seed=0)
times = []
for _ in range(3):
    t = time.perf_counter()
    r = solve_wed(inst)
    times.append(time.perf_counter() - t)
print("status", r.status, "weight", r.weight,
      f"median {np.median(times) * 1000:.1f} ms over {len(times)} runs")
