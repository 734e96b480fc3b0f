#!/usr/bin/env python3
"""Measure how component search time grows with graph size.

The sample budget grows like log(N)/epsilon^2, so past a couple thousand
vertices the search stops touching every vertex and the wall-clock growth
drops below quadratic. Forcing full sampling (a tiny epsilon) shows the
contrast on the same graphs.
"""

from scissor import sample_size, timing_scaling

sizes = [1000, 2000, 4000, 8000, 16000]

print("sample budget at epsilon=0.05:")
for n in sizes:
    budget = sample_size(n, 0.05)
    note = "full coverage" if budget == n else "sampled"
    print(f"  N={n:5d} -> N'={budget:5d}  ({note})")

print("\ntiming with sampling (epsilon=0.05):")
report = timing_scaling(sizes, epsilon=0.05, seed=0, reps=3)
for row in report.rows:
    print(f"  N={row.size:5d}  {row.seconds*1e3:8.2f} ms  (N'={row.sample_size})")
print(f"  fitted growth exponent: {report.exponent:.2f}")

print("\ntiming with full sampling forced (epsilon=1e-9):")
forced = timing_scaling(sizes, epsilon=1e-9, seed=0, reps=3)
for row in forced.rows:
    print(f"  N={row.size:5d}  {row.seconds*1e3:8.2f} ms  (N'={row.sample_size})")
print(f"  fitted growth exponent: {forced.exponent:.2f}")
