"""
BFS level sizes in random graphs
================================

Predicted level sizes for G(n, p) next to measured ones, and the ratio of
expected dependencies between neighbouring levels.
"""

import numpy as np

from bolt.analysis import dependency_ratio, empirical_levels, predict_levels

n, p = 1000, 0.01
prof = predict_levels(n, p)
mean, std = empirical_levels(n, p, seeds=range(20), sources_per_graph=10)

print("level  recurrence  exploration  measured")
for m in range(max(len(prof.alpha), len(mean))):
    a = prof.alpha[m] if m < len(prof.alpha) else np.nan
    b = prof.alpha_exact[m] if m < len(prof.alpha_exact) else np.nan
    c = mean[m] if m < len(mean) else np.nan
    print(f"{m:5d}  {a:10.2f}  {b:11.2f}  {c:8.2f} +- {std[m] if m < len(std) else 0:.2f}")

# Once p * alpha is near 1 the linear recurrence overshoots; the exploration
# form tracks the measurement much better from level 3 on.

# The dependency ratio between consecutive levels, away from the last level,
# sits near the average degree: that is the base of the exponential pivot weights
big = predict_levels(100000, 0.0001)
for k in range(2, big.last_level):
    print(k, round(dependency_ratio(big, k), 2), "lam =", big.lam)
