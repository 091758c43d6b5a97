"""
Pivot probabilities
===================

Each model assigns a probability to every possible pivot for one target
node.  Here we compare them on a random graph against the ideal weights.
"""

import numpy as np

from bolt.generators import generate_er
from bolt.sampling import MODELS, level_partition

g = generate_er(400, 0.02, seed=3)
v = int(np.argmax(g.degrees))
print(g, "target", v, "degree", g.degree(v))

dists = {name: f(g, v) for name, f in MODELS.items()}
ideal = dists["optimal"].prob

# Total variation distance to the ideal distribution: smaller is better
for name, d in dists.items():
    print(f"{name:8s} TV distance {0.5 * np.abs(d.prob - ideal).sum():.3f}")

# Mass per BFS level.  The exponential model puts most of its mass close to
# the target, roughly like the ideal weights.
part = level_partition(g, v)
print("level  size  " + "  ".join(f"{n:>8s}" for n in dists))
for k, nodes in enumerate(part.levels, start=1):
    masses = "  ".join(f"{d.prob[nodes].sum():8.4f}" for d in dists.values())
    print(f"{k:5d} {len(nodes):5d}  {masses}")

# Inside one level the exponential model favours low-degree nodes: p * deg is flat
lv = part.levels[1]
e = dists["eddbm"].prob
print("p*deg spread on level 2:", np.ptp(e[lv] * g.degrees[lv]))
