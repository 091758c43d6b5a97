"""
Estimating and ordering
=======================

Estimate single-node scores from a handful of sampled traversals, then
order a few nodes by their estimates.
"""

import numpy as np

from bolt.estimator import estimate
from bolt.generators import generate_ba
from bolt.ordering import k_betweenness_ordering
from bolt.sampling import eddbm_model, optimal_model, uniform_model
from bolt.shortest_paths import exact_betweenness

g = generate_ba(1000, 3, seed=1)
bc = exact_betweenness(g)
v = int(np.argsort(bc)[-20])
print("node", v, "exact", bc[v])

# 25 pivots per estimate; repeat with different seeds to see the spread
for name, model in [("uniform", uniform_model), ("eddbm", eddbm_model)]:
    d = model(g, v)
    runs = np.array([estimate(g, d, v, T=25, seed=(5, r)).estimate for r in range(40)])
    print(f"{name:8s} mean {runs.mean():10.1f}  std {runs.std():9.1f}")

# With the ideal weights a single traversal is already exact
print("optimal, one pivot:", estimate(g, optimal_model(g, v), v, T=1, seed=0).estimate)

# Order five nodes; the verdict field is only set for two nodes
nodes = [int(x) for x in np.random.default_rng(2).choice(g.node_count, 5, replace=False)]
res = k_betweenness_ordering(g, nodes, T=25, seed=9)
print("estimated order", res.nodes)
print("exact order    ", sorted(nodes, key=lambda x: -bc[x]))
pair = k_betweenness_ordering(g, nodes[:2], T=25, seed=9)
print(pair.verdict, "| exact:", bc[nodes[0]], bc[nodes[1]])
