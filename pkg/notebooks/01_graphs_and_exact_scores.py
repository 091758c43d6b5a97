"""
Graphs and exact betweenness
============================

Build a small graph from an edge list, look at its CSR arrays, then compute
exact betweenness with the Brandes pass.
"""

import numpy as np

from bolt.graph import build_graph, parse_edge_list, to_text
from bolt.shortest_paths import bfs, dependencies, distances, exact_betweenness

# A SNAP-style edge list: comments, a self-loop and a reciprocal duplicate
text = """# toy network
a b
b c
c d
b d
d d
d b
d e
"""
g = build_graph(parse_edge_list(text))
print(g, g.labels)
print("indptr ", g.indptr)
print("indices", g.indices)

# The loop and the duplicate are gone
print(to_text(g))

# One traversal from "a": distances, path counts, then the dependency of "a"
r = bfs(g, g.index_of("a"))
print("dist ", r.dist)
print("sigma", r.sigma)
print("delta", dependencies(g, r).delta)

# Scores use ordered pairs, so the middle of a 3-path scores 2
bc = exact_betweenness(g)
for label, score in zip(g.labels, bc):
    print(f"{label}: {score:g}")

# Every shortest path of length d has d - 1 interior nodes, so the scores
# add up to the sum of (d - 1) over connected ordered pairs
d = np.array([distances(g, s) for s in range(g.node_count)])
print(bc.sum(), (d[d > 0] - 1).sum())
