"""
Evaluation metrics
==================

Average error, ordering efficiency, relaxed efficiency and rank correlation
for every model on one random graph.  The same numbers come out of
``bolt evaluate``.
"""

import numpy as np

from bolt.generators import generate_er
from bolt.metrics import EvaluationReport, evaluate
from bolt.shortest_paths import exact_betweenness

g = generate_er(500, 0.02, seed=4)
exact = exact_betweenness(g)
print(g, "nodes with zero score:", int((exact == 0).sum()))

print(",".join(EvaluationReport.CSV_HEADER))
for model in ["uniform", "dbm", "eddbm"]:
    rep = evaluate(g, model, T=25, seed=1, repetitions=2, graph_id="er500", exact=exact)
    print(",".join(rep.row()))

# Relaxed efficiency ignores pairs with nearly equal rank, so it only grows with t
rep = evaluate(g, "eddbm", T=25, seed=1, repetitions=1, thresholds=(0, 2, 5, 10, 50),
               exact=exact)
print({t: round(x, 2) for t, x in rep.relaxed.items()})
