"""Quality measures for betweenness estimation and ordering.

* ``error`` / ``average_error``: relative error in percent over nodes with
  positive exact betweenness.
* ``efficiency``: fraction of node pairs whose estimated order agrees with
  the exact order.  Pairs with equal exact scores count as correct only if
  the estimates are equal as well.
* ``relaxed_efficiency``: the same restricted to pairs whose exact
  (competition) ranks differ by more than ``t``.
* ``spearman_rho``: rank correlation with average ranks for ties.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.stats import rankdata

from .errors import UndefinedMetricError
from .estimator import DEFAULT_SAMPLES, fresh_seed
from .generators import _pair_from_index
from .graph import Graph
from .ordering import estimate_many, k_betweenness_ordering
from .shortest_paths import exact_betweenness

FULL_PAIRS_MAX_N = 3000
SAMPLED_PAIRS = 1_000_000
DEFAULT_THRESHOLDS = (2, 3, 5, 10)
# exact scores closer than this (relative) are the same score
EXACT_TIE_RTOL = 1e-9


def error(exact: float, approx: float) -> float:
    if exact <= 0:
        raise UndefinedMetricError("error is undefined for zero exact betweenness")
    return abs(exact - approx) / exact * 100.0


def _tie_tol(a, b):
    return EXACT_TIE_RTOL * np.maximum(1.0, np.maximum(np.abs(a), np.abs(b)))


def _exact_sign(a, b):
    diff = a - b
    return np.where(np.abs(diff) <= _tie_tol(a, b), 0, np.sign(diff)).astype(np.int8)


def competition_ranks(scores) -> np.ndarray:
    """Rank 1 for the highest score; tied scores share the best rank ("1224")."""
    scores = np.asarray(scores, dtype=float)
    order = np.argsort(-scores, kind="stable")
    s = scores[order]
    new_group = np.ones(len(s), dtype=bool)
    new_group[1:] = (s[:-1] - s[1:]) > _tie_tol(s[:-1], s[1:])
    start = np.maximum.accumulate(np.where(new_group, np.arange(len(s)), 0))
    ranks = np.empty(len(s), dtype=np.int64)
    ranks[order] = start + 1
    return ranks


def all_pairs(n: int):
    i, j = np.triu_indices(n, k=1)
    return i.astype(np.int64), j.astype(np.int64)


def sample_pairs(n: int, budget: int | None, seed=None):
    """Unordered node pairs ``(i, j)`` with ``i < j``.

    All ``n (n - 1) / 2`` pairs when ``budget`` is ``None`` and ``n`` is at
    most 3000, or when ``budget`` covers them; otherwise ``budget`` distinct
    pairs drawn uniformly (``budget=None`` means one million).
    """
    if n < 2:
        raise UndefinedMetricError("need at least two nodes for pairs")
    total = n * (n - 1) // 2
    if budget is None:
        budget = total if n <= FULL_PAIRS_MAX_N else SAMPLED_PAIRS
    if budget >= total:
        return all_pairs(n)
    idx = np.sort(np.random.default_rng(seed).choice(total, size=budget, replace=False))
    # _pair_from_index yields (low, high) = (i, j) with i < j
    return _pair_from_index(idx)


def pair_agreement(exact, estimated, pairs, tie_eps: float = 0.0) -> np.ndarray:
    """Boolean ``b_ij`` per pair: estimated order matches exact order."""
    exact = np.asarray(exact, dtype=float)
    estimated = np.asarray(estimated, dtype=float)
    i, j = pairs
    want = _exact_sign(exact[i], exact[j])
    a, b = estimated[i], estimated[j]
    diff = a - b
    # round-off sized gaps count as ties on both sides
    tol = np.maximum(tie_eps, _tie_tol(a, b))
    got = np.where(np.abs(diff) <= tol, 0, np.sign(diff)).astype(np.int8)
    return want == got


def efficiency(exact, estimated, pairs=None, tie_eps: float = 0.0) -> float:
    if pairs is None:
        pairs = sample_pairs(len(exact), None, 0)
    b = pair_agreement(exact, estimated, pairs, tie_eps)
    if len(b) == 0:
        raise UndefinedMetricError("no pairs to evaluate")
    return float(b.mean())


def relaxed_efficiency(exact, estimated, t: int, pairs=None, tie_eps: float = 0.0) -> float:
    """Efficiency over pairs whose exact ranks differ by more than ``t``.

    ``t = 0`` keeps every pair, so it equals ``efficiency``.
    """
    if t < 0:
        raise ValueError("t must be nonnegative")
    if pairs is None:
        pairs = sample_pairs(len(exact), None, 0)
    if t > 0:
        ranks = competition_ranks(exact)
        i, j = pairs
        keep = np.abs(ranks[i] - ranks[j]) > t
        pairs = (i[keep], j[keep])
    if len(pairs[0]) == 0:
        raise UndefinedMetricError(f"no pair has rank gap above {t}")
    return efficiency(exact, estimated, pairs, tie_eps)


def spearman_rho(a, b) -> float:
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if len(a) != len(b) or len(a) < 2:
        raise ValueError("need two score vectors of equal length >= 2")
    ra, rb = rankdata(a), rankdata(b)
    if np.all(ra == ra[0]) or np.all(rb == rb[0]):
        raise UndefinedMetricError("rank correlation undefined for a constant vector")
    return float(np.corrcoef(ra, rb)[0, 1])


def estimate_all(g: Graph, model: str, T: int, seed, nodes=None, threads: int = 1) -> np.ndarray:
    """One estimate per node (``nodes`` defaults to all); stream ``(seed, position)``."""
    nodes = np.arange(g.node_count) if nodes is None else np.asarray(nodes)
    return np.asarray(estimate_many(g, nodes, T, seed, model, threads))


def average_error(g: Graph, model: str = "eddbm", T: int = DEFAULT_SAMPLES, seed=None,
                  repetitions: int = 5, exact=None, threads: int = 1) -> float:
    """Mean relative error (%) over nodes with positive exact betweenness.

    Every node's error is itself the mean over ``repetitions`` estimates.
    """
    if seed is None:
        seed = fresh_seed()
    if exact is None:
        exact = exact_betweenness(g)
    nodes = np.flatnonzero(exact > 0)
    if len(nodes) == 0:
        raise UndefinedMetricError("no node has positive betweenness")
    errs = np.zeros(len(nodes))
    for r in range(repetitions):
        est = estimate_all(g, model, T, (seed, r), nodes, threads)
        errs += np.abs(exact[nodes] - est) / exact[nodes] * 100.0
    return float(np.mean(errs / repetitions))


@dataclass
class EvaluationReport:
    graph_id: str
    model: str
    T: int
    avg_error_pct: float
    efficiency_pct: float
    relaxed: dict
    spearman: float
    pairs_evaluated: int
    seeds: list = field(default_factory=list)

    CSV_HEADER = ("instance", "model", "T", "avg_error", "efficiency", "relaxed_t2",
                  "relaxed_t3", "relaxed_t5", "relaxed_t10", "spearman")

    def row(self) -> list:
        def fmt(x):
            return "" if x is None or (isinstance(x, float) and math.isnan(x)) else f"{x:.6f}"
        relaxed = [fmt(self.relaxed.get(t)) for t in DEFAULT_THRESHOLDS]
        return [self.graph_id, self.model, str(self.T), fmt(self.avg_error_pct),
                fmt(self.efficiency_pct), *relaxed, fmt(self.spearman)]


def evaluate(g: Graph, model: str = "eddbm", T: int = DEFAULT_SAMPLES, seed=None,
             pair_budget: int | None = None, thresholds=DEFAULT_THRESHOLDS,
             repetitions: int = 5, graph_id: str = "graph", exact=None,
             threads: int = 1) -> EvaluationReport:
    """Error, efficiency, relaxed efficiency and Spearman rho for one graph.

    Every node is estimated once per repetition (streams ``(seed, r, i)``)
    and the estimates are reused for all pairs.  Error averages over
    repetitions per node; the ordering measures are averaged over
    repetitions.  Percentages are in ``[0, 100]``.
    """
    if seed is None:
        seed = fresh_seed()
    if exact is None:
        exact = exact_betweenness(g, threads)
    n = g.node_count
    pairs = sample_pairs(n, pair_budget, (seed, 1 << 20))
    positive = exact > 0
    if not positive.any():
        raise UndefinedMetricError("average error needs a node with positive betweenness")
    errs = np.zeros(int(positive.sum()))
    effs, rhos = [], []
    relaxed_sum = {t: 0.0 for t in thresholds}
    relaxed_ok = {t: True for t in thresholds}
    for r in range(repetitions):
        est = estimate_all(g, model, T, (seed, r), None, threads)
        errs += np.abs(exact[positive] - est[positive]) / exact[positive] * 100.0
        effs.append(efficiency(exact, est, pairs))
        for t in thresholds:
            try:
                relaxed_sum[t] += relaxed_efficiency(exact, est, t, pairs)
            except UndefinedMetricError:
                relaxed_ok[t] = False
        try:
            rhos.append(spearman_rho(exact, est))
        except UndefinedMetricError:
            rhos.append(float("nan"))
    avg_err = float(np.mean(errs / repetitions))
    relaxed = {t: (100.0 * relaxed_sum[t] / repetitions if relaxed_ok[t] else float("nan"))
               for t in thresholds}
    return EvaluationReport(graph_id, model, T, avg_err, 100.0 * float(np.mean(effs)),
                            relaxed, float(np.mean(rhos)), len(pairs[0]),
                            [(seed, r) for r in range(repetitions)])


def k_ordering_efficiency(g: Graph, exact, k: int, trials: int, T: int = DEFAULT_SAMPLES,
                          seed=None, model: str = "eddbm") -> float:
    """Mean efficiency of ordering ``trials`` random ``k``-subsets of nodes."""
    if seed is None:
        seed = fresh_seed()
    rng = np.random.default_rng(np.random.SeedSequence((seed, 2 << 20)))
    exact = np.asarray(exact, dtype=float)
    scores = []
    for trial in range(trials):
        subset = rng.choice(g.node_count, size=k, replace=False)
        res = k_betweenness_ordering(g, subset, T, seed + trial, model)
        pos = {v: e for v, e in zip(res.nodes, res.estimates)}
        est = np.array([pos[v] for v in subset])
        scores.append(efficiency(exact[subset], est, all_pairs(k)))
    return float(np.mean(scores))
