"""Pivot-probability models for single-node betweenness estimation.

Every model returns a :class:`SamplingDistribution` over pivots for one
target node ``v``.  The target itself never gets mass.

``uniform``
    every other node equally likely.
``dbm``
    proportional to ``1 / d(v, i)`` over nodes reachable from ``v``.
``eddbm``
    per-node weight ``lam ** -d(v, i)`` with ``lam`` the average degree,
    then redistributed inside each BFS level proportionally to ``1 / deg(i)``
    (each level keeps its total mass).
``optimal``
    proportional to the true dependency of ``i`` on ``v``; exact after one
    draw but as costly as exact betweenness.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np
from scipy.special import logsumexp

from .errors import EmptySupportError
from .graph import Graph
from .shortest_paths import dependencies_on, distances

_TINY = np.finfo(float).tiny


@dataclass(frozen=True, eq=False)
class SamplingDistribution:
    """Pivot probabilities for target ``target``.

    An empty ``support`` is the zero-distribution marker produced by the
    optimal model for nodes of zero betweenness; it cannot be sampled.
    """

    target: int
    prob: np.ndarray
    model: str

    def __post_init__(self):
        self.prob.setflags(write=False)

    @cached_property
    def support(self) -> np.ndarray:
        return np.flatnonzero(self.prob > 0)

    @cached_property
    def cumulative(self) -> np.ndarray:
        return np.cumsum(self.prob[self.support])

    @property
    def is_zero(self) -> bool:
        return len(self.support) == 0

    def __len__(self):
        return len(self.prob)


@dataclass(frozen=True)
class LevelPartition:
    """Nodes grouped by hop distance from the target (levels 1, 2, ...)."""

    target: int
    level_of: np.ndarray  # -1 for unreachable, 0 for the target
    levels: list

    @property
    def depth(self) -> int:
        return len(self.levels)


def level_partition(g: Graph, v: int) -> LevelPartition:
    dist = distances(g, v)
    depth = int(dist.max())
    order = np.argsort(dist, kind="stable")
    bounds = np.searchsorted(dist[order], np.arange(1, depth + 2))
    levels = [order[bounds[d]:bounds[d + 1]] for d in range(depth)]
    return LevelPartition(v, dist, levels)


def uniform_model(g: Graph, v: int) -> SamplingDistribution:
    n = g.node_count
    g._check(v)
    if n < 2:
        raise EmptySupportError("uniform model needs at least two nodes")
    prob = np.full(n, 1.0 / (n - 1))
    prob[v] = 0.0
    return SamplingDistribution(v, prob, "uniform")


def dbm_model(g: Graph, v: int) -> SamplingDistribution:
    dist = distances(g, v)
    reach = dist > 0
    if not reach.any():
        raise EmptySupportError(f"node {v} reaches no other node")
    prob = np.zeros(g.node_count)
    prob[reach] = 1.0 / dist[reach]
    prob /= prob.sum()
    return SamplingDistribution(v, prob, "dbm")


def eddbm_model(g: Graph, v: int, lam: float | None = None) -> SamplingDistribution:
    """Exponential-in-distance, inverse-degree pivot probabilities.

    ``lam`` defaults to the graph's average degree and is clamped just above
    1.  The computation runs in log space so deep levels do not underflow;
    any support probability is kept at or above the smallest normal float.
    """
    dist = distances(g, v)
    reach = np.flatnonzero(dist > 0)
    if len(reach) == 0:
        raise EmptySupportError(f"node {v} reaches no other node")
    if lam is None:
        lam = g.average_degree()
    log_lam = np.log(max(lam, 1.0 + 1e-9))

    d = dist[reach]
    inv_deg = 1.0 / g.degrees[reach]
    depth = int(d.max())
    level_size = np.bincount(d, minlength=depth + 1)[1:].astype(float)
    level_inv_deg = np.bincount(d, weights=inv_deg, minlength=depth + 1)[1:]
    present = level_size > 0
    lvl = np.arange(1, depth + 1)[present]

    # log of the per-node level weight, normalised over all reachable nodes
    log_base = -lvl * log_lam
    log_pd = log_base - logsumexp(log_base + np.log(level_size[present]))
    log_pd_full = np.full(depth, -np.inf)
    log_pd_full[lvl - 1] = log_pd

    log_p = (log_pd_full[d - 1] + np.log(level_size[d - 1])
             + np.log(inv_deg) - np.log(level_inv_deg[d - 1]))
    p = np.maximum(np.exp(log_p), _TINY)
    prob = np.zeros(g.node_count)
    prob[reach] = p / p.sum()
    return SamplingDistribution(v, prob, "eddbm")


def optimal_model(g: Graph, v: int, table: np.ndarray | None = None) -> SamplingDistribution:
    """Probabilities proportional to each node's dependency on ``v``.

    Needs a traversal from every node, unless a precomputed
    ``dependency_table(g)`` is passed.  Returns the zero-distribution marker
    (empty support) when ``v`` has zero betweenness.
    """
    g._check(v)
    dep = dependencies_on(g, v) if table is None else np.array(table[:, v], dtype=float)
    total = dep.sum()
    prob = dep / total if total > 0 else np.zeros_like(dep)
    return SamplingDistribution(v, prob, "optimal")


MODELS = {
    "uniform": uniform_model,
    "dbm": dbm_model,
    "eddbm": eddbm_model,
    "optimal": optimal_model,
}


def make_model(name: str, g: Graph, v: int) -> SamplingDistribution:
    try:
        factory = MODELS[name]
    except KeyError:
        raise ValueError(f"unknown model {name!r}; choose from {sorted(MODELS)}") from None
    return factory(g, v)


def sample_pivots(dist: SamplingDistribution, rng: np.random.Generator, size: int) -> np.ndarray:
    """``size`` i.i.d. pivots by inverse CDF over the support."""
    if dist.is_zero:
        raise EmptySupportError("cannot sample from the zero distribution")
    cum = dist.cumulative
    u = rng.random(size) * cum[-1]
    pos = np.searchsorted(cum, u, side="right")
    return dist.support[np.minimum(pos, len(cum) - 1)]


def sample_pivot(dist: SamplingDistribution, rng: np.random.Generator) -> int:
    return int(sample_pivots(dist, rng, 1)[0])
