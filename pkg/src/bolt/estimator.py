"""Monte Carlo betweenness of a single node by non-uniform pivot sampling.

Each of ``T`` pivots ``i`` is drawn i.i.d. from a pivot distribution and
contributes ``delta_i(v) / p_i``; the estimate is the mean contribution.
This is unbiased whenever every node with nonzero dependency on ``v`` has
positive probability.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from .graph import Graph
from .sampling import SamplingDistribution, make_model, sample_pivots
from .shortest_paths import dependency_at

DEFAULT_SAMPLES = 25

Seed = Union[int, Sequence[int]]


@dataclass(frozen=True)
class EstimationResult:
    target: int
    estimate: float
    samples: int
    seed: Seed
    model: str


def fresh_seed() -> int:
    """A 64-bit seed from OS entropy, for callers that did not pick one."""
    return int(np.random.SeedSequence().generate_state(1, np.uint64)[0])


def _flatten(seed):
    if isinstance(seed, (int, np.integer)):
        return [int(seed)]
    if isinstance(seed, (str, bytes)) or not hasattr(seed, "__iter__"):
        raise TypeError(f"seed parts must be integers, got {seed!r}")
    return [x for part in seed for x in _flatten(part)]


def rng_for(seed: Seed) -> np.random.Generator:
    """Generator for a seed given as an int or a (possibly nested) tuple of ints."""
    return np.random.default_rng(np.random.SeedSequence(_flatten(seed)))


def estimate(g: Graph, dist: SamplingDistribution, v: int, T: int = DEFAULT_SAMPLES,
             seed: Seed | None = None, threads: int = 1) -> EstimationResult:
    """Estimate the betweenness of ``v`` from ``T`` pivots drawn from ``dist``.

    All pivots are drawn up front from one stream seeded by ``seed``, so the
    sampled multiset does not depend on ``threads``; threads only split the
    traversals.  A zero distribution gives an estimate of 0 from 0 samples.
    """
    if T < 1:
        raise ValueError("T must be at least 1")
    if dist.target != v or len(dist) != g.node_count:
        raise ValueError("sampling distribution does not belong to this graph/node")
    if seed is None:
        seed = fresh_seed()
    if dist.is_zero:
        return EstimationResult(v, 0.0, 0, seed, dist.model)

    pivots = sample_pivots(dist, rng_for(seed), T)
    if threads > 1 and T > 1:
        chunks = np.array_split(pivots, min(threads, T))
        with ThreadPoolExecutor(threads) as pool:
            deps = np.concatenate(list(pool.map(lambda c: dependency_at(g, c, v), chunks)))
    else:
        deps = dependency_at(g, pivots, v)
    value = float(np.mean(deps / dist.prob[pivots]))
    return EstimationResult(v, value, T, seed, dist.model)


def estimate_node(g: Graph, v: int, model: str = "eddbm", T: int = DEFAULT_SAMPLES,
                  seed: Seed | None = None, threads: int = 1) -> EstimationResult:
    """Build the ``model`` distribution for ``v`` and estimate its betweenness."""
    return estimate(g, make_model(model, g, v), v, T, seed, threads)
