"""Ordering two or ``k`` nodes by estimated betweenness."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from .estimator import DEFAULT_SAMPLES, estimate_node, fresh_seed
from .graph import Graph

FIRST_GREATER = "first-greater"
SECOND_GREATER = "second-greater"
TIE = "tie"


@dataclass(frozen=True)
class OrderingResult:
    nodes: list
    estimates: list
    verdict: str | None = None
    seed: int | None = None


def _compare(a: float, b: float, tie_eps: float) -> str:
    if abs(a - b) <= tie_eps:
        return TIE
    return FIRST_GREATER if a > b else SECOND_GREATER


def estimate_many(g: Graph, nodes: Sequence[int], T: int, seed: int,
                  model: str = "eddbm", threads: int = 1) -> list[float]:
    """Independent estimates; node at position ``i`` uses stream ``(seed, i)``."""
    def one(item):
        i, v = item
        return estimate_node(g, v, model, T, (seed, i)).estimate

    items = list(enumerate(nodes))
    if threads > 1:
        with ThreadPoolExecutor(threads) as pool:
            return list(pool.map(one, items))
    return [one(it) for it in items]


def k_betweenness_ordering(g: Graph, nodes: Sequence[int], T: int = DEFAULT_SAMPLES,
                           seed: int | None = None, model: str = "eddbm",
                           tie_eps: float = 0.0, threads: int = 1) -> OrderingResult:
    """Sort ``nodes`` by descending estimated betweenness.

    Each node gets its own EDDBM distribution and ``T`` pivots.  The sort is
    stable, so nodes with equal estimates keep their input order.  For two
    nodes the result also carries a verdict.
    """
    nodes = [int(v) for v in nodes]
    if len(nodes) < 2:
        raise ValueError("need at least two nodes to order")
    if len(set(nodes)) != len(nodes):
        raise ValueError("duplicate nodes in ordering request")
    for v in nodes:
        g._check(v)
    if seed is None:
        seed = fresh_seed()
    est = estimate_many(g, nodes, T, seed, model, threads)
    ranked = sorted(range(len(nodes)), key=lambda i: -est[i])
    verdict = _compare(est[0], est[1], tie_eps) if len(nodes) == 2 else None
    return OrderingResult([nodes[i] for i in ranked], [est[i] for i in ranked], verdict, seed)


def betweenness_ordering(g: Graph, u: int, v: int, T: int = DEFAULT_SAMPLES,
                         seed: int | None = None, model: str = "eddbm",
                         tie_eps: float = 0.0) -> OrderingResult:
    """Compare ``u`` against ``v``; ``verdict`` is one of first-greater, second-greater, tie."""
    if u == v:
        raise ValueError("u and v must differ")
    return k_betweenness_ordering(g, [u, v], T, seed, model, tie_eps)
