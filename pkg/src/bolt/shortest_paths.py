"""Breadth-first shortest-path counting and Brandes dependency accumulation.

Betweenness follows the ordered-pair convention: ``BC(v)`` sums the
dependency of every source on ``v``, so the middle of a 3-path scores 2.
Pairs with no connecting path contribute nothing.

The heavy loops are numba kernels over the CSR arrays; they release the GIL
so independent sources can be spread over threads.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import cached_property

import numba
import numpy as np

from .graph import Graph

UNREACHED = np.inf


@numba.njit(cache=True, nogil=True)
def _bfs(indptr, indices, s, dist, sigma, order):
    """Fill ``dist``/``sigma``/``order`` from source ``s``; returns visited count.

    ``dist`` must be -1 and ``sigma`` 0 everywhere on entry.
    """
    dist[s] = 0
    sigma[s] = 1.0
    order[0] = s
    head = 0
    tail = 1
    while head < tail:
        u = order[head]
        head += 1
        du = dist[u]
        su = sigma[u]
        for k in range(indptr[u], indptr[u + 1]):
            w = indices[k]
            if dist[w] < 0:
                dist[w] = du + 1
                order[tail] = w
                tail += 1
            if dist[w] == du + 1:
                sigma[w] += su
    return tail


@numba.njit(cache=True, nogil=True)
def _accumulate(indptr, indices, dist, sigma, order, count, delta):
    """Reverse-order dependency accumulation; ``delta`` must be 0 on entry.

    The source itself is never credited.
    """
    for pos in range(count - 1, 0, -1):
        w = order[pos]
        dw = dist[w] - 1
        if dw == 0:
            break
        coeff = (1.0 + delta[w]) / sigma[w]
        for k in range(indptr[w], indptr[w + 1]):
            v = indices[k]
            if dist[v] == dw:
                delta[v] += sigma[v] * coeff


@numba.njit(cache=True, nogil=True)
def _reset(order, count, dist, sigma, delta):
    for pos in range(count):
        u = order[pos]
        dist[u] = -1
        sigma[u] = 0.0
        delta[u] = 0.0


@numba.njit(cache=True, nogil=True)
def _betweenness_range(indptr, indices, start, stop):
    n = len(indptr) - 1
    bc = np.zeros(n)
    dist = -np.ones(n, dtype=np.int64)
    sigma = np.zeros(n)
    delta = np.zeros(n)
    order = np.empty(n, dtype=np.int64)
    for s in range(start, stop):
        count = _bfs(indptr, indices, s, dist, sigma, order)
        _accumulate(indptr, indices, dist, sigma, order, count, delta)
        for pos in range(1, count):
            u = order[pos]
            bc[u] += delta[u]
        _reset(order, count, dist, sigma, delta)
    return bc


@numba.njit(cache=True, nogil=True)
def _dependency_at(indptr, indices, sources, v):
    """``out[t]`` = dependency of ``sources[t]`` on ``v``, one traversal per entry."""
    n = len(indptr) - 1
    out = np.zeros(len(sources))
    dist = -np.ones(n, dtype=np.int64)
    sigma = np.zeros(n)
    delta = np.zeros(n)
    order = np.empty(n, dtype=np.int64)
    for t in range(len(sources)):
        s = sources[t]
        if s == v:
            continue
        count = _bfs(indptr, indices, s, dist, sigma, order)
        if dist[v] >= 0:
            _accumulate(indptr, indices, dist, sigma, order, count, delta)
            out[t] = delta[v]
        _reset(order, count, dist, sigma, delta)
    return out


@numba.njit(cache=True, nogil=True)
def _dependency_table(indptr, indices):
    n = len(indptr) - 1
    table = np.zeros((n, n))
    dist = -np.ones(n, dtype=np.int64)
    sigma = np.zeros(n)
    order = np.empty(n, dtype=np.int64)
    for s in range(n):
        count = _bfs(indptr, indices, s, dist, sigma, order)
        _accumulate(indptr, indices, dist, sigma, order, count, table[s])
        for pos in range(count):
            u = order[pos]
            dist[u] = -1
            sigma[u] = 0.0
    return table


@numba.njit(cache=True, nogil=True)
def _distances(indptr, indices, s):
    n = len(indptr) - 1
    dist = -np.ones(n, dtype=np.int64)
    sigma = np.zeros(n)
    order = np.empty(n, dtype=np.int64)
    _bfs(indptr, indices, s, dist, sigma, order)
    return dist


@dataclass(frozen=True)
class BfsResult:
    """Single-source traversal.

    ``dist`` is float with ``inf`` for unreachable nodes; ``sigma`` holds
    shortest-path counts (exact up to 2**53); ``order`` lists reached nodes in
    nondecreasing distance.
    """

    graph: Graph
    source: int
    dist: np.ndarray
    sigma: np.ndarray
    order: np.ndarray

    @cached_property
    def preds(self) -> list[np.ndarray]:
        """Predecessors of each node on shortest paths from ``source``."""
        out = [np.empty(0, dtype=np.int64)] * self.graph.node_count
        for w in self.order[1:]:
            nb = self.graph.neighbors(w)
            out[w] = nb[self.dist[nb] == self.dist[w] - 1]
        return out


@dataclass(frozen=True)
class DependencyVector:
    source: int
    delta: np.ndarray


def bfs(g: Graph, s: int) -> BfsResult:
    g._check(s)
    n = g.node_count
    dist = -np.ones(n, dtype=np.int64)
    sigma = np.zeros(n)
    order = np.empty(n, dtype=np.int64)
    count = _bfs(g.indptr, g.indices, s, dist, sigma, order)
    fdist = dist.astype(float)
    fdist[dist < 0] = UNREACHED
    return BfsResult(g, s, fdist, sigma, order[:count].copy())


def dependencies(g: Graph, r: BfsResult) -> DependencyVector:
    """Dependency of ``r.source`` on every node, by backward accumulation."""
    if r.graph is not g and r.graph != g:
        raise ValueError("traversal belongs to a different graph")
    idist = np.where(np.isinf(r.dist), -1, r.dist).astype(np.int64)
    delta = np.zeros(g.node_count)
    _accumulate(g.indptr, g.indices, idist, r.sigma, r.order, len(r.order), delta)
    return DependencyVector(r.source, delta)


def exact_betweenness(g: Graph, threads: int = 1) -> np.ndarray:
    """Brandes betweenness of every node (ordered pairs, unnormalised)."""
    n = g.node_count
    if threads <= 1:
        return _betweenness_range(g.indptr, g.indices, 0, n)
    bounds = np.linspace(0, n, threads + 1).astype(int)
    with ThreadPoolExecutor(threads) as pool:
        parts = pool.map(lambda ab: _betweenness_range(g.indptr, g.indices, ab[0], ab[1]),
                         zip(bounds[:-1], bounds[1:]))
        return np.sum(list(parts), axis=0)


def exact_betweenness_single(g: Graph, v: int) -> float:
    """Exact score of one node; costs a full all-sources pass."""
    return float(dependencies_on(g, v).sum())


def dependencies_on(g: Graph, v: int) -> np.ndarray:
    """``out[i]`` = dependency of source ``i`` on ``v``, for every node ``i``."""
    g._check(v)
    return _dependency_at(g.indptr, g.indices, np.arange(g.node_count), v)


def dependency_table(g: Graph) -> np.ndarray:
    """Dense ``(n, n)`` table with ``table[s, v]`` the dependency of ``s`` on ``v``.

    Column sums are the betweenness scores.  Memory is ``8 n**2`` bytes, so
    this is meant for graphs of a few thousand nodes.
    """
    return _dependency_table(g.indptr, g.indices)


def dependency_at(g: Graph, sources, v: int) -> np.ndarray:
    """Dependency of each listed source on ``v`` (one traversal per listed source)."""
    return _dependency_at(g.indptr, g.indices, np.asarray(sources, dtype=np.int64), v)


def distances(g: Graph, s: int) -> np.ndarray:
    """Hop distances from ``s`` with -1 marking unreachable nodes."""
    g._check(s)
    return _distances(g.indptr, g.indices, s)
