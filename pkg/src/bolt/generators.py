"""Erdős–Rényi and Barabási–Albert generators.

Both are pure functions of their parameters and an integer seed.  Output
goes through the same cleaning as file input, so isolated ER nodes are
dropped and the returned node count can be below ``n``.
"""

from __future__ import annotations

import math

import numpy as np

from .graph import Graph, from_index_edges


def _pair_from_index(k: np.ndarray):
    """Invert ``k = j (j - 1) / 2 + i`` for ``0 <= i < j``."""
    j = np.floor((1.0 + np.sqrt(1.0 + 8.0 * k)) / 2.0).astype(np.int64)
    # float rounding can be off by one near perfect squares
    j -= (j * (j - 1) // 2) > k
    j += ((j + 1) * j // 2) <= k
    i = k - j * (j - 1) // 2
    return i, j


def generate_er(n: int, p: float, seed: int) -> Graph:
    """G(n, p): every unordered pair is an edge independently with probability ``p``.

    Uses geometric skips over the ``n (n - 1) / 2`` pair indices, so the cost
    is proportional to the number of edges rather than pairs.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    if not 0.0 < p <= 1.0:
        raise ValueError("p must lie in (0, 1]")
    rng = np.random.default_rng(seed)
    total = n * (n - 1) // 2
    chunk = max(1024, int(1.2 * p * total) + 64)
    picks = []
    pos = -1
    while True:
        gaps = rng.geometric(p, size=chunk)
        idx = pos + np.cumsum(gaps)
        picks.append(idx[idx < total])
        if idx[-1] >= total:
            break
        pos = idx[-1]
    i, j = _pair_from_index(np.concatenate(picks))
    return from_index_edges(n, i, j)


def generate_ba(n: int, k: int, seed: int) -> Graph:
    """Preferential attachment started from the clique ``K_k``.

    Each arriving node links to ``k`` distinct existing nodes drawn with
    probability proportional to their current degree (urn of edge endpoints,
    duplicates rejected).  The result has ``k (k - 1) / 2 + (n - k) k`` edges.
    """
    if not n > k >= 1:
        raise ValueError("need n > k >= 1")
    rng = np.random.default_rng(seed)
    m_total = k * (k - 1) // 2 + (n - k) * k
    src = np.empty(m_total, dtype=np.int64)
    dst = np.empty(m_total, dtype=np.int64)
    urn = np.empty(2 * m_total, dtype=np.int64)
    e = 0
    for a in range(k):
        for b in range(a + 1, k):
            src[e], dst[e] = a, b
            urn[2 * e], urn[2 * e + 1] = a, b
            e += 1
    for t in range(k, n):
        chosen = []
        while len(chosen) < k:
            # an empty urn only happens for k == 1 with a single seed node
            w = int(urn[rng.integers(2 * e)]) if e else int(rng.integers(t))
            if w not in chosen:
                chosen.append(w)
        for w in chosen:
            src[e], dst[e] = t, w
            urn[2 * e], urn[2 * e + 1] = t, w
            e += 1
    return from_index_edges(n, src, dst)


def er_probability_for_x(n: int, x: float) -> float:
    """Edge probability ``n**(1/x) / n`` of the ``ER_n_x`` family."""
    return n ** (1.0 / x) / n


def ba_k_for_x(n: int, x: float) -> int:
    """Attachment count of the ``BA_n_x`` family: ``n**(1/x) / 2`` rounded up.

    Rounding up reproduces the published roster (``BA_1k_2`` has k = 16,
    ``BA_1k_8`` has k = 2).
    """
    # round first so that e.g. 1000**(1/3) = 9.999999999999998 gives 5
    return max(1, math.ceil(round(n ** (1.0 / x), 9) / 2))
