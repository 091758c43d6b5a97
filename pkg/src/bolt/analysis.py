"""BFS level-size predictions for G(n, p) and the dependency ratios built on them.

``predict_levels`` gives the expected number of nodes at each BFS level
from a random root, both by the linearised recurrence

    alpha[m+1] = n p (1 - sum(alpha[:m+1]) / n) alpha[m]

and by the exact exploration form

    alpha[m+1] = (n - sum(alpha[:m+1])) (1 - (1 - p) ** alpha[m]).

With ``c[m] = 1 - sum(alpha[:m]) / n`` and ``lam`` the average degree, the
expected dependency of the root on a node at level ``j`` of a traversal whose
last level is ``l`` obeys ``E[l] = 0`` and ``E[j] = c[j+1] lam (1 + E[j+1])``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .generators import generate_er
from .shortest_paths import distances

MIN_LEVEL_SIZE = 0.5


@dataclass(frozen=True)
class LevelProfile:
    n: int
    p: float
    alpha: np.ndarray        # recurrence prediction, alpha[0] = 1
    alpha_exact: np.ndarray  # exploration form, same length as alpha
    lam: float

    @property
    def c(self) -> np.ndarray:
        """``c[m] = 1 - sum(alpha[:m]) / n``; ``c[0]`` is 1 by convention."""
        return 1.0 - np.concatenate([[0.0], np.cumsum(self.alpha)]) / self.n

    @property
    def last_level(self) -> int:
        return len(self.alpha) - 1

    def phi(self, k: int) -> float:
        """Nested correction factor for the level pair ``(l - k, l - k + 1)``."""
        return expected_dependency(self, self.last_level - k + 1, self.last_level) / self.lam


def predict_levels(n: int, p: float, max_levels: int = 64) -> LevelProfile:
    """Expected BFS level sizes in G(n, p), stopped once a level drops below half a node."""
    if n < 2 or not 0.0 < p < 1.0:
        raise ValueError("need n >= 2 and 0 < p < 1")
    alpha = [1.0, (n - 1) * p]
    exact = [1.0, (n - 1) * p]
    while len(alpha) <= max_levels:
        seen = sum(alpha)
        nxt = n * p * (1.0 - seen / n) * alpha[-1]
        # the linearised form can overshoot the nodes that are left
        nxt = min(max(nxt, 0.0), n - seen)
        if nxt < MIN_LEVEL_SIZE:
            break
        seen_x = sum(exact)
        exact.append(max(n - seen_x, 0.0) * (1.0 - (1.0 - p) ** exact[-1]))
        alpha.append(nxt)
    return LevelProfile(n, p, np.array(alpha), np.array(exact), (n - 1) * p)


def second_level_closed_form(n: int, p: float) -> float:
    """``alpha[2] = (n - 1)(1 - p)(1 - (1 - p)**((n - 1) p))`` from the exploration sum."""
    return (n - 1) * (1 - p) * (1 - (1 - p) ** ((n - 1) * p))


def expected_dependency(profile: LevelProfile, level_of_v: int, last_level: int) -> float:
    """Expected dependency of the root on a node at ``level_of_v``.

    Zero at ``last_level``; ``c[l] lam`` one level up; ``c[l-1] lam (1 + c[l] lam)``
    two levels up, and so on.
    """
    if not 1 <= level_of_v <= last_level:
        raise ValueError(f"level {level_of_v} outside [1, {last_level}]")
    c = profile.c
    if last_level >= len(c):
        raise ValueError(f"profile has no c[{last_level}]")
    e = 0.0
    for j in range(last_level - 1, level_of_v - 1, -1):
        e = c[j + 1] * profile.lam * (1.0 + e)
    return e


def dependency_ratio(profile: LevelProfile, k: int) -> float:
    """Expected dependency at level ``l - k`` over that at ``l - k + 1``.

    Equals ``c[l-k+1] (1/phi + lam)``.  ``k = 1`` puts the denominator on the
    last level, where the dependency is zero; that raises ``ZeroDivisionError``.
    """
    l = profile.last_level
    if not 1 <= k <= l - 1:
        raise ValueError(f"k must lie in [1, {l - 1}]")
    phi = profile.phi(k)
    if phi == 0.0:
        raise ZeroDivisionError("phi is zero: the upper level is the last level")
    return profile.c[l - k + 1] * (1.0 / phi + profile.lam)


def empirical_levels(n: int, p: float, seeds, sources_per_graph: int = 20,
                     max_levels: int | None = None):
    """Mean and standard deviation of BFS level sizes over random G(n, p) roots.

    Returns ``(mean, std)`` arrays indexed by level.  Nodes isolated in a
    sample graph are dropped by the generator, so roots are never isolated.
    """
    rows = []
    for seed in seeds:
        g = generate_er(n, p, seed)
        rng = np.random.default_rng(seed)
        for s in rng.choice(g.node_count, size=min(sources_per_graph, g.node_count),
                            replace=False):
            d = distances(g, int(s))
            rows.append(np.bincount(d[d >= 0]))
    width = max(len(r) for r in rows) if max_levels is None else max_levels + 1
    table = np.zeros((len(rows), width))
    for i, r in enumerate(rows):
        table[i, :min(len(r), width)] = r[:width]
    return table.mean(axis=0), table.std(axis=0)
