import time

import numpy as np
import pytest
from hypothesis import given, settings

from bolt.estimator import estimate, estimate_node, rng_for
from bolt.generators import generate_ba, generate_er
from bolt.sampling import eddbm_model, make_model, optimal_model, uniform_model
from bolt.shortest_paths import exact_betweenness
from strategies import small_graphs


@pytest.mark.parametrize("seed", range(10))
def test_optimal_single_draw_is_exact_on_path(path3, seed):
    res = estimate(path3, optimal_model(path3, 1), 1, T=1, seed=seed)
    assert res.estimate == 2.0 and res.samples == 1


@pytest.mark.parametrize("model", ["uniform", "dbm", "eddbm", "optimal"])
def test_leaf_estimates_zero(star4, model):
    for T in (1, 5, 25):
        assert estimate_node(star4, 2, model, T, seed=T).estimate == 0.0


def test_zero_marker_consumes_no_samples(path3):
    res = estimate(path3, optimal_model(path3, 0), 0, T=25, seed=1)
    assert (res.estimate, res.samples) == (0.0, 0)


def test_mismatch_rejected(path3, grid):
    with pytest.raises(ValueError):
        estimate(path3, uniform_model(path3, 0), 1, 5, seed=0)
    with pytest.raises(ValueError):
        estimate(grid, uniform_model(path3, 1), 1, 5, seed=0)
    with pytest.raises(ValueError):
        estimate(path3, uniform_model(path3, 1), 1, 0, seed=0)


def test_result_fields(grid):
    res = estimate_node(grid, 4, "eddbm", 7, seed=5)
    assert (res.target, res.samples, res.seed, res.model) == (4, 7, 5, "eddbm")
    assert res.estimate >= 0


def test_seeded_determinism_and_threads():
    g = generate_ba(400, 3, 2)
    dist = eddbm_model(g, 10)
    a = estimate(g, dist, 10, 40, seed=123)
    b = estimate(g, dist, 10, 40, seed=123)
    c = estimate(g, dist, 10, 40, seed=123, threads=4)
    assert a.estimate == b.estimate
    assert c.estimate == pytest.approx(a.estimate, rel=1e-12)
    assert estimate(g, dist, 10, 40, seed=124).estimate != a.estimate


def test_nested_seeds():
    a = rng_for((1, (2, 3))).random()
    assert a == rng_for((1, 2, 3)).random()
    assert a != rng_for((1, 2, 4)).random()


@settings(max_examples=60, deadline=None)
@given(small_graphs(max_nodes=20))
def test_optimal_single_draw_is_exact(g):
    bc = exact_betweenness(g)
    for v in np.flatnonzero(bc > 0):
        res = estimate(g, optimal_model(g, v), v, T=1, seed=int(v))
        assert res.estimate == pytest.approx(bc[v], rel=1e-9)


@pytest.mark.parametrize("model", ["uniform", "dbm", "eddbm"])
def test_unbiased_small(model):
    g = generate_er(40, 0.12, 3)
    bc = exact_betweenness(g)
    v = int(np.argsort(bc)[len(bc) // 2])
    dist = make_model(model, g, v)
    runs = np.array([estimate(g, dist, v, 5, seed=(9, r)).estimate for r in range(2000)])
    se = runs.std(ddof=1) / np.sqrt(len(runs))
    assert abs(runs.mean() - bc[v]) <= 4 * se


def test_cost_grows_linearly_in_samples():
    g = generate_er(2000, 0.005, 1)
    dist = eddbm_model(g, 0)
    estimate(g, dist, 0, 5, seed=0)

    def timed(T):
        t0 = time.perf_counter()
        estimate(g, dist, 0, T, seed=0)
        return time.perf_counter() - t0

    small = min(timed(50) for _ in range(3))
    large = min(timed(400) for _ in range(3))
    # 8x the samples; allow generous slack for timer noise
    assert 3 < large / small < 20


def test_string_seed_rejected():
    from bolt.estimator import rng_for
    with pytest.raises(TypeError):
        rng_for(("abc", 1))
