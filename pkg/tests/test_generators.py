import numpy as np
import pytest

from bolt.generators import (_pair_from_index, ba_k_for_x, er_probability_for_x,
                             generate_ba, generate_er)


def test_pair_index_inverse_is_exact():
    n = 300
    i, j = _pair_from_index(np.arange(n * (n - 1) // 2))
    ii, jj = np.triu_indices(n, 1)
    got = sorted(zip(i.tolist(), j.tolist()))
    assert got == sorted(zip(ii.tolist(), jj.tolist()))


def test_er_complete_when_p_one():
    g = generate_er(12, 1.0, 0)
    assert g.node_count == 12 and g.edge_count == 66


def test_er_edge_count_mean_within_three_sd():
    n, p, runs = 1000, 0.01, 24
    counts = np.array([generate_er(n, p, s).edge_count for s in range(runs)])
    pairs = n * (n - 1) / 2
    mean, sd = pairs * p, np.sqrt(pairs * p * (1 - p))
    assert abs(counts.mean() - mean) <= 3 * sd / np.sqrt(runs)
    # published roster: ER_1k_3 has about 5005 edges and average degree 10.01
    assert counts.mean() == pytest.approx(5005, rel=0.05)


def test_er_1k_2_edges():
    counts = [generate_er(1000, 0.03162278, s).edge_count for s in range(20)]
    assert np.mean(counts) == pytest.approx(15848, rel=0.05)


def test_er_average_degree_1k_3():
    degs = [generate_er(1000, 0.01, s).average_degree() for s in range(20)]
    assert np.mean(degs) == pytest.approx(10.01, rel=0.05)


def test_er_determinism():
    a, b = generate_er(400, 0.02, 99), generate_er(400, 0.02, 99)
    assert a == b
    assert generate_er(400, 0.02, 100) != a


@pytest.mark.parametrize("n,k", [(1000, 5), (1000, 2), (3, 2), (50, 1), (200, 7)])
def test_ba_edge_count(n, k):
    g = generate_ba(n, k, 4)
    assert g.edge_count == k * (k - 1) // 2 + (n - k) * k
    assert g.node_count == n


@pytest.mark.parametrize("k,published", [(5, 4975), (2, 1996)])
def test_ba_edges_match_roster(k, published):
    # the roster counts (n - k) k edges; the seed clique adds k (k - 1) / 2 more
    assert generate_ba(1000, k, 0).edge_count == pytest.approx(published, rel=0.01)


def test_ba_triangle():
    g = generate_ba(3, 2, 0)
    assert sorted(map(tuple, g.edge_array().tolist())) == [(0, 1), (0, 2), (1, 2)]


def test_ba_average_degree_1k_3():
    assert generate_ba(1000, 5, 1).average_degree() == pytest.approx(9.95, rel=0.01)


def test_ba_heavy_tail_grows_with_n():
    small = np.mean([generate_ba(200, 3, s).degrees.max() for s in range(5)])
    large = np.mean([generate_ba(5000, 3, s).degrees.max() for s in range(5)])
    assert large > 2 * small


def test_ba_determinism():
    assert generate_ba(500, 3, 8) == generate_ba(500, 3, 8)


def test_bad_parameters():
    with pytest.raises(ValueError):
        generate_er(1, 0.5, 0)
    with pytest.raises(ValueError):
        generate_er(10, 0.0, 0)
    with pytest.raises(ValueError):
        generate_ba(5, 5, 0)


def test_roster_parameters():
    assert er_probability_for_x(1000, 3) == pytest.approx(0.01)
    assert er_probability_for_x(1000, 2) == pytest.approx(0.03162278)
    assert [ba_k_for_x(1000, x) for x in (2, 3, 4, 8)] == [16, 5, 3, 2]
    assert [ba_k_for_x(10000, x) for x in (2, 3, 4, 8)] == [50, 11, 5, 2]
