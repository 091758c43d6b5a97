import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bolt.analysis import (dependency_ratio, empirical_levels, expected_dependency,
                           predict_levels, second_level_closed_form)
from bolt.generators import generate_er
from bolt.sampling import eddbm_model, level_partition

# G(1000, 0.01) predictions, frozen
ALPHA_1K = [1.0, 9.99, 98.802099, 879.54409165, 10.66380935]
ALPHA_EXACT_1K = [1.0, 9.99, 94.47718496, 548.41675645, 344.71811603]


@pytest.fixture(scope="module")
def er_profile():
    return predict_levels(1000, 0.01)


def test_first_levels(er_profile):
    assert er_profile.alpha[1] == pytest.approx(9.99)
    assert er_profile.lam == pytest.approx(9.99)
    assert er_profile.alpha_exact[2] == pytest.approx(second_level_closed_form(1000, 0.01))
    assert second_level_closed_form(1000, 0.01) == pytest.approx(94.477185, abs=1e-5)


def test_frozen_profile(er_profile):
    np.testing.assert_allclose(er_profile.alpha, ALPHA_1K, rtol=1e-8)
    np.testing.assert_allclose(er_profile.alpha_exact, ALPHA_EXACT_1K, rtol=1e-8)


def test_recurrence_and_exact_form_disagree_past_the_linear_regime(er_profile):
    # level 3 of G(1000, 0.01): p * alpha_2 ~ 1, so the binomial expansion fails
    a, b = er_profile.alpha[3], er_profile.alpha_exact[3]
    assert abs(a - b) / b > 0.10


@settings(max_examples=60, deadline=None)
@given(st.integers(200, 5000), st.floats(0.0005, 0.05))
def test_profile_invariants(n, p):
    prof = predict_levels(n, p)
    c = prof.c
    assert prof.alpha.sum() <= n + 1e-9
    assert np.all(np.diff(c) <= 1e-12)
    assert np.all((c[:-1] > -1e-12) & (c[:-1] <= 1.0))
    # recurrence and exploration form agree while p * alpha stays small
    for m in range(1, prof.last_level):
        if p * prof.alpha[m] > 0.05 or prof.alpha[m + 1] < 10:
            break
        assert prof.alpha[m + 1] == pytest.approx(prof.alpha_exact[m + 1], rel=0.10)


def test_expected_dependency_values(er_profile):
    prof, c, lam = er_profile, er_profile.c, er_profile.lam
    l = prof.last_level
    assert expected_dependency(prof, l, l) == 0.0
    assert expected_dependency(prof, l - 1, l) == pytest.approx(c[l] * lam)
    assert expected_dependency(prof, l - 2, l) == pytest.approx(c[l - 1] * lam * (1 + c[l] * lam))
    with pytest.raises(ValueError):
        expected_dependency(prof, 0, l)


def _nested(c, lam, level, last):
    # direct nested product, written out independently of the loop in the package
    if level == last:
        return 0.0
    return c[level + 1] * lam * (1.0 + _nested(c, lam, level + 1, last))


def test_ratio_matches_nested_evaluation():
    for n, p in [(1000, 0.01), (2000, 0.004), (500, 0.02)]:
        prof = predict_levels(n, p)
        c, lam, l = prof.c, prof.lam, prof.last_level
        for k in range(2, l):
            want = _nested(c, lam, l - k, l) / _nested(c, lam, l - k + 1, l)
            assert dependency_ratio(prof, k) == pytest.approx(want, rel=1e-12)


def test_ratio_k2_closed_form(er_profile):
    c, lam, l = er_profile.c, er_profile.lam, er_profile.last_level
    assert dependency_ratio(er_profile, 2) == pytest.approx(c[l - 1] / c[l] * (1 + c[l] * lam))


def test_ratio_k1_divides_by_zero(er_profile):
    with pytest.raises(ZeroDivisionError):
        dependency_ratio(er_profile, 1)
    with pytest.raises(ValueError):
        dependency_ratio(er_profile, er_profile.last_level)


def test_inner_levels_ratio_near_average_degree():
    # away from the last levels c ~ 1 and the ratio approaches lam, which is
    # what the exponential weighting in the sampler assumes
    prof = predict_levels(100000, 0.0001)
    l = prof.last_level
    assert dependency_ratio(prof, l - 1) == pytest.approx(prof.lam, rel=0.15)


def test_eddbm_level_masses_follow_average_degree():
    g = generate_er(1000, 0.01, 7)
    lam = g.average_degree()
    dist = eddbm_model(g, 0)
    part = level_partition(g, 0)
    per_node = [dist.prob[lv].sum() / len(lv) for lv in part.levels]
    for a, b in zip(per_node, per_node[1:]):
        assert a / b == pytest.approx(lam, rel=1e-9)


def test_empirical_levels_shape():
    mean, std = empirical_levels(300, 0.02, seeds=range(3), sources_per_graph=5)
    assert mean[0] == 1.0 and std[0] == 0.0
    assert mean.sum() <= 300
    assert mean[1] == pytest.approx(299 * 0.02, rel=0.5)
