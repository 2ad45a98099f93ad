"""Rank-test statistics against hand-rank oracles and library cross-checks.

scipy appears here only as an independent oracle; the package itself never
imports it.
"""

import math
import random

import pytest
import scipy.special
import scipy.stats
from hypothesis import given, strategies as st

from letterstats.stats import (
    chi_square_sf,
    dunn_pairwise,
    kruskal_wallis,
    normal_sf,
    sidak_adjust,
)

# hand-rank oracle values, recomputed with mpmath/quadrature before freezing
CHI2_SF_3857142_DF3 = 0.2773091545177459
DUNN_Z_123_456 = -1.9639610121239314  # (2 - 5) / sqrt((6*7/12) * (2/3))
DUNN_P_RAW_123_456 = 0.04953461343562674


def test_h_symmetric_groups_is_zero():
    res = kruskal_wallis([("a", [1, 4]), ("b", [2, 3])])
    assert res.H == pytest.approx(0.0, abs=1e-12)


def test_h_123_456():
    # ranks 1..6, R1 = 6, R2 = 15 -> H = 27/7
    res = kruskal_wallis([("lo", [1, 2, 3]), ("hi", [4, 5, 6])])
    assert res.H == pytest.approx(27 / 7, abs=1e-9)
    assert res.df == 1
    assert res.p == pytest.approx(0.04953461343562674, abs=1e-9)


def test_h_12_34():
    # ranks 1..4, R1 = 3, R2 = 7 -> H = 2.4
    res = kruskal_wallis([("a", [1, 2]), ("b", [3, 4])])
    assert res.H == pytest.approx(2.4, abs=1e-12)


def test_h_matches_scipy_with_ties():
    rng = random.Random(31)
    for _ in range(50):
        groups = [
            (f"g{i}", [rng.choice([1.0, 2.0, 2.5, 3.0, 7.0]) for _ in range(rng.randint(3, 8))])
            for i in range(rng.randint(2, 5))
        ]
        if len({v for _, vs in groups for v in vs}) == 1:
            continue
        ours = kruskal_wallis(groups)
        theirs = scipy.stats.kruskal(*[vs for _, vs in groups])
        assert ours.H == pytest.approx(theirs.statistic, rel=1e-12, abs=1e-12)
        assert ours.p == pytest.approx(theirs.pvalue, rel=1e-9, abs=1e-12)


def test_degenerate_data_flagged():
    res = kruskal_wallis([("a", [5.0, 5.0]), ("b", [5.0, 5.0])])
    assert res.degenerate
    assert res.H == 0.0
    assert res.p == 1.0
    pairs = dunn_pairwise([("a", [5.0, 5.0]), ("b", [5.0, 5.0])])
    assert all(c.degenerate and c.z == 0.0 and c.p_adjusted == 1.0 for c in pairs)


def test_validation_errors():
    with pytest.raises(ValueError):
        kruskal_wallis([("only", [1, 2, 3])])
    with pytest.raises(ValueError):
        kruskal_wallis([("a", []), ("b", [1, 2])])
    with pytest.raises(ValueError):
        kruskal_wallis([("a", [1]), ("b", [2])])


# half-integer lattice values: distinct inputs stay distinct (and ties stay
# ties) under each transform below, so rank invariance must be bit-exact;
# free-range floats would let the *transform* itself collapse neighbors
lattice = st.integers(-1000, 1000).map(lambda n: n / 2.0)


@given(
    st.lists(
        st.lists(lattice, min_size=2, max_size=6),
        min_size=2,
        max_size=4,
    )
)
def test_rank_invariance_under_increasing_transforms(data):
    groups = [(f"g{i}", vs) for i, vs in enumerate(data)]
    base = kruskal_wallis(groups)
    base_pairs = dunn_pairwise(groups)
    for f in (lambda x: 3.0 * x + 7.0, math.atan, lambda x: x**3):
        transformed = [(n, [f(v) for v in vs]) for n, vs in groups]
        res = kruskal_wallis(transformed)
        assert res.H == base.H  # exact: ranks are untouched
        assert res.p == base.p
        for before, after in zip(base_pairs, dunn_pairwise(transformed)):
            assert after.z == before.z
            assert after.p_adjusted == before.p_adjusted


def test_h_invariant_under_group_order_and_within_group_permutation():
    groups = [("a", [3.0, 1.0, 9.0]), ("b", [2.0, 2.0]), ("c", [8.0, 4.0, 4.0])]
    base = kruskal_wallis(groups).H
    assert kruskal_wallis(list(reversed(groups))).H == base
    shuffled = [("a", [9.0, 3.0, 1.0]), ("b", [2.0, 2.0]), ("c", [4.0, 8.0, 4.0])]
    assert kruskal_wallis(shuffled).H == base


def test_dunn_identical_groups():
    pairs = dunn_pairwise([("a", [1.0, 2.0, 3.0]), ("b", [1.0, 2.0, 3.0])])
    assert len(pairs) == 1
    assert pairs[0].z == pytest.approx(0.0, abs=1e-12)
    assert pairs[0].p_raw == pytest.approx(1.0, abs=1e-12)
    assert pairs[0].p_adjusted == pytest.approx(1.0, abs=1e-12)


def test_dunn_pair_count():
    groups = [(f"g{i}", [float(i), float(i) + 0.5]) for i in range(4)]
    assert len(dunn_pairwise(groups)) == 6


def test_dunn_123_456_hand_oracle():
    pairs = dunn_pairwise([("lo", [1, 2, 3]), ("hi", [4, 5, 6])])
    assert pairs[0].z == pytest.approx(DUNN_Z_123_456, abs=1e-12)
    assert pairs[0].p_raw == pytest.approx(DUNN_P_RAW_123_456, abs=1e-10)
    assert pairs[0].p_adjusted == pairs[0].p_raw  # m = 1


def test_dunn_sign_flips_with_pair_order():
    g = [("a", [1.0, 2.0]), ("b", [3.0, 4.0]), ("c", [5.0, 6.0])]
    pairs = {p.pair: p.z for p in dunn_pairwise(g)}
    g2 = [("c", [5.0, 6.0]), ("b", [3.0, 4.0]), ("a", [1.0, 2.0])]
    pairs2 = {p.pair: p.z for p in dunn_pairwise(g2)}
    assert pairs[("a", "b")] == pytest.approx(-pairs2[("b", "a")], abs=1e-12)


def test_dunn_adjusted_dominates_raw():
    rng = random.Random(5)
    groups = [(f"g{i}", [rng.random() for _ in range(5)]) for i in range(4)]
    for cmp in dunn_pairwise(groups):
        assert cmp.p_adjusted >= cmp.p_raw
        expected = 1 - (1 - cmp.p_raw) ** 6
        assert cmp.p_adjusted == pytest.approx(expected, abs=1e-12)


def test_sidak_values():
    assert sidak_adjust(0.05, 1) == pytest.approx(0.05, abs=1e-15)
    assert sidak_adjust(0.0, 6) == 0.0
    assert sidak_adjust(0.01, 6) == pytest.approx(1 - 0.99**6, abs=1e-12)
    assert sidak_adjust(1.0, 3) == 1.0


def test_sidak_monotone():
    prev = 0.0
    for p in [0.001, 0.01, 0.05, 0.2, 0.7]:
        cur = sidak_adjust(p, 6)
        assert cur >= prev
        assert sidak_adjust(p, 7) >= cur
        prev = cur


def test_sidak_validation():
    with pytest.raises(ValueError):
        sidak_adjust(1.5, 2)
    with pytest.raises(ValueError):
        sidak_adjust(0.5, 0)


def test_chi_square_sf_basics():
    assert chi_square_sf(0.0, 1) == 1.0
    assert chi_square_sf(0.0, 7) == 1.0
    assert chi_square_sf(2 * math.log(2), 2) == pytest.approx(0.5, abs=1e-10)
    assert chi_square_sf(3.857142, 3) == pytest.approx(CHI2_SF_3857142_DF3, abs=1e-10)


def test_chi_square_sf_against_scipy_grid():
    for df in (1, 2, 3, 5, 10, 30, 100):
        for x in (0.01, 0.5, 1.0, 2.5, 5.0, 10.0, 25.0, 80.0, 200.0):
            ours = chi_square_sf(x, df)
            theirs = scipy.special.gammaincc(df / 2.0, x / 2.0)
            assert ours == pytest.approx(theirs, abs=1e-10)


def test_chi_square_sf_monotone_in_x():
    for df in (1, 4, 9):
        values = [chi_square_sf(x, df) for x in [0.0, 0.1, 0.5, 1, 2, 4, 8, 16, 32]]
        assert all(a >= b for a, b in zip(values, values[1:]))


def test_chi_square_sf_validation():
    with pytest.raises(ValueError):
        chi_square_sf(-1.0, 2)
    with pytest.raises(ValueError):
        chi_square_sf(1.0, 0)


def test_normal_sf_values():
    assert normal_sf(0.0) == 0.5
    assert normal_sf(1.959964) == pytest.approx(0.025, abs=1e-6)
    assert normal_sf(-8.0) == pytest.approx(1.0, abs=1e-10)


def test_normal_sf_reflection_and_monotone():
    zs = [-6.0, -3.3, -1.0, -0.2, 0.0, 0.4, 1.7, 2.8, 5.5]
    for z in zs:
        assert normal_sf(z) + normal_sf(-z) == pytest.approx(1.0, abs=1e-12)
    values = [normal_sf(z) for z in zs]
    assert all(a >= b for a, b in zip(values, values[1:]))


def test_normal_sf_against_scipy():
    for z in [-4.0, -1.5, 0.0, 0.33, 1.0, 2.5, 6.0]:
        assert normal_sf(z) == pytest.approx(scipy.stats.norm.sf(z), abs=1e-12)
