"""Nonparametric significance tests for grouped distance data.

Implements the Kruskal-Wallis one-way analysis of variance by ranks (with
the standard tie correction) and Dunn's pairwise rank-sum z test with Sidak
family-wise adjustment, plus the two tail functions they need.

All tests are rank-based: applying any strictly increasing function to the
pooled data leaves every statistic unchanged.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

_SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class KruskalWallisResult:
    H: float
    df: int
    p: float
    #: True when all pooled values are identical; H and p are then reported
    #: as 0 and 1 rather than the undefined tie-corrected ratio.
    degenerate: bool = False


@dataclass(frozen=True)
class PairwiseComparison:
    pair: tuple[str, str]
    z: float
    p_raw: float
    p_adjusted: float
    degenerate: bool = False


def _midranks(pooled: list[float]) -> tuple[list[float], float]:
    """Assign mid-ranks to the pooled sample.

    Returns (rank per original position, tie term sum(t^3 - t) over tie
    groups).
    """
    order = sorted(range(len(pooled)), key=lambda i: pooled[i])
    ranks = [0.0] * len(pooled)
    tie_term = 0.0
    i = 0
    while i < len(order):
        j = i
        while j + 1 < len(order) and pooled[order[j + 1]] == pooled[order[i]]:
            j += 1
        # positions i..j share the same value; mid-rank is their average rank
        mid = (i + j) / 2.0 + 1.0
        for k in range(i, j + 1):
            ranks[order[k]] = mid
        t = j - i + 1
        tie_term += t**3 - t
        i = j + 1
    return ranks, tie_term


def _validate_groups(groups: list[tuple[str, list[float]]]) -> None:
    if len(groups) < 2:
        raise ValueError("need at least 2 groups")
    if any(len(values) == 0 for _, values in groups):
        raise ValueError("every group must be nonempty")
    if sum(len(values) for _, values in groups) < 3:
        raise ValueError("need a total of at least 3 observations")


def kruskal_wallis(groups: list[tuple[str, list[float]]]) -> KruskalWallisResult:
    """Tie-corrected Kruskal-Wallis H over k independent groups.

    H = [12/(N(N+1)) * sum(R_g^2/n_g) - 3(N+1)] / (1 - sum(t^3-t)/(N^3-N)),
    with mid-ranks over the pooled sample and p from the chi-square survival
    function on k-1 degrees of freedom.
    """
    _validate_groups(groups)
    pooled: list[float] = []
    sizes = []
    for _, values in groups:
        pooled.extend(float(v) for v in values)
        sizes.append(len(values))
    n_total = len(pooled)
    df = len(groups) - 1

    ranks, tie_term = _midranks(pooled)
    correction = 1.0 - tie_term / (n_total**3 - n_total)
    if correction == 0.0:
        return KruskalWallisResult(H=0.0, df=df, p=1.0, degenerate=True)

    # fsum keeps H bit-identical under any permutation of the groups
    terms = []
    offset = 0
    for n_g in sizes:
        r_g = math.fsum(ranks[offset : offset + n_g])
        terms.append(r_g**2 / n_g)
        offset += n_g
    h = 12.0 / (n_total * (n_total + 1)) * math.fsum(terms) - 3.0 * (n_total + 1)
    h /= correction
    h = max(h, 0.0)
    return KruskalWallisResult(H=h, df=df, p=chi_square_sf(h, df))


def dunn_pairwise(groups: list[tuple[str, list[float]]]) -> list[PairwiseComparison]:
    """Dunn's rank-sum z test for every unordered pair of groups.

    z_ij = (Rbar_i - Rbar_j) / sqrt((N(N+1)/12 - sum(t^3-t)/(12(N-1)))
                                    * (1/n_i + 1/n_j))
    with two-sided normal p-values, Sidak-adjusted for m = k(k-1)/2
    comparisons.
    """
    _validate_groups(groups)
    pooled: list[float] = []
    sizes = []
    names = []
    for name, values in groups:
        pooled.extend(float(v) for v in values)
        sizes.append(len(values))
        names.append(name)
    n_total = len(pooled)

    ranks, tie_term = _midranks(pooled)
    mean_ranks = []
    offset = 0
    for n_g in sizes:
        mean_ranks.append(math.fsum(ranks[offset : offset + n_g]) / n_g)
        offset += n_g

    variance = n_total * (n_total + 1) / 12.0 - tie_term / (12.0 * (n_total - 1))
    k = len(groups)
    m = k * (k - 1) // 2

    out = []
    for i in range(k):
        for j in range(i + 1, k):
            if variance <= 0.0:
                out.append(
                    PairwiseComparison(
                        (names[i], names[j]), 0.0, 1.0, 1.0, degenerate=True
                    )
                )
                continue
            se = math.sqrt(variance * (1.0 / sizes[i] + 1.0 / sizes[j]))
            z = (mean_ranks[i] - mean_ranks[j]) / se
            p_raw = min(1.0, 2.0 * normal_sf(abs(z)))
            out.append(
                PairwiseComparison((names[i], names[j]), z, p_raw, sidak_adjust(p_raw, m))
            )
    return out


def sidak_adjust(p_raw: float, m: int) -> float:
    """Family-wise adjustment 1 - (1 - p)^m, clamped to [0, 1]."""
    if not 0.0 <= p_raw <= 1.0:
        raise ValueError("p_raw must be within [0, 1]")
    if m < 1:
        raise ValueError("m must be a positive integer")
    if m == 1:
        # exact identity; 1 - (1 - p) would reintroduce rounding error
        return p_raw
    return min(1.0, max(0.0, 1.0 - (1.0 - p_raw) ** m))


def normal_sf(z: float) -> float:
    """Standard normal survival function 1 - Phi(z)."""
    return 0.5 * math.erfc(z / _SQRT2)


# --- chi-square tail via the regularized incomplete gamma ----------------
#
# sf(x, df) = Q(df/2, x/2).  Series expansion of P for x < a + 1, Lentz
# continued fraction for Q otherwise; both iterate well past the 1e-10
# absolute-accuracy requirement.

_EPS = 1e-16
_TINY = 1e-300
_MAX_ITER = 500


def _lower_reg_series(a: float, x: float) -> float:
    # P(a, x) = x^a e^-x / Gamma(a) * sum_{n>=0} x^n / (a(a+1)...(a+n))
    term = 1.0 / a
    total = term
    denom = a
    for _ in range(_MAX_ITER):
        denom += 1.0
        term *= x / denom
        total += term
        if abs(term) < abs(total) * _EPS:
            break
    return total * math.exp(-x + a * math.log(x) - math.lgamma(a))

def _upper_reg_contfrac(a: float, x: float) -> float:
    # Q(a, x) via the continued fraction (modified Lentz algorithm)
    b = x + 1.0 - a
    c = 1.0 / _TINY
    d = 1.0 / b
    h = d
    for i in range(1, _MAX_ITER + 1):
        an = -i * (i - a)
        b += 2.0
        d = an * d + b
        if abs(d) < _TINY:
            d = _TINY
        c = b + an / c
        if abs(c) < _TINY:
            c = _TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _EPS:
            break
    return math.exp(-x + a * math.log(x) - math.lgamma(a)) * h


def chi_square_sf(x: float, df: int) -> float:
    """Chi-square survival function P(X >= x) with ``df`` degrees of freedom."""
    if df < 1:
        raise ValueError("df must be a positive integer")
    if x < 0:
        raise ValueError("x must be nonnegative")
    if x == 0.0:
        return 1.0
    a = df / 2.0
    half_x = x / 2.0
    if half_x < a + 1.0:
        return min(1.0, max(0.0, 1.0 - _lower_reg_series(a, half_x)))
    return min(1.0, max(0.0, _upper_reg_contfrac(a, half_x)))
