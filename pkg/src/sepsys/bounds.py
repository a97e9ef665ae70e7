"""Closed-form extremal formulas and bound sandwiches.

Everything is exact integer arithmetic computed by upward scan; no
floating-point inversions anywhere, so results are reproducible bit-exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

PAIR_FAMILY = "pair-family"
INFO_THEORETIC = "info-theoretic"


@dataclass(frozen=True)
class BoundPair:
    """A lower/upper sandwich for the minimum k-hyperseparating system size.

    lower_source reports which argument produced the lower bound;
    lower_clamped is set when the pair-family formula fell below the
    information-theoretic floor and was raised to it.
    """

    lower: int
    upper: int
    lower_source: str
    lower_clamped: bool = False


def _require_n(n: int) -> None:
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")


def binom(m: int, j: int) -> int:
    """C(m, j); zero when j < 0 or j > m."""
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    if j < 0 or j > m:
        return 0
    return comb(m, j)


def k_prime(m: int, k: int) -> int:
    """Effective witness-set size on an m-element ground: k itself once the
    ground is large enough (m >= 2k-1), else floor(m/2)."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if m >= 2 * k - 1:
        # both branches agree at the boundary: C(2k-1, k) == C(2k-1, k-1)
        if m == 2 * k - 1:
            assert comb(m, k) == comb(m, m // 2)
        return k
    return m // 2


def min_m_hcs(n: int, k: int) -> int:
    """Smallest m with C(m, k'(m, k)) >= n.

    The scanned function is nondecreasing in m, so the upward scan stops at
    the true minimum.
    """
    _require_n(n)
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    m = 1
    while binom(m, k_prime(m, k)) < n:
        m += 1
    return m


def separating_min(n: int) -> int:
    """ceil(log2 n), the exact minimum size of a separating system."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return (n - 1).bit_length()


def spencer_min(n: int) -> int:
    """Smallest m whose middle binomial C(m, floor(m/2)) reaches n."""
    _require_n(n)
    m = 1
    while comb(m, m // 2) < n:
        m += 1
    return m


def _min_m_choose2(n: int) -> int:
    m = 2
    while comb(m, 2) < n:
        m += 1
    return m


def f2_exact(n: int) -> int:
    """Exact minimum size of a 2-hyperseparating system on n elements:
    ceil(n/2) up to n = 10, then the smallest m with C(m, 2) >= n."""
    _require_n(n)
    if n <= 10:
        val = (n + 1) // 2
        if n == 10:
            # both branches of the formula meet at the threshold
            assert val == _min_m_choose2(10)
        return val
    return _min_m_choose2(n)


def f_bounds(n: int, k: int) -> BoundPair:
    """Sandwich for the minimum k-hyperseparating system size on n elements.

    Upper bound: the k-hypercompletely-separating construction size.  Lower
    bound: the pair-counting formula min{m : 2^k * C(m, k) >= n} when
    n > C(2k-1, k), clamped to the separating floor ceil(log2 n) (every
    k-hyperseparating system separates); otherwise the separating floor
    itself.
    """
    _require_n(n)
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    upper = min_m_hcs(n, k)
    floor_sep = separating_min(n)
    if n > binom(2 * k - 1, k):
        m = 1
        while (1 << k) * binom(m, k) < n:
            m += 1
        if m < floor_sep:
            pair = BoundPair(floor_sep, upper, PAIR_FAMILY, lower_clamped=True)
        else:
            pair = BoundPair(m, upper, PAIR_FAMILY)
    else:
        pair = BoundPair(floor_sep, upper, INFO_THEORETIC)
    assert pair.lower <= pair.upper
    return pair
