"""Closed-form pair counts for binary words of length n.

Notation used in the function names:

* ``m_*``    pairs with both an internal and an external abelian border (MAB)
* ``mbar_*`` pairs with neither (MAU)
* ``mixed_count`` pairs with exactly one of the two, per direction

Every quantity is an exact int; divisions are checked, never rounded.
"""
from __future__ import annotations

from functools import lru_cache

from .lattice import (
    OverlapGeometry,
    binomial,
    fan_pair_count,
    small_gamma_triple_count,
    triple_count_brute,
    triple_count_closed,
)


def _exact_div(num: int, den: int, where: str) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"inexact division in {where}: {num} / {den}")
    return q


def D(m: int, k: int) -> int:
    """Number of length-m binary words whose shortest abelian border has length k.

    Only 1 <= k <= m/2 is meaningful: a border longer than half the word
    always contains a shorter one.
    """
    if m < 2:
        raise ValueError("D(m, k) needs m >= 2")
    if k < 1 or 2 * k > m:
        raise ValueError(f"D(m, k) needs 1 <= k <= m/2, got m={m}, k={k}")
    return _exact_div(binomial(2 * k - 2, k - 1) << (m - 2 * k + 1), k, "D")


@lru_cache(maxsize=None)
def m_disjoint(n: int) -> int:
    """MAB pairs whose shortest internal and external borders do not overlap (i + j <= n)."""
    if n < 2:
        return 0
    return sum(D(2 * n - 2 * i, j) * D(2 * i, i)
               for i in range(1, n) for j in range(1, n - i + 1))


def _overlap_gamma1(n: int) -> int:
    total = 0
    for i in range(2, n):
        c = n - i
        for l1 in range(1, c + 1):
            left = binomial(c, l1) * binomial(c, l1 - 1)
            for m in range(l1 + 1, i + l1):
                num = left * binomial(i - 1, m - l1) * binomial(i - 1, m - l1 - 1)
                total += _exact_div(num, (i - 1) * c, "m_overlap_gamma(g=1)")
    return 2 * total


def _overlap_gamma2(n: int, i_start: int = 4) -> int:
    total = 0
    for i in range(i_start, n - 1):
        c = n - i
        for l1 in range(2, c + 1):
            left = binomial(c, l1) * binomial(c, l1 - 2)
            for m in range(l1 + 2, i + l1 - 1):
                num = 4 * left * binomial(i - 2, m - l1) * binomial(i - 2, m - l1 - 2)
                total += _exact_div(num, (i - 2) * c, "m_overlap_gamma(g=2)")
    return 2 * total


def overlap_sum(n: int, g: int, triple=None) -> int:
    """Generic overlap sum over (i, l2, l1, k, m) for overlap length g.

    `triple` evaluates the middle triplet count for a geometry; by default
    the closed form (g >= 3) or the small-overlap rule (g <= 2).
    """
    if triple is None:
        triple = triple_count_closed if g >= 3 else small_gamma_triple_count
    min_sep = 1 if g == 1 else 2
    # |beta| = i - g must be >= 1 when g = 1 and >= 2 otherwise
    i_lo = g + (1 if g == 1 else 2)
    total = 0
    for i in range(i_lo, n):
        j = n + g - i
        if j > n - 1:
            continue
        c = n - i
        below = n - j
        if c < min_sep:
            continue
        for l2 in range(0, c - min_sep + 1):
            for l1 in range(l2 + min_sep, c + 1):
                sep = l1 - l2
                first = fan_pair_count(sep, c, l1, l2)
                for k in range(l1, l2 + g + 1):
                    mid = triple(OverlapGeometry(n, i, j, l1, l2, k))
                    if not mid:
                        continue
                    for m in range(k + sep, k + below + 1):
                        total += first * mid * fan_pair_count(sep, below, m - k, m - k - sep)
    return 2 * total


@lru_cache(maxsize=None)
def m_overlap_gamma(n: int, g: int) -> int:
    """MAB pairs whose shortest borders overlap in exactly g letters."""
    if n < 3 or g < 1 or g > n - 2:
        return 0
    if g == 1:
        return _overlap_gamma1(n)
    if g == 2:
        return _overlap_gamma2(n)
    return overlap_sum(n, g)


def m_overlap(n: int) -> int:
    return sum(m_overlap_gamma(n, g) for g in range(1, n - 1))


@lru_cache(maxsize=None)
def m_total(n: int) -> int:
    """Number of MAB pairs of length n."""
    if n < 1:
        raise ValueError("m_total needs n >= 1")
    return m_disjoint(n) + m_overlap(n)


@lru_cache(maxsize=None)
def mbar_eq(n: int) -> int:
    """MAU pairs whose two words have equal Parikh vectors."""
    if n < 2:
        raise ValueError("mbar_eq needs n >= 2")
    num = sum(binomial(n - 1, r) * binomial(n - 1, r - 1) for r in range(1, n))
    return 2 * _exact_div(num, n - 1, "mbar_eq")


@lru_cache(maxsize=None)
def mbar_neq(n: int) -> int:
    """MAU pairs whose two words have different Parikh vectors.

    A Parikh gap of exactly one never yields an MAU pair, so only gaps of
    two or more are summed.
    """
    if n < 2:
        raise ValueError("mbar_neq needs n >= 2")
    total = 0
    for r2 in range(0, n - 1):
        for r1 in range(r2 + 2, n + 1):
            total += triple_count_brute((r2 - r1, r1 - r2), (0, 0), (r2, n - r2))
    return 2 * total


def mbar_total(n: int) -> int:
    """Number of MAU pairs of length n."""
    if n < 1:
        raise ValueError("mbar_total needs n >= 1")
    if n == 1:
        return 4
    return mbar_eq(n) + mbar_neq(n)


def mixed_count(n: int) -> int:
    """Pairs with an internal border but no external one (equivalently the reverse)."""
    rest = 4 ** n - m_total(n) - mbar_total(n)
    return _exact_div(rest, 2, "mixed_count")
