"""Exhaustive oracles: the pair census over all of Sigma^n x Sigma^n, and D(m, k).

The census classifies every ordered pair with numpy. For a block of
u-words it compares, length by length, the b-count of u's suffix with the
b-count of v's prefix (internal borders) and the other way round (external
borders). Each block yields an additive partial record, so the total does
not depend on block size, order or thread count.
"""
from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

import numpy as np

from .words import MAX_LENGTH, BinaryWord, shortest_abelian_border

DEFAULT_CAP = 14
_BLOCK_CELLS = 1 << 22


@dataclass
class CensusRecord:
    n: int
    m_disjoint: int = 0
    m_overlap_by_gamma: dict[int, int] = field(default_factory=dict)
    mbar_eq: int = 0
    mbar_neq: int = 0
    internal_only: int = 0
    external_only: int = 0

    @property
    def m_overlap(self) -> int:
        return sum(self.m_overlap_by_gamma.values())

    @property
    def m_total(self) -> int:
        return self.m_disjoint + self.m_overlap

    @property
    def mbar_total(self) -> int:
        return self.mbar_eq + self.mbar_neq

    @property
    def total(self) -> int:
        return self.m_total + self.mbar_total + self.internal_only + self.external_only

    def __add__(self, other: "CensusRecord") -> "CensusRecord":
        if other.n != self.n:
            raise ValueError("cannot merge census records of different lengths")
        gammas = dict(self.m_overlap_by_gamma)
        for g, c in other.m_overlap_by_gamma.items():
            gammas[g] = gammas.get(g, 0) + c
        return CensusRecord(
            n=self.n,
            m_disjoint=self.m_disjoint + other.m_disjoint,
            m_overlap_by_gamma=dict(sorted(gammas.items())),
            mbar_eq=self.mbar_eq + other.mbar_eq,
            mbar_neq=self.mbar_neq + other.mbar_neq,
            internal_only=self.internal_only + other.internal_only,
            external_only=self.external_only + other.external_only,
        )

    def to_dict(self) -> dict[str, str]:
        """Flat mapping with decimal-string counts."""
        out = {
            "n": str(self.n),
            "m_total": str(self.m_total),
            "m_disjoint": str(self.m_disjoint),
        }
        for g, c in sorted(self.m_overlap_by_gamma.items()):
            out[f"m_overlap_gamma_{g}"] = str(c)
        out.update(
            mbar_total=str(self.mbar_total),
            mbar_eq=str(self.mbar_eq),
            mbar_neq=str(self.mbar_neq),
            internal_only=str(self.internal_only),
            external_only=str(self.external_only),
        )
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict[str, str]) -> "CensusRecord":
        prefix = "m_overlap_gamma_"
        rec = cls(
            n=int(data["n"]),
            m_disjoint=int(data["m_disjoint"]),
            m_overlap_by_gamma={int(k[len(prefix):]): int(v) for k, v in data.items() if k.startswith(prefix)},
            mbar_eq=int(data["mbar_eq"]),
            mbar_neq=int(data["mbar_neq"]),
            internal_only=int(data["internal_only"]),
            external_only=int(data["external_only"]),
        )
        if int(data["m_total"]) != rec.m_total or int(data["mbar_total"]) != rec.mbar_total:
            raise ValueError("inconsistent totals in census record")
        return rec


def _profiles(n: int):
    words = np.arange(1 << n, dtype=np.int64)
    letters = ((words[:, None] >> np.arange(n)) & 1).astype(np.int8)
    zero = np.zeros((1 << n, 1), dtype=np.int8)
    # pre[w, L] / suf[w, L]: b-count of the length-L prefix / suffix of w
    pre = np.concatenate([zero, np.cumsum(letters, axis=1, dtype=np.int8)], axis=1)
    suf = np.concatenate([zero, np.cumsum(letters[:, ::-1], axis=1, dtype=np.int8)], axis=1)
    return pre, suf, pre[:, n]


def _shortest(rows_a: np.ndarray, cols_b: np.ndarray, n: int) -> np.ndarray:
    """Least L in [1, n-1] with rows_a[:, L] == cols_b[:, L] per cell; 0 if none."""
    out = np.zeros((rows_a.shape[0], cols_b.shape[0]), dtype=np.int8)
    for size in range(n - 1, 0, -1):
        np.putmask(out, rows_a[:, size, None] == cols_b[None, :, size], size)
    return out


def _census_block(n: int, lo: int, hi: int, pre, suf, pop) -> CensusRecord:
    i = _shortest(suf[lo:hi], pre, n)
    j = _shortest(pre[lo:hi], suf, n)
    has_i, has_j = i > 0, j > 0
    mab = has_i & has_j
    mau = ~has_i & ~has_j
    sums = (i.astype(np.int16) + j)[mab]
    overlap = np.bincount(sums[sums > n] - n)
    eq = pop[lo:hi, None] == pop[None, :]
    n_mau = int(mau.sum())
    n_eq = int((mau & eq).sum())
    return CensusRecord(
        n=n,
        m_disjoint=int((sums <= n).sum()),
        m_overlap_by_gamma={g: int(c) for g, c in enumerate(overlap) if g and c},
        mbar_eq=n_eq,
        mbar_neq=n_mau - n_eq,
        internal_only=int((has_i & ~has_j).sum()),
        external_only=int((~has_i & has_j).sum()),
    )


def brute_census(n: int, cap: int = DEFAULT_CAP, block_rows: Optional[int] = None,
                 threads: int = 1) -> CensusRecord:
    """Classify all 4**n ordered pairs of length-`n` words.

    `block_rows` and `threads` only change how the u-range is split; the
    result is the same for every choice.
    """
    if n < 1:
        raise ValueError("census needs n >= 1")
    if n > min(cap, MAX_LENGTH):
        raise ValueError(f"n={n} exceeds the census cap {min(cap, MAX_LENGTH)}")
    size = 1 << n
    if block_rows is None:
        block_rows = max(1, _BLOCK_CELLS // size)
    pre, suf, pop = _profiles(n)
    bounds = [(lo, min(lo + block_rows, size)) for lo in range(0, size, block_rows)]
    if threads > 1 and len(bounds) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda b: _census_block(n, b[0], b[1], pre, suf, pop), bounds))
    else:
        parts = [_census_block(n, lo, hi, pre, suf, pop) for lo, hi in bounds]
    total = CensusRecord(n=n)
    for part in parts:
        total = total + part
    return total


@lru_cache(maxsize=None)
def shortest_border_histogram(m: int) -> tuple[int, ...]:
    """hist[k] = number of length-m words whose shortest abelian border is k; hist[0] counts unbordered words."""
    hist = [0] * max(m, 1)
    for bits in range(1 << m):
        k = shortest_abelian_border(BinaryWord(m, bits))
        hist[k or 0] += 1
    return tuple(hist)


def brute_D(m: int, k: int) -> int:
    """Exhaustive count of length-m words whose shortest abelian border has length k."""
    if m < 2:
        raise ValueError("brute_D needs m >= 2")
    if k < 1 or k >= m:
        return 0
    return shortest_border_histogram(m)[k]


def unbordered_count(m: int) -> int:
    """Number of abelian-unbordered words of length m."""
    return shortest_border_histogram(m)[0] if m >= 1 else 1
