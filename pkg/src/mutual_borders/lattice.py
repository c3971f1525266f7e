"""Lattice-path counting on the integer grid.

A word is read as a monotone path: ``a`` is a step right (+x), ``b`` a step
up (+y). Every count here is an exact Python int.

The central quantity is the triplet count for three points A, B, C with
X(A) < X(B): triplets (p, q, p') where p runs A -> C, q runs B -> C, p'
starts at B and spells the same word as p, p meets q only at C and q
meets p' only at B. Two evaluators are provided: a closed form built from
alternating block compositions (``triple_count_closed``) and a direct
enumeration with a grid DP (``triple_count_brute``).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterator, NamedTuple

from .words import BinaryWord


class LatticePoint(NamedTuple):
    x: int
    y: int

    def __add__(self, other):
        return LatticePoint(self.x + other[0], self.y + other[1])


def binomial(n: int, k: int) -> int:
    """Binomial coefficient, zero whenever k < 0, k > n or n < 0."""
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


def path_count(a, b) -> int:
    """Number of right/up lattice paths from `a` to `b`."""
    dx, dy = b[0] - a[0], b[1] - a[1]
    if dx < 0 or dy < 0:
        return 0
    return comb(dx + dy, dx)


@dataclass(frozen=True)
class LatticePath:
    start: LatticePoint
    word: BinaryWord

    def points(self) -> list[LatticePoint]:
        x, y = self.start
        pts = [LatticePoint(x, y)]
        for t in range(self.word.length):
            if (self.word.bits >> t) & 1:
                y += 1
            else:
                x += 1
            pts.append(LatticePoint(x, y))
        return pts

    @property
    def end(self) -> LatticePoint:
        nb = self.word.bits.bit_count()
        return LatticePoint(self.start.x + self.word.length - nb, self.start.y + nb)


def word_has_abelian_border_k(w: BinaryWord | str, k: int) -> bool:
    """True iff the paths of `w` and of its reversal, from a common start, meet after k steps."""
    from .words import reverse

    w = BinaryWord.coerce(w)
    if not 1 <= k < w.length:
        return False
    origin = LatticePoint(0, 0)
    return LatticePath(origin, w).points()[k] == LatticePath(origin, reverse(w)).points()[k]


def fan_pair_count(d: int, steps: int, off_hi: int, off_lo: int) -> int:
    """Ordered pairs of `steps`-step paths from one start that share only that start.

    The first path ends `off_hi` to the right of the start, the second
    `off_lo`; `d` is their separation ``off_hi - off_lo``. Reversed, this
    also counts path pairs sharing only a common end point.
    """
    if d < 1 or steps < 1:
        raise ValueError("fan_pair_count needs d >= 1 and steps >= 1")
    num = d * binomial(steps, off_hi) * binomial(steps, off_lo)
    q, r = divmod(num, steps)
    if r:
        raise ArithmeticError(f"inexact division in fan_pair_count(d={d}, steps={steps}, "
                              f"off_hi={off_hi}, off_lo={off_lo})")
    return q


def fan_pair_brute(steps: int, off_hi: int, off_lo: int) -> int:
    """Enumerate the pairs counted by ``fan_pair_count``."""
    ends_hi = _words_with_a_count(steps, off_hi)
    ends_lo = _words_with_a_count(steps, off_lo)
    total = 0
    for p in ends_hi:
        for q in ends_lo:
            # two equal-length paths from one start meet iff their a-counts agree at some step
            if all(x != y for x, y in zip(p, q)):
                total += 1
    return total


@lru_cache(maxsize=None)
def _words_with_a_count(steps: int, a_count: int) -> tuple[tuple[int, ...], ...]:
    """Running a-count profiles (steps 1..steps) of every word with the given a-count."""
    if not 0 <= a_count <= steps:
        return ()
    out = []
    for pos in itertools.combinations(range(steps), a_count):
        marks = [0] * steps
        for t in pos:
            marks[t] = 1
        out.append(tuple(itertools.accumulate(marks)))
    return tuple(out)


@dataclass(frozen=True)
class OddComposition:
    parts: tuple[int, ...]

    def __post_init__(self):
        if len(self.parts) % 2 == 0 or len(self.parts) < 3:
            raise ValueError("an odd composition needs 2r-1 parts with r >= 2")
        if any(p < 1 for p in self.parts):
            raise ValueError("composition parts must be positive")

    @property
    def r(self) -> int:
        return (len(self.parts) + 1) // 2

    @property
    def odd_parts(self) -> tuple[int, ...]:
        """n_1, n_3, ..., n_{2r-1}: the a-runs."""
        return self.parts[0::2]

    @property
    def even_parts(self) -> tuple[int, ...]:
        """n_2, n_4, ..., n_{2r-2}: the b-runs."""
        return self.parts[1::2]

    def word(self) -> str:
        return "".join(("a" if t % 2 == 0 else "b") * p for t, p in enumerate(self.parts))


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Compositions of `total` into `parts` positive parts, lexicographic."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if total < parts:
        return
    for cut in itertools.combinations(range(1, total), parts - 1):
        bounds = (0,) + cut + (total,)
        yield tuple(b - a for a, b in zip(bounds, bounds[1:]))


def enumerate_odd_compositions(total: int, odd_sum: int, r: int) -> Iterator[OddComposition]:
    """All (2r-1)-part positive compositions of `total` whose odd positions sum to `odd_sum`."""
    if r < 2:
        raise ValueError("r must be at least 2")
    for odd in _compositions(odd_sum, r):
        for even in _compositions(total - odd_sum, r - 1):
            parts = [0] * (2 * r - 1)
            parts[0::2] = odd
            parts[1::2] = even
            yield OddComposition(tuple(parts))


@dataclass(frozen=True)
class OverlapGeometry:
    """Where the borders of an overlapping MAB pair cross the lines X+Y = n-i and X+Y = j.

    `l1`, `l2` are X-coordinates on the first line, `k` on the second.
    """

    n: int
    i: int
    j: int
    l1: int
    l2: int
    k: int

    def __post_init__(self):
        if self.gamma_len < 1:
            raise ValueError("overlapping geometry needs i + j > n")
        if not 0 <= self.l2 < self.l1 <= self.n - self.i:
            raise ValueError("need 0 <= l2 < l1 <= n - i")
        if not self.l1 <= self.k <= self.l2 + self.gamma_len:
            raise ValueError("need l1 <= k <= l2 + gamma_len")

    @classmethod
    def from_points(cls, a_l2, a_l1, a_k) -> "OverlapGeometry":
        """Build a geometry from the three corner points; n is taken as j + 1."""
        level = a_l1[0] + a_l1[1]
        if a_l2[0] + a_l2[1] != level:
            raise ValueError("A_l1 and A_l2 must lie on one anti-diagonal")
        j = a_k[0] + a_k[1]
        n = j + 1
        return cls(n=n, i=n - level, j=j, l1=a_l1[0], l2=a_l2[0], k=a_k[0])

    @property
    def gamma_len(self) -> int:
        return self.i + self.j - self.n

    @property
    def sep(self) -> int:
        """l1 - l2."""
        return self.l1 - self.l2

    @property
    def k_prime(self) -> int:
        return self.k + self.sep

    @property
    def a_l1(self) -> LatticePoint:
        return LatticePoint(self.l1, self.n - self.i - self.l1)

    @property
    def a_l2(self) -> LatticePoint:
        return LatticePoint(self.l2, self.n - self.i - self.l2)

    @property
    def a_k(self) -> LatticePoint:
        return LatticePoint(self.k, self.j - self.k)

    @property
    def a_k_prime(self) -> LatticePoint:
        return LatticePoint(self.k_prime, self.j - self.k_prime)

    @property
    def e1(self) -> LatticePoint:
        return LatticePoint(self.l1, self.n - self.i - self.l1 + 1)

    @property
    def e2(self) -> LatticePoint:
        return LatticePoint(self.k, self.j - self.k - 1)

    @property
    def flat(self) -> bool:
        return self.a_k.y == self.a_l2.y


def composition_triple_count(parts: tuple[int, ...], sep: int, k_off: int) -> int:
    """Triplets whose guide path spells the alternating block word `parts`.

    `sep` is l1 - l2 and `k_off` is k - l1. The crossing of the path from
    A_l1 with each block boundary line is tracked as an offset s (after an
    a-run) or t (after a b-run) from the guide path; each offset ranges over
    the internal points of that line left of X = k.
    """
    r = (len(parts) + 1) // 2
    odd = parts[0::2]
    # locate the a-run containing X = k, measured from A_l1
    acc = 0
    for run in range(r):
        if acc + odd[run] > k_off:
            break
        acc += odd[run]
    else:
        raise ValueError("k lies beyond the guide path")
    head = k_off - acc
    tail = odd[run] - head
    if sep != tail + sum(odd[run + 1:]):
        return 0
    # upper bounds for the s/t offsets of each internal line pair
    bounds = []
    for pair in range(1, r):
        if pair <= run:
            bounds.append(sep - 1)
        else:
            bounds.append(sep - tail - sum(odd[run + 1:pair]))
    if any(b < 1 for b in bounds):
        raise ArithmeticError("empty internal-point set on a crossing line")
    # the nested sum over (s_1, t_2, ..., t_{2r-2}) factors line by line, so it
    # is carried as a vector indexed by the latest offset
    n1, last = parts[0], parts[-1]
    vec = [binomial(n1 - 1, n1 - sep + s) for s in range(1, bounds[0] + 1)]
    vec = _advance(vec, bounds[0], parts[1], lambda s, t: t - s)
    for pair in range(1, r - 1):
        a_run, b_run = parts[2 * pair], parts[2 * pair + 1]
        vec = _advance(vec, bounds[pair], a_run, lambda t, s, a=a_run: a + s - t)
        vec = _advance(vec, bounds[pair], b_run, lambda s, t: t - s)
    return sum(v * binomial(last - 1, last - t) for t, v in enumerate(vec, start=1))


def _advance(vec: list[int], bound: int, run: int, lower) -> list[int]:
    """new[y] = sum over x of vec[x] * C(run, lower(x, y)), offsets counted from 1."""
    return [sum(v * binomial(run, lower(x, y)) for x, v in enumerate(vec, start=1) if v)
            for y in range(1, bound + 1)]


@lru_cache(maxsize=None)
def _triple_closed(gamma: int, sep: int, k_off: int) -> int:
    if k_off == gamma - sep:
        return binomial(gamma - 2, k_off)
    total = 0
    odd_sum = k_off + sep
    for r in range(2, (gamma + 1) // 2 + 1):
        for comp in enumerate_odd_compositions(gamma, odd_sum, r):
            total += composition_triple_count(comp.parts, sep, k_off)
    return total


def triple_count_closed(g: OverlapGeometry) -> int:
    """Closed-form triplet count for gamma_len >= 3 and l1 - l2 >= 2."""
    if g.gamma_len < 3:
        raise ValueError("closed-form triplet count needs gamma_len >= 3")
    if g.sep < 2:
        raise ValueError("closed-form triplet count needs l1 - l2 >= 2")
    return _triple_closed(g.gamma_len, g.sep, g.k - g.l1)


def small_gamma_triple_count(g: OverlapGeometry) -> int:
    """Triplet count when the overlap has length 1 or 2: the only survivor is k = l1 with l1 - l2 = gamma_len."""
    if g.gamma_len not in (1, 2):
        raise ValueError("small_gamma_triple_count needs gamma_len in {1, 2}")
    return int(g.sep == g.gamma_len and g.k == g.l1)


def triple_count_brute(a, b, c) -> int:
    """Count triplets (p, q, p') by enumerating p and running a DP for q.

    q may touch p only at `c` and p' only at `b`.
    """
    a, b, c = LatticePoint(*a), LatticePoint(*b), LatticePoint(*c)
    if not a.x < b.x:
        raise ValueError("triplet count needs X(A) < X(B)")
    if len({a, b, c}) < 3:
        raise ValueError("triplet count needs distinct points")
    dx, dy = c.x - a.x, c.y - a.y
    qx, qy = c.x - b.x, c.y - b.y
    if dx < 0 or dy < 0 or qx < 0 or qy < 0:
        return 0
    steps = dx + dy
    total = 0
    for ups in itertools.combinations(range(steps), dy):
        bits = 0
        for t in ups:
            bits |= 1 << t
        word = BinaryWord(steps, bits)
        blocked = set(LatticePath(a, word).points())
        blocked.discard(c)
        shadow = set(LatticePath(b, word).points())
        shadow.discard(b)
        blocked |= shadow
        if b in blocked:
            continue
        total += _grid_paths_avoiding(b, qx, qy, blocked)
    return total


def _grid_paths_avoiding(start: LatticePoint, width: int, height: int, blocked: set) -> int:
    row = [0] * (width + 1)
    for y in range(height + 1):
        for x in range(width + 1):
            if (start.x + x, start.y + y) in blocked:
                row[x] = 0
            elif x == 0 and y == 0:
                row[x] = 1
            elif x:
                row[x] += row[x - 1]
    return row[width]
