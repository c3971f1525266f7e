"""Binary words, abelian borders and pair classification.

Words over {a, b} are packed into an int: bit t holds the letter at
position t (leftmost letter is bit 0), with ``a`` = 0 and ``b`` = 1.
Two binary words of equal length are abelian equivalent exactly when they
hold the same number of b's, so every border test below reduces to a
popcount comparison.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple, Optional

MAX_LENGTH = 63

_LETTERS = "ab"


@dataclass(frozen=True)
class BinaryWord:
    """A word of fixed length over {a, b}, stored bit-packed."""

    length: int
    bits: int = 0

    def __post_init__(self):
        if not 0 <= self.length <= MAX_LENGTH:
            raise ValueError(f"word length must lie in [0, {MAX_LENGTH}], got {self.length}")
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError("bits set beyond the word length")

    @classmethod
    def parse(cls, text: str) -> "BinaryWord":
        bits = 0
        for pos, ch in enumerate(text):
            if ch not in _LETTERS:
                raise ValueError(f"invalid letter {ch!r} in {text!r}; expected only 'a' and 'b'")
            if ch == "b":
                bits |= 1 << pos
        return cls(len(text), bits)

    @classmethod
    def coerce(cls, w: "BinaryWord | str") -> "BinaryWord":
        return w if isinstance(w, BinaryWord) else cls.parse(w)

    def __str__(self) -> str:
        return "".join(_LETTERS[(self.bits >> t) & 1] for t in range(self.length))

    def __len__(self) -> int:
        return self.length

    def __getitem__(self, pos: int) -> str:
        if not 0 <= pos < self.length:
            raise IndexError(pos)
        return _LETTERS[(self.bits >> pos) & 1]

    def prefix_b(self, size: int) -> int:
        """Number of b's among the first `size` letters."""
        return (self.bits & ((1 << size) - 1)).bit_count()

    def suffix_b(self, size: int) -> int:
        """Number of b's among the last `size` letters."""
        return (self.bits >> (self.length - size)).bit_count() if size else 0


class ParikhPair(NamedTuple):
    count_a: int
    count_b: int


class PairClass(enum.Enum):
    MAB = "MAB"
    MAU = "MAU"
    INTERNAL_ONLY = "InternalOnly"
    EXTERNAL_ONLY = "ExternalOnly"

    def __str__(self) -> str:
        return self.value


class BorderProfile(NamedTuple):
    """Shortest internal (`i`) and external (`j`) border lengths of an MAB pair."""

    n: int
    i: int
    j: int

    @property
    def gamma_len(self) -> int:
        return self.i + self.j - self.n

    @property
    def disjoint(self) -> bool:
        return self.i + self.j <= self.n


def parikh(w: BinaryWord | str) -> ParikhPair:
    w = BinaryWord.coerce(w)
    nb = w.bits.bit_count()
    return ParikhPair(w.length - nb, nb)


def abelian_equiv(x: BinaryWord | str, y: BinaryWord | str) -> bool:
    x, y = BinaryWord.coerce(x), BinaryWord.coerce(y)
    return x.length == y.length and parikh(x) == parikh(y)


def reverse(w: BinaryWord | str) -> BinaryWord:
    w = BinaryWord.coerce(w)
    bits = 0
    for t in range(w.length):
        if (w.bits >> t) & 1:
            bits |= 1 << (w.length - 1 - t)
    return BinaryWord(w.length, bits)


def complement(w: BinaryWord | str) -> BinaryWord:
    w = BinaryWord.coerce(w)
    return BinaryWord(w.length, w.bits ^ ((1 << w.length) - 1))


def shortest_abelian_border(w: BinaryWord | str) -> Optional[int]:
    """Length of the shortest abelian border of `w`, or None if it has none."""
    w = BinaryWord.coerce(w)
    n, bits = w.length, w.bits
    pre = suf = 0
    for size in range(1, n):
        pre += (bits >> (size - 1)) & 1
        suf += (bits >> (n - size)) & 1
        if pre == suf:
            return size
    return None


def _check_same_length(u: BinaryWord, v: BinaryWord) -> None:
    if u.length != v.length:
        raise ValueError(f"pair words must have equal length, got {u.length} and {v.length}")


def lsb_pair(u: BinaryWord | str, v: BinaryWord | str) -> Optional[int]:
    """Length of the shortest internal abelian border of ``(u, v)``.

    That is the least L in [1, n-1] such that the length-L suffix of `u`
    is abelian equivalent to the length-L prefix of `v`. The shortest
    external border of ``(u, v)`` is ``lsb_pair(v, u)``.
    """
    u, v = BinaryWord.coerce(u), BinaryWord.coerce(v)
    _check_same_length(u, v)
    n = u.length
    ub, vb = u.bits, v.bits
    suf_u = pre_v = 0
    for size in range(1, n):
        suf_u += (ub >> (n - size)) & 1
        pre_v += (vb >> (size - 1)) & 1
        if suf_u == pre_v:
            return size
    return None


def shortest_internal_border(u: BinaryWord | str, v: BinaryWord | str) -> Optional[tuple[BinaryWord, BinaryWord]]:
    """The pair of words forming the shortest internal border, if any."""
    u, v = BinaryWord.coerce(u), BinaryWord.coerce(v)
    size = lsb_pair(u, v)
    if size is None:
        return None
    n = u.length
    x = BinaryWord(size, u.bits >> (n - size))
    y = BinaryWord(size, v.bits & ((1 << size) - 1))
    return x, y


def classify(u: BinaryWord | str, v: BinaryWord | str) -> PairClass:
    u, v = BinaryWord.coerce(u), BinaryWord.coerce(v)
    _check_same_length(u, v)
    internal = lsb_pair(u, v) is not None
    external = lsb_pair(v, u) is not None
    if internal and external:
        return PairClass.MAB
    if internal:
        return PairClass.INTERNAL_ONLY
    if external:
        return PairClass.EXTERNAL_ONLY
    return PairClass.MAU


def border_profile(u: BinaryWord | str, v: BinaryWord | str) -> Optional[BorderProfile]:
    """(n, i, j) for an MAB pair; None for any other class."""
    u, v = BinaryWord.coerce(u), BinaryWord.coerce(v)
    i, j = lsb_pair(u, v), lsb_pair(v, u)
    if i is None or j is None:
        return None
    return BorderProfile(u.length, i, j)


def all_words(n: int):
    """Every word of length `n`, in increasing bit order."""
    for bits in range(1 << n):
        yield BinaryWord(n, bits)
