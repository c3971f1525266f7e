"""
Classifying pairs of binary words
=================================

An ordered pair (u, v) of equal-length words can have an internal border
(a suffix of u abelian equivalent to a prefix of v), an external border
(a prefix of u matching a suffix of v), both, or neither.
"""
from mutual_borders import PairClass, all_words, border_profile, classify, lsb_pair
from mutual_borders.words import shortest_internal_border

for u, v in [("aabab", "aabba"), ("aabb", "abbb"), ("abbb", "aabb"), ("aaa", "bbb")]:
    print(f"({u}, {v}): {classify(u, v)}  i={lsb_pair(u, v)}  j={lsb_pair(v, u)}")

# The shortest internal border, as a pair of words. It is itself a pair
# with no borders at all.
x, y = shortest_internal_border("aabab", "aabba")
print("shortest internal border:", x, y, "->", classify(x, y))

# For an MAB pair, i + j > n means the two shortest borders overlap.
# At n = 3 exactly two pairs overlap, both by one letter.
overlapping = [(str(u), str(v)) for u in all_words(3) for v in all_words(3)
               if classify(u, v) is PairClass.MAB and not border_profile(u, v).disjoint]
print("overlapping MAB pairs at n=3:", overlapping)
