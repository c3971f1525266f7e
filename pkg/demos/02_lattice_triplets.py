"""
Lattice paths and the overlap triplet count
===========================================

Words become right/up lattice paths (a = right, b = up). Counting MAB
pairs whose borders overlap reduces to counting triplets of paths that
touch only at prescribed points. The closed form sums over alternating
block compositions of the overlap; the brute evaluator enumerates one path
and counts the other with a grid DP.
"""
from mutual_borders import (
    OverlapGeometry,
    enumerate_odd_compositions,
    fan_pair_count,
    triple_count_brute,
    triple_count_closed,
)
from mutual_borders.lattice import composition_triple_count, fan_pair_brute

geo = OverlapGeometry.from_points((1, 4), (4, 1), (5, 5))
print("overlap length:", geo.gamma_len, " separation:", geo.sep)

# The guide path from A_l2 to A_k has one b-step, so its word is a^x b a^y.
for comp in enumerate_odd_compositions(geo.gamma_len, geo.k - geo.l2, 2):
    print(" ", comp.word(), "contributes", composition_triple_count(comp.parts, geo.sep, geo.k - geo.l1))
print("closed form:", triple_count_closed(geo), " brute:", triple_count_brute(geo.a_l2, geo.a_l1, geo.a_k))

# When the guide path is a single horizontal run the count is one binomial.
flat = OverlapGeometry.from_points((1, 4), (5, 0), (9, 4))
print("flat case:", triple_count_closed(flat))

# Pairs of paths from one start that never meet again.
for steps, hi, lo in [(2, 1, 0), (5, 3, 1), (8, 5, 2)]:
    print(f"fan pairs steps={steps} ends=({hi},{lo}):", fan_pair_count(hi - lo, steps, hi, lo),
          "enumerated:", fan_pair_brute(steps, hi, lo))
