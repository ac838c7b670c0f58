"""Quality indicators on hand-checkable point sets.

Everything here is small enough to verify by hand: two points in the
plane, a reference point at (1, 1), and the four indicators used to
score a selected subset.
"""
import numpy as np

from subsetbench import (
    PointSet,
    eps_plus,
    hv_contribution,
    hv_exact,
    igd,
    igd_plus,
    uniformity,
)

# 1. Hypervolume is the area (volume, at higher m) dominated by the set
#    and bounded by the reference point. Two staircase points:
#
#        (0.2, 0.8) covers a 0.8 x 0.2 box    = 0.16
#        (0.8, 0.2) covers a 0.2 x 0.8 box    = 0.16
#        their overlap is 0.2 x 0.2           = 0.04
#
#    so the union is 0.16 + 0.16 - 0.04 = 0.28.
pair = PointSet([[0.2, 0.8], [0.8, 0.2]])
ref = np.array([1.0, 1.0])
print("hv of the pair:", hv_exact(pair, ref))

# 2. A point's contribution is the hypervolume lost by deleting it.
#    Each of the two points exclusively owns a 0.12 slab.
for i in range(2):
    print(f"contribution of point {i}:", hv_contribution(i, pair, ref))

# 3. Coverage indicators measure how well a subset represents a larger
#    reference set. IGD averages plain distances, IGD+ only penalizes
#    coordinates where the subset point is worse, and eps+ is the
#    additive shift needed to weakly dominate everything.
reference = PointSet([[0.0, 1.0], [0.5, 0.5], [1.0, 0.0]])
subset = PointSet([[0.1, 1.0], [1.0, 0.1]])
print("\nigd :", igd(subset, reference))
print("igd+:", igd_plus(subset, reference))
print("eps+:", eps_plus(subset, reference))

# 4. Uniformity is simply the minimum pairwise distance inside the
#    subset. Duplicate points drive it to zero, which is why selectors
#    that may pick the same candidate twice can score exactly 0.
print("\nuniformity of the pair:", uniformity(pair))
print("uniformity with a duplicate:", uniformity(PointSet([[0.2, 0.8], [0.2, 0.8], [0.8, 0.2]])))
