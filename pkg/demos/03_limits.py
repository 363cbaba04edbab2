"""
Limits and bounds
=================

The segment linking number is bounded by 1/2 in absolute value, vanishes
as the segments separate or become parallel, and jumps across d = 0 when
the two segments would otherwise intersect.
"""

import math

import numpy as np

from gausslink import SegmentPairInvariants, lk_from_invariants, lk_simple_orthogonal
from gausslink.cli import asymptotic_checks

half = math.pi / 2

# %%
# Shrinking the distance between two crossing segments: lk tends to -1/2
# from above and to +1/2 from below.
for d in (1.0, 1e-1, 1e-3, 1e-6, -1e-6):
    inv = SegmentPairInvariants(half, d, -1.0, 1.0, -1.0, 1.0)
    print(f"d = {d:+.0e}: lk = {lk_from_invariants(inv).value:+.9f}")

# %%
# The same pair slid apart along the first segment never gets close to
# crossing, so lk goes to 0 instead.
for d in (1.0, 1e-3, 1e-6):
    inv = SegmentPairInvariants(half, d, 0.5, 1.5, 0.5, 1.5)
    print(f"disjoint, d = {d:.0e}: lk = {lk_from_invariants(inv).value:+.3e}")

# %%
# Orthogonal segments from the feet of their common perpendicular fill the
# range (-1/8, 0), reaching -1/24 when all three lengths agree.
grid = np.geomspace(0.01, 100, 7)
vals = [lk_simple_orthogonal(a, b, 1.0) for a in grid for b in grid]
print(f"range over grid: [{min(vals):.5f}, {max(vals):.2e}], -1/8 = {-1 / 8}")
print("l1 = l2 = d:", lk_simple_orthogonal(2.0, 2.0, 2.0), "vs", -1 / 24)

# %%
# The same checks, tabulated as in `gausslink table asymptotics`.
for name, param, value, expected, err, tol in asymptotic_checks():
    print(f"{name:<28} {param:+.1e}  lk {value:+.3e}  expected {expected:+.3e}  "
          f"{'pass' if err < tol else 'FAIL'}")
