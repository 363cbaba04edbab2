"""
Linking numbers of closed polygons
==================================

Summing the segment formula over every pair of edges gives the linking
number of two closed polygons, which always comes out as an integer.
"""

from gausslink import PolyLink, builtin_links, lk_link
from gausslink.links import EXPECTED_LK, LinkIntersectionError

# %%
# The four built-in links.
for name, link in builtin_links().items():
    report = lk_link(link)
    print(f"{name:>14}: lk = {report.lk_total:+.17f}  expected {EXPECTED_LK[name]:+d}  "
          f"pairs {report.pair_count:3d}  closest approach {report.min_distance:.3f}")

# %%
# Each report also counts which evaluation branch handled every edge pair.
print(lk_link(builtin_links()["whitehead"]).branch_histogram)

# %%
# Reversing one component flips the sign; relabelling the components does not.
sol = builtin_links()["solomon"]
print("reversed:", lk_link(PolyLink(sol.comp1[::-1], sol.comp2)).lk_total)
print("swapped: ", lk_link(sol.swapped()).lk_total)

# %%
# The uncorrected reference vertex lists show why two of them were replaced:
# one square collapses to a triangle of the opposite linking number and
# one hexagon runs straight through the other component.
for name, link in builtin_links(verbatim=True).items():
    try:
        report = lk_link(link)
        print(f"{name:>14} (verbatim): {report.lk_total:+.3f} {report.warnings}")
    except LinkIntersectionError as exc:
        print(f"{name:>14} (verbatim): rejected, {exc}")
