"""
Periodic linking numbers
========================

A probe segment sits inside a lattice of copies of a two-segment unit cell.
Adding the linking numbers with more and more copies gives a sequence of
partial sums; how fast it settles depends on the lattice dimension.
"""

from gausslink.periodic import convergence_scan, generate_lattice, reference_lattice

# %%
# The lattice holds 2 (2n + 1)^k segments.
for k in (1, 2, 3):
    print(f"k = {k}: {len(generate_lattice(reference_lattice(k, n=2)))} segments at n = 2")

# %%
# A single cell contributes two equal terms, 1/6 each.
print("n = 0:", convergence_scan(reference_lattice(1), 0)[0].partial_lk)

# %%
# Partial sums for growing n. Along a line of alternating segments the
# contributions of each new shell shrink quickly. In three dimensions
# every shell cancels exactly, so the value never moves from 1/3.
for k, n_max in ((1, 100), (2, 40), (3, 12)):
    rows = convergence_scan(reference_lattice(k), n_max)
    picks = [r for r in rows if r.n in (0, 1, 2, 5, 10, n_max)]
    print(f"k = {k}: " + ", ".join(f"n={r.n}: {r.partial_lk:.6f}" for r in picks))
    print(f"        last delta {rows[-1].delta_vs_previous:.2e}")
