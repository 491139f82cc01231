"""Rational cube configurations and their cells in the graph poset.

Configurations of disjoint axis-aligned boxes in the cube (open boxes sit
on the floor) are indexed by graph elements: the cell index records, for
every pair of boxes, the lowest level at which they are separated.  The
index is minimal, monotone along the poset, and compatible with
substitution of configurations.
"""

import random

from operadix import geometry, graphs

cfg = geometry.random_config(2, n_closed=2, n_open=1, seed=42)
print("configuration (m=2, two closed boxes, one open box):")
for box in cfg.closed_boxes + cfg.open_boxes:
    print("  ", [(str(lo), str(hi)) for lo, hi in box.intervals])

alpha = geometry.cell_index(cfg)
print("\ncell index edges:")
for (i, j), (mu, orient) in sorted(alpha.edge_dict().items()):
    print("  (%d,%d): level %d, orientation %+d" % (i, j, mu, orient))
print("cell contains its configuration:", geometry.cell_contains(alpha, cfg))

rng = random.Random(0)
x = geometry.random_config(2, 2, 0, seed=rng)
y = geometry.random_config(2, 1, 0, seed=rng)
z = geometry.sc_compose(x, 1, y)
ax, ay, az = map(geometry.cell_index, (x, y, z))
betas = [ay] + [
    graphs.GraphElement((False,), {}, False) for _ in range(ax.n - 1)
]
print(
    "\ncell_index(x o_1 y) <= cell_index(x) o_1 cell_index(y):",
    graphs.leq(az, graphs.compose(ax, betas)),
)
