"""Equivolumetric rotation grids, from generation to nearest-cell lookup.

Run:  python3 demos/grid_basics.py
"""

import time

import numpy as np

from so3dist import rotations as rot
from so3dist.grid import generate_grid

# The grid at level L tiles SO(3) with 72 * 8^L equal-volume cells:
# a HEALPix sphere grid for the rotation axis direction crossed with a
# uniform subdivision of the Hopf circle fibre.
for level in range(4):
    t0 = time.perf_counter()
    grid = generate_grid(level)
    dt = time.perf_counter() - t0
    print(
        f"level {level}: {len(grid):>7} cells, "
        f"cell radius {np.degrees(grid.cell_radius):5.2f} deg, "
        f"built in {dt:.2f}s"
    )

# Every rotation is within about one cell radius of some grid point.
grid = generate_grid(3)
rng = np.random.default_rng(0)
samples = rot.random_rotation(rng, 10_000)
idx = grid.nearest(samples)
d = rot.geodesic_distance(samples, grid.quats[idx])
print(
    f"\nnearest-cell distance over 10k random rotations: "
    f"mean {np.degrees(d.mean()):.3f} deg, "
    f"max {np.degrees(d.max()):.3f} deg "
    f"(cell radius {np.degrees(grid.cell_radius):.3f} deg)"
)

# Cells have equal Haar volume, so cell counts inside a geodesic ball of
# radius t are proportional to the ball's volume fraction (t - sin t) / pi.
center = rot.random_rotation(rng)
d = rot.geodesic_distance(grid.quats, np.broadcast_to(center, (len(grid), 4)))
for deg in (15, 30, 60):
    t = np.deg2rad(deg)
    frac = (t - np.sin(t)) / np.pi
    inside = int((d < np.deg2rad(deg)).sum())
    print(
        f"ball radius {deg:>2} deg: {inside:>6} cells, "
        f"expected {frac * len(grid):8.1f}"
    )
