"""Reuse an expert posterior computed at one viewpoint for another.

The expensive part of supervision is scoring every grid rotation for a
view.  But the posterior for view B is just the posterior for view A
with every rotation right-composed by the relative pose; the expert
geometry is identical.  This demo checks that the transferred weights
agree with direct expert scoring at the same rotations.

Run:  python3 demos/viewpoint_transfer.py
"""

import numpy as np

from so3dist import rotations as rot
from so3dist.experts import (
    ExpertConfig,
    poe_log_weights,
    precompute_distribution,
    rotate_grid_measure,
)
from so3dist.grid import generate_grid
from so3dist.render import render_view, sample_visible
from so3dist.training import make_shape_and_field

rng = np.random.default_rng(0)
shape, group, field = make_shape_and_field("tetrahedron")
cfg = ExpertConfig()
grid = generate_grid(3)

# Score view A once, on the full grid.
q_a = rot.random_rotation(rng)
cam_a, canon_a = sample_visible(render_view(shape, q_a, res=64), 300, rng)
measure_a = precompute_distribution(shape, field, cam_a, canon_a, grid, cfg)
print(f"precomputed posterior for view A over {len(grid)} rotations")

# Transfer to view B by composing with the relative rotation.
q_b = rot.random_rotation(rng)
q_rel = rot.quat_mul(rot.quat_conj(q_a), q_b)
transferred = rotate_grid_measure(measure_a, q_rel)

# Direct expert scores at the transferred rotations, using B's points.
cam_b, canon_b = sample_visible(render_view(shape, q_b, res=64), 300, rng)
lw_s, lw_f = poe_log_weights(shape, field, cam_b, canon_b,
                             transferred.rotations, cfg)
direct = np.exp(lw_s + lw_f)

top_t = set(np.argsort(transferred.weights)[-12:])
top_d = set(np.argsort(direct)[-12:])
jaccard = len(top_t & top_d) / len(top_t | top_d)
print(f"top-12 Jaccard between transferred and direct scoring: {jaccard:.3f}")

# The surviving mass should sit on the same symmetry orbit either way,
# so compare the top modes modulo the 12-element group.
best_t = transferred.rotations[max(top_t, key=lambda i: transferred.weights[i])]
best_d = transferred.rotations[max(top_d, key=lambda i: direct[i])]
orbit_t = rot.quat_mul(group.elements, np.broadcast_to(best_t, (group.order, 4)))
d = rot.geodesic_distance(orbit_t, np.broadcast_to(best_d, (group.order, 4)))
print(f"top transferred mode vs top direct mode: "
      f"{np.degrees(d.min()):.2f} deg apart modulo symmetry")
