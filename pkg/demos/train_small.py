"""Train a small score network against the expert posteriors.

A scaled-down version of the full recipe: 150 tetrahedron views,
512 rotations per image with mode-focused sampling, 800 steps.  Even
this tiny budget edges the held-out adjusted log-likelihood above the
uniform baseline of 0; the full desk-scale recipe (see
scripts/run_experiment.py) reaches several nats.

Run:  python3 demos/train_small.py    (about four minutes on one core)
"""

import numpy as np

from so3dist import rotations as rot
from so3dist.grid import generate_grid
from so3dist.render import render_view
from so3dist.training import (
    TrainConfig,
    build_pack,
    evaluate_model,
    make_shape_and_field,
    train,
)

cfg = TrainConfig(
    shape="tetrahedron",
    n_views=150,
    res=32,
    steps=800,
    batch_images=8,
    rotations_per_image=512,
    n_modes=376,
    n_uniform=135,
    top_pool=2000,
    anchor_level=2,
    n_anchors=4,
    seed=0,
)
shape, group, field = make_shape_and_field(cfg.shape)

rng = np.random.default_rng(cfg.seed)
quats = rot.random_rotation(rng, cfg.n_views)
images = np.stack([render_view(shape, q, res=cfg.res).image for q in quats])
print(f"rendered {cfg.n_views} views")

pack = build_pack(shape, field, images, quats, cfg, progress=20)
model, trace = train(pack, cfg, trace_every=50)
print("\nstep   gkl_sdf   gkl_feat")
for step, l_sdf, l_feat in trace:
    print(f"{int(step):>4}  {l_sdf:8.4f}  {l_feat:9.4f}")

# Held-out views, evaluated on a level-3 grid against the full 12-element
# symmetry orbit of each ground truth.
held_q = rot.random_rotation(np.random.default_rng(cfg.seed + 1), 8)
held_img = np.stack([render_view(shape, q, res=cfg.res).image for q in held_q])
report = evaluate_model(model, shape, held_img, held_q, generate_grid(3))
print(
    f"\nheld-out adjusted LL {report.ll_adjusted:.2f} nats "
    f"(uniform scores 0.00), spread {report.spread_deg:.1f} deg, "
    f"recall@30deg {report.ar_at_30:.2f}"
)
