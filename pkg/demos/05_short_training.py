# ---
# jupyter:
#   jupytext:
#     formats: ipynb,py:percent
#     text_representation:
#       extension: .py
#       format_name: percent
#       format_version: '1.3'
#   kernelspec:
#     display_name: Python 3
#     language: python
#     name: python3
# ---

# %% [markdown]
# # A short training comparison
#
# Two matched runs on the mixture task: "vanilla" backpropagates through all
# seven forward iterations, the implicit run applies the cell once more at the
# detached fixed point. Clipping is switched off so the raw gradient norms are
# visible. A few hundred steps on a reduced model take well under a minute; the
# full-size comparison lives in `scripts/acceptance_sweeps.sh`.

# %%
import numpy as np

from fixslot import trainer
from fixslot.config import TrainConfig

base = TrainConfig().replace(**{
    "model.d": 16, "batch_size": 16, "steps": 300, "clip_max_norm": 0.0,
    "warmup_steps": 50, "probe_interval": 50, "eval_interval": 100, "val_scenes": 64,
})
runs = {}
for name, kind in (("implicit", "neumann"), ("vanilla", "unrolled")):
    runs[name] = trainer.train(base.replace(**{"estimator.kind": kind}))
    s = runs[name].summary
    print(f"{name:<9} val NLL {s['final_val_loss']:.4f}  max |g| {s['max_grad_norm']:.2f}  "
          f"max sigma {s['max_sigma']:.3f}  {s['wall_s']:.0f}s")

# %%
for name, res in runs.items():
    norms = np.array([r["grad_norm_pre_clip"] for r in res.records])
    print(name, "median gradient norm per 75-step block:",
          [round(float(np.median(b)), 3) for b in np.array_split(norms, 4)])
    print(name, "backward tape nodes:", res.records[0]["tape_nodes_backward"])
