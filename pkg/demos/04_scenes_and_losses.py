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
# # Scenes, mixture likelihood and set matching
#
# Each scene is a 2-D point cloud drawn from up to six isotropic Gaussian
# blobs. Two tasks read the slots: a mixture density (every slot is one
# component, scored by negative log likelihood) and set prediction (every
# slot predicts one blob's properties, matched to targets by the Hungarian
# algorithm).

# %%
import numpy as np

from fixslot import tasks
from fixslot.tensor import Tensor

rng = np.random.default_rng(3)
spec, cloud, target = tasks.gen_scene(rng, tasks.SceneConfig(), n_components=3)
print("centers:\n", spec.centers.round(3))
print("scales:", spec.scales.round(3), " colors:", spec.colors)
print("points per blob:", np.bincount(cloud.labels))

# %% [markdown]
# ## Mixture NLL and EM
#
# EM on the true point cloud should never increase the likelihood. Starting
# from a poor guess shows how low the NLL goes for a well-fitted mixture.

# %%
x = cloud.points.astype(np.float64)
w, mu, var = np.full(3, 1 / 3), rng.normal(size=(3, 2)) * 0.3, np.full(3, 0.2)
for it in range(15):
    nll, _ = tasks.mixture_nll_from_components(
        Tensor(np.log(w)), Tensor(mu), Tensor(np.log(var - tasks.VAR_FLOOR)), x)
    if it % 3 == 0:
        print(f"EM step {it:>2}: NLL {nll.item():.4f}")
    w, mu, var = tasks.em_step(w, mu, var, x)

# %% [markdown]
# The NLL is a density in the plane, so a tight fit goes below zero.
#
# ## Set prediction
#
# The matched loss is invariant to the order of the predictions.

# %%
head = tasks.init_property_head(rng, 8, 4, dtype=np.float64)
slots = rng.normal(size=(6, 8))
loss, perm, acc = tasks.set_prediction_loss(slots, head, target)
shuffled, _, _ = tasks.set_prediction_loss(slots[::-1], head, target)
print("loss", loss.item(), "after reversing slots", shuffled.item())
print("assignment", perm, "attribute accuracy", acc)

cost = rng.normal(size=(4, 4))
print("Hungarian on a random 4x4 cost:", tasks.hungarian_match(cost))
