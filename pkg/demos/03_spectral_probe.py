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
# # How contractive is the cell?
#
# The largest singular value of the cell's Jacobian at the fixed point says
# how quickly iteration converges and how large an unrolled gradient can get.
# `spectral_norm` estimates it by power iteration on `J^T J`, with `J v` from
# central differences and `J^T w` from the tape.

# %%
import numpy as np

from fixslot import tensor as T
from fixslot.probes import spectral_norm
from fixslot.tensor import Tensor

rng = np.random.default_rng(1)
a = rng.normal(size=(8, 8))
est = spectral_norm(lambda z: T.matmul(z, Tensor(a.T)), np.zeros((1, 8)), 50, rng)
print("power iteration:", est.sigma_max)
print("dense SVD:      ", np.linalg.svd(a, compute_uv=False)[0])
print("estimates along the way:", np.round(est.history[:8], 4))

# %% [markdown]
# The same probe on slot attention, at the slots found by iteration, for a
# few weight scales. The layer norms inside the cell undo much of a uniform
# rescaling, so sigma does not simply grow with the weights.

# %%
from fixslot import slot_attention as sa
from fixslot.solvers import ITERATION, SolverConfig, solve

d, K, M = 16, 4, 32
inputs = rng.normal(size=(M, d))
for scale in (0.5, 1.0, 2.0):
    params = sa.init_params(np.random.default_rng(2), d, dtype=np.float64)
    for k in params:
        if "/w_" in k or "gru_w" in k or "mlp_w" in k:
            params[k] = params[k] * scale
    kv = sa.project_inputs(params, inputs)
    step = lambda z: sa.cell_step(params, z, kv=kv)[0]  # noqa: E731
    z_star = solve(lambda z: step(z).data, rng.normal(size=(K, d)), SolverConfig(ITERATION, 50, 1e-8)).z_star
    print(f"weight scale {scale}: sigma_max = {spectral_norm(step, z_star, 30, rng).sigma_max:.3f}")
