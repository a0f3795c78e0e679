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
# # Gradients through a fixed point
#
# A layer defined by `z* = f(z*)` can be differentiated three ways here:
# backpropagate through every solver step, solve the cotangent equation
# `u = u J + dl/dz*` exactly, or truncate that solve to a few terms of the
# series `sum_i J^i`. The scalar map `f(z) = w z + b` makes all three
# checkable by hand.

# %%
import numpy as np

from fixslot import tensor as T
from fixslot.implicit_grad import (FixedPointProblem, grad_linear_solve, grad_neumann,
                                   grad_unrolled)
from fixslot.solvers import BROYDEN, SolverConfig

params = {"w": np.array(0.5), "b": np.array(1.0)}
problem = FixedPointProblem(step=lambda P, z, ctx: T.add(T.mul(P["w"], z), P["b"]),
                            loss=lambda P, z: T.sum(z))

# %% [markdown]
# With `w = 0.5, b = 1` the fixed point is `z* = 2` and the exact gradient
# is `dl/dw = b / (1 - w)^2 = 4`.

# %%
exact, state = grad_linear_solve(problem, params, np.array(2.0),
                                 SolverConfig(BROYDEN, 40, 1e-13, broyden_memory=40))
print("exact      dl/dw =", float(exact["w"]), " cotangent u =", float(state.u))

for k in (1, 2, 3, 5, 10):
    g = grad_neumann(problem, params, np.array(2.0), k)
    print(f"Neumann{k:<3} dl/dw = {float(g['w']):.6f}  error {4 - float(g['w']):.6f}")

# %% [markdown]
# Each extra term halves the error, since the map's Jacobian is 0.5.
# Unrolling the solver from `z0 = 0` gives yet another answer, because it
# differentiates the path rather than the fixed point.

# %%
for steps in (1, 3, 7, 30):
    g, z = grad_unrolled(problem, params, np.array(0.0), steps)
    print(f"unrolled T={steps:<3} z_T = {z.item():.6f}  dl/dw = {float(g['w']):.6f}")

# %% [markdown]
# ## A linear map in several dimensions
#
# For `f(z) = A z + b` the dense answer is one matrix inverse away, so the
# truncated estimate can be compared against it directly.

# %%
rng = np.random.default_rng(0)
n = 6
a = rng.normal(size=(n, n))
a *= 0.7 / np.linalg.norm(a, 2)
lin = {"A": a, "b": rng.normal(size=n)}
lin_problem = FixedPointProblem(
    step=lambda P, z, ctx: T.add(T.matmul(z, T.transpose(P["A"])), P["b"]),
    loss=lambda P, z: T.scale(T.sum(T.mul(z, z)), 0.5))
z_star = np.linalg.solve(np.eye(n) - a, lin["b"])[None]
u_exact = np.linalg.solve((np.eye(n) - a).T, z_star[0])

for k in (1, 2, 4, 8, 16):
    g = grad_neumann(lin_problem, lin, z_star, k)
    err = np.linalg.norm(g["b"] - u_exact) / np.linalg.norm(u_exact)
    print(f"order {k:<3} relative error of dl/db: {err:.2e}")
