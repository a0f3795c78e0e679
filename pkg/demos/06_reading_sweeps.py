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
# # Reading the sweep outputs
#
# `fixslot matrix` and `fixslot ablate` leave one directory per run plus a
# summary CSV; `ablate` also writes every run's per-step losses and gradient
# norms to `curves.csv`. Everything needed for a figure is there without
# re-training. This notebook reads whatever `scripts/acceptance_sweeps.sh`
# has produced so far.

# %%
import csv
import os
from collections import defaultdict
from pathlib import Path

import numpy as np

root = Path(os.environ.get("FIXSLOT_OUT", "runs"))
for summary in sorted(root.glob("*/*_summary.csv")):
    print(f"== {summary.relative_to(root)}")
    with open(summary, newline="") as fh:
        for row in csv.DictReader(fh):
            print(f"  {row['name']:<20} seed {row['seed']}  {row['status']:<9} "
                  f"val NLL {row['final_val_loss'] or '-':<12} max |g| {float(row['max_grad_norm'] or 'nan'):.3g}")

# %% [markdown]
# Gradient norms without clipping, summarised per run from the long-format
# curves file.

# %%
curves = root / "ablate_clip" / "curves.csv"
if curves.exists():
    norms = defaultdict(list)
    with open(curves, newline="") as fh:
        for row in csv.DictReader(fh):
            norms[(row["run"], row["seed"])].append(float(row["grad_norm_pre_clip"]))
    for (run, seed), g in sorted(norms.items()):
        g = np.array(g)
        print(f"{run:<18} seed {seed}: median {np.median(g):.3g}  99th pct {np.percentile(g, 99):.3g}  max {g.max():.3g}")
