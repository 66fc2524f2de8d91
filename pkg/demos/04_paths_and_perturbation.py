"""Connecting frames by paths, and moving a non-frame onto a frame."""

# %%
import numpy as np

from contframes import (AuxMode, GenerationError, WeightedFamily, auxiliary_family, build_path, certify_path,
                        density_perturb, frame_bounds, is_frame, parseval_deviation,
                        path_eval, random_family, random_parseval_family, total_energy)

n = 2
w = np.random.default_rng(0).uniform(0.5, 1.5, 6 * n)

# %% [markdown]
# Two frames on a common point set. The path goes through an auxiliary frame
# whose components are independent of both endpoints.

# %%
u = random_family(6 * n, n, "R", seed=1).replace(weights=w)
v = random_family(6 * n, n, "R", seed=2).replace(weights=w)
path = build_path(u, v, "frame", seed=3)
for t in (0.0, 0.25, 0.5, 0.75, 1.0):
    print(f"t = {t:4}: bounds on u-leg {frame_bounds(path_eval(path, t))}")
print(certify_path(path, 21))

# %% [markdown]
# For Parseval endpoints the auxiliary is orthonormal and orthogonal to both,
# and each point on the segment is renormalized.

# %%
pu = random_parseval_family(6 * n, n, "C", seed=4, weights=w)
pv = random_parseval_family(6 * n, n, "C", seed=5, weights=w)
ppath = build_path(pu, pv, "parseval", seed=6)
print(max(parseval_deviation(path_eval(ppath, t, leg))
          for leg in ("u", "v") for t in np.linspace(0, 1, 21)))

# %% density: a family with proportional components
base = np.linspace(-1, 1, 6 * n)
bad = WeightedFamily(w, np.column_stack([base, 2 * base]), "R")
aux = auxiliary_family(bad, n, mode=AuxMode.INDEPENDENT, seed=7)
# lambda_min of the result scales like eps^2, so below eps ~ 1e-5 it drops
# under the default frame tolerance and no draw can be certified.
for eps in (1e-1, 1e-3, 1e-6):
    try:
        out = density_perturb(bad, aux, eps, seed=8)
    except GenerationError as exc:
        print(f"eps = {eps:g}: {exc}")
        continue
    dist = np.sqrt(total_energy(out.replace(vectors=out.vectors - bad.vectors)))
    print(f"eps = {eps:g}: distance {dist:.3e}, frame {is_frame(out)}, A = {frame_bounds(out)[0]:.3e}")
