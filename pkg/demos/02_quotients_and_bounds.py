"""Frame quotient N(v), its three equivalent forms, and the frame bounds."""

# %%
import numpy as np

from contframes import (QuotientForm, WeightedFamily, extremal_vectors, f2_sufficient,
                        frame_bounds, is_frame, mercedes_benz, quotient_N)

rng = np.random.default_rng(0)

# %%
fam = WeightedFamily(rng.uniform(0.5, 2.0, 6),
                     rng.standard_normal((6, 3)) + 1j * rng.standard_normal((6, 3)))
v = rng.standard_normal(3) + 1j * rng.standard_normal(3)
for form in QuotientForm:
    print(f"{form.value:7s} N(v) = {quotient_N(v, fam, form):.15f}")

# %% [markdown]
# The quotient is a Rayleigh quotient of the Gramian, so its extreme values
# are the extreme eigenvalues and are attained at the eigenvectors.

# %%
A, B = frame_bounds(fam)
vmin, vmax = extremal_vectors(fam)
print("A, B          ", A, B)
print("N(vmin), N(vmax)", quotient_N(vmin, fam), quotient_N(vmax, fam))
samples = [quotient_N(x, fam) for x in rng.standard_normal((2000, 3))]
print("sampled range ", min(samples), max(samples))

# %% [markdown]
# Sufficient, not necessary: this family is a frame although the F^2 test fails.

# %%
w = WeightedFamily(np.ones(2), [[1.0, 2.0], [0.0, 1.0]], "R")
print("F^2:", f2_sufficient(w), " frame:", is_frame(w), " bounds:", frame_bounds(w))
print("3 -+ 2 sqrt 2:", 3 - 2 * np.sqrt(2), 3 + 2 * np.sqrt(2))

# %%
print("Mercedes-Benz bounds:", frame_bounds(mercedes_benz()))
