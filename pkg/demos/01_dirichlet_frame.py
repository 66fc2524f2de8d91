"""A countable frame in C^2 built from a Dirichlet series.

u_k = (e^{2 pi i a k} / k, e^{2 pi i b k} / k), k = 1, 2, ...
"""

# %%
import math

import numpy as np

from contframes import analyze, dirichlet_example, f2_sufficient, frame_bounds, gramian

# %% [markdown]
# Each component has squared norm sum 1/k^2 = pi^2/6. The cross term
# sum e^{2 pi i (a-b) k}/k^2 is strictly smaller in modulus unless a - b is
# an integer, so the two components are independent and we have a frame.

# %%
fam = dirichlet_example(0.5, 0.0, 100_000)
U = gramian(fam)
print("Gramian\n", np.round(U, 8))
print("limit  \n", np.round([[math.pi**2 / 6, -math.pi**2 / 12],
                              [-math.pi**2 / 12, math.pi**2 / 6]], 8))

# %%
A, B = frame_bounds(fam)
print(f"A = {A:.8f}   (pi^2/12 = {math.pi**2 / 12:.8f})")
print(f"B = {B:.8f}   (pi^2/4  = {math.pi**2 / 4:.8f})")

# %% [markdown]
# The F^2 test only looks at the Gramian entries. Here it is tight because
# both components have the same norm.

# %%
holds, gA = f2_sufficient(fam)
print("F^2 test holds:", holds, " guaranteed A:", gA)

# %%
for diff in (0.5, 0.25, 0.1, 0.01):
    A, B = frame_bounds(dirichlet_example(diff, 0.0, 20_000))
    print(f"a - b = {diff:5}:  A = {A:.5f}  B = {B:.5f}")

# %%
print(analyze(fam).as_dict())
