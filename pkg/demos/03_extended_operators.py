"""Analysis and synthesis operators on families of test vectors.

Testing a frame against a whole weighted family of vectors gives the same
bounds as testing single vectors: the extended frame operator is block
diagonal with copies of the ordinary one.
"""

# %%
import numpy as np

from contframes import (WeightedFamily, analysis, coefficient_inner, delta_embedding,
                        extended_frame_matrix, extended_frame_operator, family_inner,
                        frame_bounds, gramian, indicator_embedding, quotient_N,
                        quotient_N_extended, random_family, synthesis, total_energy)

rng = np.random.default_rng(1)
fam = random_family(7, 3, "C", seed=4)
A, B = frame_bounds(fam)

# %%
tv = WeightedFamily([0.3, 1.2, 0.7, 2.0], rng.standard_normal((4, 3)))
q = family_inner(extended_frame_operator(fam, tv), tv).real
e = total_energy(tv)
print(f"A*E = {A * e:.6f} <= <S tv, tv> = {q:.6f} <= B*E = {B * e:.6f}")

# %% adjoint check
c = analysis(fam, tv)
print(coefficient_inner(c, c), family_inner(tv, synthesis(fam, c)))

# %% embeddings
v = rng.standard_normal(3)
print(quotient_N(v, fam),
      quotient_N_extended(delta_embedding(v, 4, 2), fam),
      quotient_N_extended(indicator_embedding(v, tv.weights, [0, 3]), fam))

# %%
M = extended_frame_matrix(fam, 3)
print(np.round(np.linalg.eigvalsh(M), 6))
print(np.round(np.repeat(np.linalg.eigvalsh(gramian(fam)), 3), 6))
