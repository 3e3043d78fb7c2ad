# %% [markdown]
# # Zero symbols and canonical representatives
#
# ``U_phi = 0`` exactly when ``phi`` lies in
# ``conj(alpha H^2) + conj(z)^{k-1} beta(z^k) H^2``.  The canonical
# decomposition keeps only what the operator can see.

# %%
import numpy as np

from slantlab import CircleFunction, build, canonical_symbol, monomial_inner, slant_compression, zero_test
from slantlab.sampling import random_blaschke, random_zero_symbol

rng = np.random.default_rng(5)
alpha, beta, k = random_blaschke(rng, 4, 0.5), random_blaschke(rng, 2, 0.5), 2
phi = random_zero_symbol(rng, alpha, beta, k, 512)
print("||phi|| =", round(phi.norm(), 3))
print("||U_phi||_F =", slant_compression(phi, build(alpha), build(beta), k).norm())
print("zero_test:", zero_test(phi, alpha, beta, k))

# %% [markdown]
# The plain projections can leave a residue along ``conj(z)^j beta(z^k)``
# for ``j < k`` even though the operator is zero.  The reduced form removes
# it; the smallest example is ``alpha = z^2, beta = z, k = 1, phi = z``.

# %%
a, b = monomial_inner(2), monomial_inner(1)
z = CircleFunction.monomial(1, 256)
print("plain:", canonical_symbol(z, a, b, 1).parts_norm(),
      "reduced:", canonical_symbol(z, a, b, 1, reduce=True).parts_norm())
