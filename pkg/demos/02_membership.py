# %% [markdown]
# # Which matrices are compressions?
#
# An operator ``U: K_alpha -> K_beta`` is a k-th order compression exactly
# when ``U - S_beta U (S_alpha^*)^k`` splits into kernel rank-one terms.
# The fit is a least-squares problem; its residual is the verdict and its
# solution gives back a symbol.

# %%
import numpy as np

from slantlab import build, membership_test, shift_invariance_test, slant_compression, symbol_from_defect
from slantlab.sampling import random_blaschke, random_matrix, random_trig_poly

rng = np.random.default_rng(1)
Ka = build(random_blaschke(rng, 5))
Kb = build(random_blaschke(rng, 3))
k = 2

# %%
phi = random_trig_poly(rng, k * 256, -6, 12)
U = slant_compression(phi, Ka, Kb, k)
for variant in "AB":
    d = membership_test(U, k, variant)
    print(f"variant {variant}: residual {d.residual:.2e}, member {d.member}")

# %% [markdown]
# The recovered symbol is usually not ``phi`` itself -- symbols are only
# determined up to the zero symbols -- but it rebuilds the same operator.

# %%
psi = symbol_from_defect(membership_test(U, k, "B"))
print("||phi - psi|| =", (phi - psi).norm())
print("||U_phi - U_psi||_F =", (slant_compression(psi, Ka, Kb, k) - U).norm())

# %% [markdown]
# A random matrix fails both tests by a wide margin.

# %%
R = random_matrix(rng, Ka, Kb, k)
print("random matrix residual:", membership_test(R, k).residual,
      "shift invariant:", shift_invariance_test(R, k))

# %% [markdown]
# Once ``dim K_alpha <= k`` the kernel terms span everything: any matrix is
# a compression.

# %%
small = build(random_blaschke(rng, 2))
R = random_matrix(rng, small, Kb, k)
print("small domain residual:", membership_test(R, k).residual)
