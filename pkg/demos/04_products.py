# %% [markdown]
# # Products
#
# Under divisibility hypotheses the product of compressions of orders ``m``
# and ``k`` with analytic symbols is a compression of order ``km``; its
# symbol has several closed forms, each checked against the matrix product.

# %%
import numpy as np

from slantlab import build, monomial_inner, product_analytic, product_membership_L2, slant_compression
from slantlab.sampling import analytic_chain, random_analytic_poly, random_blaschke, random_trig_poly

rng = np.random.default_rng(3)
alpha, beta, gamma = analytic_chain(rng, k=2, m=2)
phi, psi = random_analytic_poly(rng, 256), random_analytic_poly(rng, 256)
rep = product_analytic(phi, psi, alpha, beta, gamma, k=2, m=2)
print("member:", rep.member, "order:", rep.order)
for name, r in rep.residuals.items():
    print(f"  {name:22s} {r:.2e}")

# %% [markdown]
# For general symbols membership of ``AB`` is decided from a finite-rank
# operator ``L`` built out of the canonical symbols of the factors.

# %%
Ka, Kb, Kg = (build(random_blaschke(rng, d, 0.5)) for d in (6, 3, 3))
B = slant_compression(random_trig_poly(rng, 512, -6, 12), Ka, Kb, 2)
A = slant_compression(random_trig_poly(rng, 512, -6, 12), Kb, Kg, 2)
rep = product_membership_L2(A, B)
print("member:", rep.member, "| direct test agrees:", rep.details["membership_test_agrees"])
print({k: f"{v:.1e}" for k, v in rep.residuals.items()})

# %% [markdown]
# With ``km >= dim K_alpha`` every product is a member and the assembled
# symbol reproduces it.

# %%
Ka = build(monomial_inner(3))
B = slant_compression(random_trig_poly(rng, 512, -6, 12), Ka, Kb, 2)
rep = product_membership_L2(A, B)
print("member:", rep.member, "xi residual:", f"{rep.residuals['xi']:.1e}")
