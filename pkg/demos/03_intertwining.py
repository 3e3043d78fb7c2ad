# %% [markdown]
# # Intertwining the compressed shifts
#
# When does ``S_beta U = U S_alpha^k`` hold?  The answer is a coset built
# from ``g = gcd(alpha, beta(z^k))``.

# %%
import numpy as np

from slantlab import (CircleFunction, FiniteBlaschke, build, commutator_formula_check,
                      intertwine_coset_basis, intertwine_residual, monomial_inner,
                      slant_compression)

# %% [markdown]
# Monomial case: ``alpha = z^{2k}``, ``beta = z^2``, ``phi = conj(z)^{k-1}``.

# %%
for k in (2, 3):
    Ka, Kb = build(monomial_inner(2 * k)), build(monomial_inner(2))
    U = slant_compression(CircleFunction.monomial(-(k - 1), 256 * k), Ka, Kb, k)
    print(k, U.entries.real.astype(int).tolist(), intertwine_residual(U, k))

# %% [markdown]
# A Blaschke pair sharing one zero after the substitution ``z -> z^2``.

# %%
beta = FiniteBlaschke((0.25,))
alpha = FiniteBlaschke((0.5, 0.3j, 0.1))          # 0.5 is a square root of 0.25
Ka, Kb = build(alpha), build(beta)
for direction in ("shift", "backshift"):
    syms = intertwine_coset_basis(alpha, beta, 2, direction, 512)
    res = [intertwine_residual(slant_compression(s, Ka, Kb, 2), 2, direction) for s in syms]
    print(direction, len(syms), "symbols, residuals", np.round(res, 14))

# %% [markdown]
# For a general symbol both commutators are finite-rank and given in closed
# form; the check returns the mismatch of each identity.

# %%
phi = CircleFunction.from_terms({-2: 1.0, 1: 1j, 4: 0.3}, 512)
print(commutator_formula_check(phi, alpha, beta, 2))
