# %% [markdown]
# # Compressed slant Toeplitz operators on model spaces
#
# A symbol ``phi`` on the circle, a slant order ``k`` and two inner functions
# ``alpha, beta`` give the operator ``f -> P_beta W_k(phi f)`` from ``K_alpha``
# to ``K_beta``.  ``W_k`` keeps every k-th Fourier coefficient.

# %%
import numpy as np

from slantlab import CircleFunction, FiniteBlaschke, build, monomial_inner, slant_compression
from slantlab.operators import monomial_slant_matrix

np.set_printoptions(precision=3, suppress=True)

# %% [markdown]
# On monomial spaces ``K_{z^n}`` is the polynomials of degree < n, so the
# matrix is a corner of the doubly infinite ``[a_{ki-j}]``.

# %%
Ka, Kb = build(monomial_inner(4)), build(monomial_inner(2))
phi = CircleFunction.from_terms({-1: 2.0, 0: 1.0, 1: 0.5j, 3: -1.0}, band=512)
U = slant_compression(phi, Ka, Kb, k=2)
print(U.entries)
print("matches [a_{2i-j}]:",
      np.allclose(U.entries, monomial_slant_matrix(phi.coeff, 2, 2, 4)))

# %% [markdown]
# With genuine Blaschke zeros the orthonormal basis is the rational
# Takenaka-Malmquist system and the matrix has no simple pattern, but it is
# still ``<P_beta W_k(phi e_j), e_i>``.

# %%
alpha = FiniteBlaschke((0.3, -0.2 + 0.4j, 0.0))
beta = FiniteBlaschke((0.5j, 0.1))
U = slant_compression(phi, build(alpha), build(beta), k=2)
print(U)
print("JSON keys:", sorted(U.to_dict()))
