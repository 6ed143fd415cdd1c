"""
When does a symbol give the zero operator?
==========================================

The compression f -> P_beta(phi f) from K_alpha to K_beta vanishes exactly
for symbols of the form conj(alpha h1) + beta h2.  This script builds such
symbols, perturbs them, and compares the symbol-level test with the
assembled matrix.
"""

import numpy as np

from atto import (BlaschkeProduct, RationalAnalytic, atto_matrix, canonical_pair,
                  is_zero_symbol, make_symbol, pair_ambiguity_shift, zero_class_symbol)

alpha = BlaschkeProduct(np.exp(0.3j), (0.4 - 0.2j, -0.5j))
beta = BlaschkeProduct(1, (0.3, 0.1 + 0.1j, -0.6))

h1 = RationalAnalytic.polynomial([1.0, 0.5j])
h2 = RationalAnalytic([0.2, -1.0], [1.0, -0.4])       # pole at 2.5
phi = zero_class_symbol(alpha, beta, h1, h2)

verdict, cert = is_zero_symbol(alpha, beta, phi)
print("symbol test says zero:", verdict, " fitted c =", np.round(cert.c, 12))
print("matrix norm:", atto_matrix(alpha, beta, phi).norm)

# For phi = conj(alpha) the certificate constant is conj(alpha(0)).
only_alpha = zero_class_symbol(alpha, beta, RationalAnalytic.constant(1), RationalAnalytic.zero())
print("c for conj(alpha):", np.round(is_zero_symbol(alpha, beta, only_alpha)[1].c, 12),
      " conj(alpha(0)):", np.round(np.conj(alpha(0)), 12))

# Add z and the operator no longer vanishes.
bumped = phi + make_symbol(RationalAnalytic.polynomial([0, 1e-3]))
print("perturbed: zero?", is_zero_symbol(alpha, beta, bumped)[0],
      " norm:", f"{atto_matrix(alpha, beta, bumped).norm:.3e}")

# Every operator has a pair (chi, psi) in K_alpha x K_beta with the same
# matrix; the pair is unique up to a one-parameter shift.
s = make_symbol(RationalAnalytic.polynomial([1, 2, 3]), RationalAnalytic.polynomial([0, 1j]))
pair = canonical_pair(alpha, beta, s)
m = atto_matrix(alpha, beta, s).entries
for c in (0, 1, 2 - 3j):
    shifted = pair_ambiguity_shift(pair, c)
    gap = np.max(np.abs(atto_matrix(alpha, beta, shifted.symbol()).entries - m))
    print(f"shift c = {c}: matrix gap {gap:.2e}")
