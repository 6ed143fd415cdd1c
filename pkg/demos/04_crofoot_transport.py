"""
Moving operators between model spaces
=====================================

Multiplication by sqrt(1-|w|^2) / (1 - conj(w) alpha) is a unitary map from
K_alpha onto K_{alpha_w}.  Conjugating an operator by two such maps gives
another compression with an explicitly transformed symbol.
"""

import numpy as np

from atto import (BlaschkeProduct, RationalAnalytic, atto_matrix, crofoot_operator,
                  make_symbol, transport_symbol)

alpha = BlaschkeProduct(1, (0.3,))
beta = BlaschkeProduct(1, (0.2, -0.4))
phi = make_symbol(RationalAnalytic([1, 0.3], [1, -0.4]), RationalAnalytic.polynomial([0, 0.2 - 1j]))

# Choosing a = alpha(0), b = beta(0) moves a zero of each product to the origin.
a, b = complex(alpha(0)), complex(beta(0))
Ja, Jb = crofoot_operator(alpha, a), crofoot_operator(beta, b)
print("alpha_a(0) =", Ja.target.alpha(0), " beta_b(0) =", Jb.target.alpha(0))
print("J_a unitary:", np.allclose(Ja.matrix.conj().T @ Ja.matrix, np.eye(1)))

A = atto_matrix(alpha, beta, phi).entries
moved = Jb.matrix @ A @ Ja.inverse_matrix()
phi_hat = transport_symbol(alpha, beta, a, b, phi)
direct = atto_matrix(Ja.target.alpha, Jb.target.alpha, phi_hat).entries
print("conjugated operator:\n", np.round(moved, 12))
print("operator of the transported symbol:\n", np.round(direct, 12))
print("difference:", np.linalg.norm(moved - direct, 2))
