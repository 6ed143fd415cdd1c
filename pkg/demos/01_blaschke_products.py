"""
Finite Blaschke products
========================

Build a product from its zeros, evaluate it, and compose it with a disk
automorphism.
"""

import numpy as np

from atto import BlaschkeProduct, crofoot_target, involution_check

# A product is a unimodular constant and an ordered list of zeros.
B = BlaschkeProduct(np.exp(0.4j), (0.5, -0.3 + 0.2j, 0j))
print("degree:", B.degree)
print("B(0.5) =", B(0.5))

# On the unit circle every value has modulus one.
t = np.exp(2j * np.pi * np.arange(8) / 8)
print("|B| on the circle:", np.round(np.abs(B(t)), 15))

# The derivative uses the product rule, so it is exact at the zeros too.
print("B'(0.5) =", B.derivative(0.5))

# (w - B) / (1 - conj(w) B) is again a Blaschke product of the same degree;
# its zeros are the solutions of B(z) = w.
w = 0.25 - 0.1j
Bw = crofoot_target(B, w)
print("zeros of B_w:", np.round(Bw.zeros_array, 12))
print("B at those zeros:", np.round(B(Bw.zeros_array), 12))

# Composing twice with the same w gives back the original function,
# even for repeated zeros such as z**3.
print("involution holds:", involution_check(B, w))
print("involution holds for z**3:", involution_check(BlaschkeProduct.monomial(3), 0.6j))
