"""
Weighted coefficient spaces and their point-evaluation kernels
==============================================================

Every space in this toolkit is a sequence space in disguise: an analytic
function on the disk is identified with its Maclaurin coefficients, and
the inner product weights each coefficient by a ratio of Gamma values.
This script prints the weight sequences, builds a point-evaluation
kernel, and verifies that pairing against it recovers function values.

Run:  python3 demos/01_weights_and_kernels.py
"""

import numpy as np

from bergman_csym import (
    SpaceParams,
    TruncatedSeries,
    inner_product,
    kernel_series,
    suggest_kernel_degree,
    weight_reciprocal_sums,
    weights,
)

np.set_printoptions(precision=6, suppress=True)

# --- weight sequences for a few parameter values -----------------------

print("monomial norms squared, n = 0..7")
print(f"{'beta':>6} | " + " ".join(f"{n:>9d}" for n in range(8)))
for beta in (-1.0, -0.5, 0.0, 1.0, 2.0):
    w = weights(SpaceParams(beta), 7)
    print(f"{beta:>6} | " + " ".join(f"{x:>9.5f}" for x in w))

# beta = -1 is the classical all-ones case; integer beta gives exact
# reciprocals of binomial coefficients.
print()
print("beta=1 weights vs 1/C(n+2,2):", weights(SpaceParams(1), 5))
print()

# --- a point-evaluation kernel -----------------------------------------

params = SpaceParams(0)
alpha = 0.4 + 0.2j
degree = suggest_kernel_degree(abs(alpha), 1e-12)
print(f"kernel at alpha = {alpha}, truncation degree {degree}")
k = kernel_series(params, alpha, degree)
print("first kernel coefficients:", k.coeffs[:5])

# Pairing any polynomial against the kernel evaluates it at alpha.
f = TruncatedSeries([1.0, -2.0, 0.0, 0.5, 1.5])
pairing = inner_product(params, f.resized(degree), k)
print(f"<f, K_alpha> = {pairing:.12f}")
print(f"f(alpha)     = {f(alpha):.12f}")
print(f"difference   = {abs(pairing - f(alpha)):.2e}")
print()

# --- divergence of the reciprocal weight sums --------------------------

# The partial sums of 1/w(n) blow up for every admissible parameter.
# This is the quantitative input behind the non-existence results the
# Gram tables probe: no single coefficient sequence can pair boundedly
# against all kernels.
print("partial sums of reciprocal weights")
print(f"{'beta':>6} | {'N=10':>12} {'N=100':>12} {'N=1000':>12}")
for beta in (-1.0, 0.0, 2.0):
    sums = weight_reciprocal_sums(SpaceParams(beta), 1000)
    print(f"{beta:>6} | {sums[9]:>12.2f} {sums[99]:>12.2f} {sums[999]:>12.2f}")
