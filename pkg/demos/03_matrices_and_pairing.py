"""
Matrix compressions of composition operators
============================================

Composing with a self-map of the disk is a bounded linear operator on
each weighted coefficient space.  In the orthonormal monomial basis it
becomes an (infinite) matrix; the toolkit builds the top-left corner.
This script shows what those corners look like and measures how well a
finite corner captures the exact adjoint identity
<f after phi, K_alpha> = f(phi(alpha)).
"""

import numpy as np

from bergman_csym import (
    SpaceParams,
    TruncatedSeries,
    apply_map,
    composition_matrix,
    compose_maps,
    involution,
    kernel_series,
    make,
    rotation,
    to_coords,
)

np.set_printoptions(precision=4, suppress=True, linewidth=120)

params = SpaceParams(0)

# --- shapes of the corners ---------------------------------------------

print("rotation by i: the matrix is diagonal (monomials are eigenvectors)")
print(np.diag(composition_matrix(rotation(1j), params, 5).mat))
print()

print("half shift z -> (z+1)/2: upper triangular, columns from powers of the symbol")
print(composition_matrix(make(1, 1, 0, 2), params, 5).mat.real)
print()

print("swap map about 0.5: full matrix, entries decay away from the corner")
print(np.abs(composition_matrix(involution(0.5), params, 5).mat))
print()

# --- the compression respects composition ------------------------------

phi = involution(0.4)
psi = make(1, 1, 0, 2)
both = compose_maps(phi, psi)
dim = 48
# product of corners vs corner of the product: agreement on the top block
a = composition_matrix(psi, params, dim).mat @ composition_matrix(phi, params, dim).mat
b = composition_matrix(both, params, dim).mat
print(f"corner(C_psi) corner(C_phi) vs corner(C_(phi after psi)), top 8x8 gap: "
      f"{np.max(np.abs((a - b)[:8, :8])):.2e}")
print()

# --- pairing quality vs truncation dimension ---------------------------

# The adjoint of composition sends the kernel at alpha to the kernel at
# phi(alpha).  At finite dimension that identity picks up a truncation
# error which dies geometrically.
rng = np.random.default_rng(7)
f = TruncatedSeries(rng.normal(size=9))
alpha = 0.6
print("pairing error |<C_phi f, K_alpha> - f(phi(alpha))| for the swap map:")
print(f"{'dim':>6} {'error':>12}")
target = f(apply_map(phi, alpha))
for dim in (8, 16, 32, 64, 128):
    t = composition_matrix(phi, params, dim)
    moved = t.mat @ to_coords(params, f, dim + 1)
    k = to_coords(params, kernel_series(params, alpha, dim), dim + 1)
    print(f"{dim:>6} {abs(np.vdot(k, moved) - target):>12.2e}")
