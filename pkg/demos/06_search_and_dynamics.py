"""
Orbits, attracting points, and the search for a conjugation
===========================================================

Two numerical studies.  First, iteration: orbits of a holomorphic
self-map (other than the identity and rotations) funnel toward a single
attracting point, inside or on the circle depending on the class of the
map.  Second, symmetry search: an alternating projection over symmetric
unitaries tries to make a truncated composition matrix complex
symmetric.  It succeeds instantly on diagonal matrices and stalls at a
positive floor on symbols that carry the Gram-table obstruction.
"""

import numpy as np

from bergman_csym import (
    SpaceParams,
    composition_matrix,
    conjugation_search,
    csym_residual,
    denjoy_wolff,
    dilation_about,
    hurst_eigencheck,
    hyperbolic_model,
    involution,
    iterate,
    make,
    rotation,
)

np.set_printoptions(precision=5, suppress=True)

# --- attracting points -------------------------------------------------

print(f"{'map':<32} {'attracting point':>18} {'route'}")
for name, phi in (
    ("scaling model s=1/2", hyperbolic_model(0.5)),
    ("half shift z -> (z+1)/2", make(1, 1, 0, 2)),
    ("automorphism fixing -1, 1", make(3, 1, 1, 3)),
    ("spiral about 0.4", dilation_about(0.4, 0.3)),
):
    dw = denjoy_wolff(phi)
    print(f"{name:<32} {dw.point:>18.4f} {dw.route}")
print()

orbit = iterate(make(1, 1, 0, 2), 0.0, 10)
print("half-shift orbit of 0 (gap to 1 halves every step, exactly):")
print(np.abs(1 - orbit.iterates))
print()

orbit = iterate(hyperbolic_model(0.5), 0.9, 25)
print(f"scaling-model orbit of 0.9: |z_25| = {abs(orbit.iterates[-1]):.2e}, "
      f"converged={orbit.converged}, limit={orbit.limit}")
print()

# --- power functions as eigenvectors of the model map ------------------

print("residual of (f after sigma) = s^lambda f for f(z) = (1-z)^lambda:")
print(f"{'s':>6} {'lambda':>8} {'dim 128':>10} {'dim 512':>10}")
params = SpaceParams(0)
for s, lam in ((0.5, 1.0), (0.5, 2.5), (0.3, 0.7)):
    r1 = hurst_eigencheck(s, lam, params, 128, 32)
    r2 = hurst_eigencheck(s, lam, params, 512, 64)
    print(f"{s:>6} {lam:>8} {r1:>10.2e} {r2:>10.2e}")
print()

# --- conjugation search ------------------------------------------------

def search_report(name, phi, dim, iters=40):
    t = composition_matrix(phi, params, dim - 1)
    res = conjugation_search(t, iters=iters)
    best = csym_residual(t, res.conjugation)
    print(f"{name:<28} start {res.residuals[0]:>9.2e}  "
          f"best found {best:>9.2e}")


print("alternating-projection search for a symmetric-unitary conjugation (dim 16):")
search_report("rotation (diagonal)", rotation(np.exp(1.0j)), 16)
search_report("swap about 0.5", involution(0.5), 16)
search_report("spiral about 0.3", dilation_about(0.3, 0.5j), 16)
# The rotation case collapses to machine precision; the other symbols
# stall well above it.  The stall is the finite-dimensional shadow of
# the Gram-table obstruction: no conjugation works, so the best the
# search can do is a strictly positive floor.
