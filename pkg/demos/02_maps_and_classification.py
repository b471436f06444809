"""
Fractional-linear self-maps of the disk: fixed points and classes
=================================================================

A map z -> (az + b)/(cz + d) that sends the disk into itself falls into
one of a handful of dynamical classes, read off from where its fixed
points sit and how fast it moves points near them.  This script builds a
gallery of maps, classifies each, and shows the conjugation that brings
a boundary-attracted non-automorphism to its scaling model.
"""

import numpy as np

from bergman_csym import (
    classify,
    compose_maps,
    dilation_about,
    elliptic_order,
    fixed_points,
    hyperbolic_model,
    hyperbolic_normal_form,
    involution,
    make,
    rotation,
    to_series,
)

gallery = [
    ("identity", make(1, 0, 0, 1)),
    ("quarter turn", rotation(1j)),
    ("swap 0 and 1/2", involution(0.5)),
    ("half shift toward 1", make(1, 1, 0, 2)),
    ("scaling model s=1/2", hyperbolic_model(0.5)),
    ("disk automorphism, fixed points -1 and 1", make(3, 1, 1, 3)),
    ("spiral about 0.3", dilation_about(0.3, 0.4 * np.exp(1j))),
]

print(f"{'map':<42} {'class':<28} {'automorphism'}")
for name, phi in gallery:
    c = classify(phi)
    print(f"{name:<42} {c.kind.value:<28} {c.is_automorphism}")
print()

# --- fixed point detail for the swap map -------------------------------

phi = involution(0.5)
report = fixed_points(phi)
print("fixed points of the swap map z -> (z - 1/2)/(z/2 - 1):")
for p, loc, lam in zip(report.points, report.locations, report.multipliers):
    print(f"  z = {p:.6f}  ({loc}), derivative there {lam:.3f}")
# Both multipliers are -1: the map is its own inverse, so its derivative
# at any fixed point squares to 1.
print()

# --- reduction to the scaling model ------------------------------------

# Conjugating the model by a disk involution hides the scaling structure;
# the normal form recovers it.
inner = involution(0.3)
hidden = compose_maps(inner, compose_maps(hyperbolic_model(0.5), inner))
s, conj = hyperbolic_normal_form(hidden)
print(f"recovered scaling factor s = {s.real:.6f} (built from s = 0.5)")
print(f"conjugating map coefficients: a={conj.a:.3f} b={conj.b:.3f} c={conj.c:.3f} d={conj.d:.3f}")
print()

# --- rotation orders ---------------------------------------------------

print("orders of some elliptic factors:")
for k in (2, 3, 8):
    lam = np.exp(2j * np.pi / k)
    print(f"  exp(2 pi i / {k}): order {elliptic_order(lam, 64)}")
print(f"  exp(i): order {elliptic_order(np.exp(1j), 64)}  (irrational angle, no finite order)")
print()

# --- series view -------------------------------------------------------

print("Maclaurin coefficients of the scaling model, degree 6:")
print(np.round(to_series(hyperbolic_model(0.5), 6).coeffs.real, 6))
