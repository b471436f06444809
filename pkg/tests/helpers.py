"""Shared builders for randomized test inputs."""

import numpy as np

from bergman_csym import TruncatedSeries, compose_maps, involution, scaled


def random_self_map(rng):
    """Random disk self-map: an involution followed by a damped rotated one.

    The damping factor keeps a mix of automorphisms (|u| = 1) and strict
    contractions in the sample.
    """
    a = rng.uniform(0.05, 0.7) * np.exp(2j * np.pi * rng.uniform())
    b = rng.uniform(0.05, 0.7) * np.exp(2j * np.pi * rng.uniform())
    u = rng.uniform(0.5, 1.0) * np.exp(2j * np.pi * rng.uniform())
    return compose_maps(involution(a), scaled(involution(b), u))


def random_poly(rng, max_degree):
    deg = int(rng.integers(0, max_degree + 1))
    return TruncatedSeries(rng.normal(size=deg + 1) + 1j * rng.normal(size=deg + 1))
