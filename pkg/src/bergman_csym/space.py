"""Weighted Hilbert spaces of analytic functions on the unit disk.

A single real parameter ``beta >= -1`` fixes the space.  Functions are
identified with their Maclaurin coefficient sequences and the inner product
is the weighted l2 pairing

    <f, g> = sum_n w(n) f[n] conj(g[n]),      w(n) = n! G(2+beta) / G(n+2+beta),

with ``G`` the gamma function and ``w(0) = 1``.  At ``beta = -1`` every
weight is 1 and the space is the classical sequence model of the Hardy
space; for larger ``beta`` the weights decay like ``n**-(1+beta)``, which is
why the monomials stay in the space while their normalizations grow.

Integer ``beta`` is computed through exact integer factorials so the weights
are correctly rounded; everything else goes through log-gamma.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.special import gammaln

from .errors import ArgOutsideDiskError
from .series import TruncatedSeries

__all__ = [
    "SpaceParams",
    "weight",
    "weights",
    "inner_product",
    "norm",
    "kernel_series",
    "suggest_kernel_degree",
    "weight_reciprocal_sums",
]


@dataclass(frozen=True)
class SpaceParams:
    """Weight exponent of the space; ``beta = -1`` is the unweighted case."""

    beta: float

    def __post_init__(self):
        b = float(self.beta)
        if not math.isfinite(b) or b < -1.0:
            raise ValueError(f"beta must be a finite real >= -1, got {self.beta!r}")
        object.__setattr__(self, "beta", b)

    @property
    def integer_beta(self) -> bool:
        return float(self.beta).is_integer()


@lru_cache(maxsize=None)
def _weights_cached(beta: float, n_max: int) -> np.ndarray:
    if float(beta).is_integer():
        shift = int(beta) + 1
        # 1 / C(n + beta + 1, beta + 1) with exact integer binomials.
        vals = [1.0 / math.comb(n + shift, shift) for n in range(n_max + 1)]
        arr = np.array(vals, dtype=np.float64)
    else:
        n = np.arange(n_max + 1, dtype=np.float64)
        arr = np.exp(gammaln(n + 1) + gammaln(2 + beta) - gammaln(n + 2 + beta))
        arr[0] = 1.0
    arr.flags.writeable = False
    return arr


def weights(params: SpaceParams, n_max: int) -> np.ndarray:
    """Weights ``w(0), ..., w(n_max)`` as a read-only array (cached)."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    return _weights_cached(params.beta, n_max)


def weight(params: SpaceParams, n: int) -> float:
    """The single weight ``w(n)``."""
    return float(weights(params, n)[n])


def inner_product(params: SpaceParams, f: TruncatedSeries, g: TruncatedSeries) -> complex:
    """Weighted pairing of two series; the shorter one counts as zero-padded."""
    n = min(f.coeffs.size, g.coeffs.size)
    w = weights(params, n - 1)
    return complex(np.sum(w * f.coeffs[:n] * np.conj(g.coeffs[:n])))


def norm(params: SpaceParams, f: TruncatedSeries) -> float:
    """Space norm of a truncated series."""
    n = f.coeffs.size
    w = weights(params, n - 1)
    return float(np.sqrt(np.sum(w * np.abs(f.coeffs) ** 2)))


def kernel_series(params: SpaceParams, alpha: complex, degree: int) -> TruncatedSeries:
    """Truncated reproducing kernel at ``alpha``: coefficient n is ``conj(alpha)**n / w(n)``.

    This is the expansion of ``(1 - conj(alpha) z)**-(2+beta)``; the direct
    coefficient formula is used because the weights are already exact.
    Requires ``|alpha| < 1``.
    """
    alpha = complex(alpha)
    if abs(alpha) >= 1.0:
        raise ArgOutsideDiskError(f"kernel point must satisfy |alpha| < 1, got {alpha}")
    powers = np.conj(alpha) ** np.arange(degree + 1)
    return TruncatedSeries(powers / weights(params, degree))


def suggest_kernel_degree(alpha: complex, tol: float) -> int:
    """Smallest degree whose kernel tail ratio ``|alpha|**D`` drops below ``tol``."""
    a = abs(complex(alpha))
    if a == 0.0:
        return 0
    if not 0 < tol < 1:
        raise ValueError("tol must lie in (0, 1)")
    if a >= 1.0:
        raise ArgOutsideDiskError(f"kernel point must satisfy |alpha| < 1, got modulus {a}")
    return int(math.ceil(math.log(tol) / math.log(a)))


def weight_reciprocal_sums(params: SpaceParams, n_max: int) -> np.ndarray:
    """Partial sums ``S_k = sum_{n<=k} 1/w(n)`` for ``k = 0..n_max``.

    The terms grow like ``n**(1+beta)``, so the sums are unbounded for every
    admissible ``beta``; this is the sequence whose divergence rules out
    convergent kernel-mass shortcuts at the boundary.
    """
    return np.cumsum(1.0 / weights(params, n_max))
