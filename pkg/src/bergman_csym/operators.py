"""Finite matrix models of composition, multiplication, and adjoint operators.

All matrices act on coordinates in the orthonormal monomial basis

    e_n = z**n / sqrt(w(n)),

so the matrix of an operator adjoint is literally the conjugate transpose.
A series ``f = sum f[n] z**n`` has coordinates ``f[n] * sqrt(w(n))``; the
helpers :func:`to_coords` and :func:`from_coords` convert both ways.  A
matrix of dimension D+1 is the compression of the infinite operator to
degrees 0..D.  Compressions of products are not products of compressions,
which is why the verification routines compare only a low-degree block of a
much larger truncation: the entries of that block converge geometrically as
the truncation degree grows.

The column of a composition matrix is explicit: column j of ``C_phi`` holds
the coefficients of ``phi**j`` rescaled entrywise by ``sqrt(w(n)/w(j))``,
and multiplication by a series is a scaled lower-triangular Toeplitz
matrix.  The adjoint of multiplication by z acts on coefficients as

    (Mz* f)[n] = (n + 1) / (n + 2 + beta) * f[n + 1],

a ratio of consecutive weights; its m-th power sends ``z**n`` to an exact
scalar multiple of ``z**(n-m)`` (zero once m exceeds n), with the scalar a
plain product of m weight ratios.  These exact coefficient routes are used
as ground truth against the conjugate-transpose matrix route in the tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import toeplitz

from .errors import (
    ArgOutsideDiskError,
    DimMismatchError,
    NonIntegerBetaError,
    NotSelfMapError,
)
from .lft import Lft, involution, make, to_series
from .series import TruncatedSeries, binomial_expand, compose, mul
from .space import SpaceParams, kernel_series, weights

__all__ = [
    "OperatorMatrix",
    "to_coords",
    "from_coords",
    "composition_matrix",
    "multiplication_matrix",
    "mzstar_apply",
    "mzstar_on_monomial",
    "hurst_factors",
    "verify_hurst",
    "involution_adjoint_apply",
]


@dataclass(frozen=True)
class OperatorMatrix:
    """A square complex matrix tagged with the space it acts on."""

    mat: np.ndarray
    params: SpaceParams

    def __post_init__(self):
        arr = np.array(self.mat, dtype=np.complex128, copy=True)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise DimMismatchError(f"operator matrix must be square, got shape {arr.shape}")
        arr.flags.writeable = False
        object.__setattr__(self, "mat", arr)

    @property
    def dim(self) -> int:
        return self.mat.shape[0]

    @property
    def degree(self) -> int:
        return self.dim - 1

    def apply(self, f: TruncatedSeries) -> TruncatedSeries:
        """Apply to a series: convert to coordinates, multiply, convert back."""
        return from_coords(self.params, self.mat @ to_coords(self.params, f, self.dim))

    def adjoint(self) -> "OperatorMatrix":
        """Adjoint in the orthonormal basis: conjugate transpose."""
        return OperatorMatrix(self.mat.conj().T, self.params)

    def block(self, k: int) -> np.ndarray:
        """Copy of the top-left k-by-k block."""
        return self.mat[:k, :k].copy()

    def __matmul__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        if self.params.beta != other.params.beta:
            raise DimMismatchError("operators live on different spaces")
        if self.dim != other.dim:
            raise DimMismatchError(f"dimension mismatch: {self.dim} vs {other.dim}")
        return OperatorMatrix(self.mat @ other.mat, self.params)


def to_coords(params: SpaceParams, f: TruncatedSeries, dim: int) -> np.ndarray:
    """Coordinates of a series in the orthonormal basis, padded or cut to ``dim``."""
    w = weights(params, dim - 1)
    vec = np.zeros(dim, dtype=np.complex128)
    n = min(dim, f.coeffs.size)
    vec[:n] = f.coeffs[:n] * np.sqrt(w[:n])
    return vec


def from_coords(params: SpaceParams, vec: np.ndarray) -> TruncatedSeries:
    """Series whose orthonormal coordinates are ``vec``."""
    vec = np.asarray(vec, dtype=np.complex128).reshape(-1)
    w = weights(params, vec.size - 1)
    return TruncatedSeries(vec / np.sqrt(w))


def _symbol_series(symbol, degree: int) -> TruncatedSeries:
    if isinstance(symbol, Lft):
        return to_series(symbol, degree)
    f = symbol.resized(degree)
    # No closed self-map test exists for a bare series; sample just inside
    # the circle and insist the values stay in the open disk.
    zs = (1.0 - 1e-3) * np.exp(2j * np.pi * np.arange(512) / 512)
    if np.max(np.abs(f(zs))) >= 1.0:
        raise NotSelfMapError("series symbol exceeds modulus 1 on |z| = 1 - 1e-3")
    return f


def composition_matrix(symbol, params: SpaceParams, degree: int) -> OperatorMatrix:
    """Compression of ``f -> f o symbol`` to degrees 0..``degree``.

    ``symbol`` may be a fractional linear self-map or a truncated series.
    Column j is built from the truncated power ``symbol**j``, so the matrix
    is exact for polynomial symbols and carries only the tail truncation
    of the powers otherwise.
    """
    phi = _symbol_series(symbol, degree)
    dim = degree + 1
    w = weights(params, degree)
    sqrtw = np.sqrt(w)
    mat = np.zeros((dim, dim), dtype=np.complex128)
    power = TruncatedSeries.one(degree)
    for j in range(dim):
        mat[:, j] = power.coeffs * sqrtw / sqrtw[j]
        if j < degree:
            power = mul(power, phi, degree)
    return OperatorMatrix(mat, params)


def multiplication_matrix(psi: TruncatedSeries, params: SpaceParams, degree: int) -> OperatorMatrix:
    """Compression of ``f -> psi * f``: a weighted lower-triangular Toeplitz matrix.

    Exact on any ``f`` with ``deg f <= degree - deg psi``; beyond that the
    product would overflow the truncation and the top rows lose mass.
    """
    dim = degree + 1
    col = np.zeros(dim, dtype=np.complex128)
    n = min(dim, psi.coeffs.size)
    col[:n] = psi.coeffs[:n]
    row = np.zeros(dim, dtype=np.complex128)
    row[0] = col[0]
    sqrtw = np.sqrt(weights(params, degree))
    mat = toeplitz(col, row) * (sqrtw[:, None] / sqrtw[None, :])
    return OperatorMatrix(mat, params)


def mzstar_apply(params: SpaceParams, f: TruncatedSeries) -> TruncatedSeries:
    """Adjoint of multiplication by z, applied exactly on coefficients.

    Coefficient n of the result is ``(n+1)/(n+2+beta) * f[n+1]``; the ratio
    is the exact gamma-quotient of consecutive weights, so no special
    functions are needed.
    """
    deg = f.degree
    out = np.zeros(deg + 1, dtype=np.complex128)
    if deg > 0:
        n = np.arange(deg, dtype=np.float64)
        out[:deg] = (n + 1.0) / (n + 2.0 + params.beta) * f.coeffs[1:]
    return TruncatedSeries(out)


def mzstar_on_monomial(params: SpaceParams, m: int, n: int):
    """Exact action of the m-th power of Mz* on ``z**n``.

    Returns ``(coeff, n - m)`` with ``(Mz*)**m z**n = coeff * z**(n-m)``.
    The coefficient is the product of the m weight ratios picked up one
    degree at a time, and is exactly zero once ``m > n``.
    """
    if m < 0 or n < 0:
        raise ValueError("m and n must be nonnegative")
    if m > n:
        return 0.0, n - m
    coeff = 1.0
    for i in range(m):
        coeff *= (n - i) / (n + 1.0 + params.beta - i)
    return coeff, n - m


def hurst_factors(phi: Lft, params: SpaceParams, degree: int):
    """Factors ``(g, sigma, h)`` of the adjoint identity ``C_phi* = M_g C_sigma M_h*``.

    For ``phi = (a z + b)/(c z + d)`` the companion self-map and the two
    multipliers are

        sigma(z) = (conj(a) z - conj(c)) / (-conj(b) z + conj(d)),
        g(z) = (-conj(b) z + conj(d)) ** -(beta+2),
        h(z) = (c z + d) ** (beta+2),

    expanded here to the requested degree (principal branches for
    non-integer exponents; both bases are zero-free on the closed disk
    because ``|b| < |d|`` for any self-map).  When ``phi`` is the involution
    at ``alpha`` this specializes to ``sigma`` the involution itself, ``g``
    the reproducing kernel at ``alpha`` and ``h`` its reciprocal.
    """
    if not phi.is_self_map:
        raise NotSelfMapError(f"{phi!r} is not a self-map of the disk")
    a, b, c, d = phi.a, phi.b, phi.c, phi.d
    sigma = make(np.conj(a), -np.conj(c), -np.conj(b), np.conj(d))
    p = params.beta + 2.0
    db = np.conj(d)
    g = complex(db) ** (-p) * binomial_expand(-np.conj(b) / db, -p, degree)
    h = complex(d) ** p * binomial_expand(c / d, p, degree)
    return g, sigma, h


def verify_hurst(phi: Lft, params: SpaceParams, degree: int, block: int) -> float:
    """Frobenius residual of the adjoint factorization on a low-degree block.

    Builds all four matrices at the full ``degree`` and returns

        || (C_phi^H - M_g C_sigma M_h^H)[:block, :block] ||_F.

    The block must satisfy ``block <= degree // 4`` so that truncation
    leakage from the matrix products stays out of the compared entries.
    """
    if block > degree // 4:
        raise DimMismatchError(
            f"block {block} too large for degree {degree}; need block <= degree/4"
        )
    g, sigma, h = hurst_factors(phi, params, degree)
    cphi = composition_matrix(phi, params, degree)
    csigma = composition_matrix(sigma, params, degree)
    mg = multiplication_matrix(g, params, degree)
    mh = multiplication_matrix(h, params, degree)
    resid = cphi.mat.conj().T - mg.mat @ csigma.mat @ mh.mat.conj().T
    return float(np.linalg.norm(resid[:block, :block]))


def _binomial_alpha_weights(alpha: complex, beta_int: int) -> np.ndarray:
    """The finite coefficients ``C(2+beta, k) (-alpha)**k``, k = 0..2+beta."""
    top = beta_int + 2
    return np.array(
        [math.comb(top, k) * (-alpha) ** k for k in range(top + 1)], dtype=np.complex128
    )


def _cowen_sum(
    params: SpaceParams, alpha: complex, f: TruncatedSeries, degree: int, coeffs: np.ndarray
) -> TruncatedSeries:
    """Evaluate ``sum_k coeffs[k] M_K C_inv (Mz*)**k f`` at the given truncation.

    ``M_K`` multiplies by the kernel at ``alpha`` and ``C_inv`` composes with
    the involution at ``alpha``.  Factoring the sum out lets the tests drive
    it with deliberately wrong coefficient sequences.
    """
    inv_series = to_series(involution(alpha), degree)
    kernel = kernel_series(params, alpha, degree)
    acc = TruncatedSeries.zero(degree)
    term = f.resized(degree)
    for k, r in enumerate(coeffs):
        if k > 0:
            term = mzstar_apply(params, term)
        composed = compose(term, inv_series, degree)
        acc = acc + r * mul(kernel, composed, degree)
    return acc


def involution_adjoint_apply(
    params: SpaceParams, alpha: complex, f: TruncatedSeries, degree: int
) -> TruncatedSeries:
    """Adjoint of composition with the involution at ``alpha``, by finite formula.

    For integer ``beta`` the adjoint is the finite sum

        C* f = sum_{k=0}^{2+beta} C(2+beta, k) (-alpha)**k  M_K C_inv (Mz*)**k f,

    which is exact up to the truncation of the final products.  At
    ``beta = -1`` the sum has the two terms of the exponent-1 binomial, and
    at ``alpha = 0`` it collapses to the parity flip ``f(z) -> f(-z)``.
    """
    if not params.integer_beta:
        raise NonIntegerBetaError(
            f"the finite adjoint formula needs integer beta, got {params.beta}"
        )
    alpha = complex(alpha)
    if abs(alpha) >= 1.0:
        raise ArgOutsideDiskError(f"need |alpha| < 1, got {alpha}")
    r = _binomial_alpha_weights(alpha, int(params.beta))
    return _cowen_sum(params, alpha, f, degree, r)
