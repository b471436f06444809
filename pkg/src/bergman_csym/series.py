"""Truncated Maclaurin series over the complex numbers.

Every analytic computation in this package runs on degree-D truncations of
Maclaurin expansions.  A :class:`TruncatedSeries` stores the coefficients
``c[0], ..., c[D]`` of ``sum c[n] z**n`` as an immutable complex array; the
operations below are pure functions that take the output truncation degree
explicitly, so the precision of every computation is visible at the call
site.  Nothing here is symbolic: products are Cauchy convolutions cut at
degree D, and composition is Horner evaluation over truncated powers, which
is valid even when the inner series has a nonzero constant term.
"""

from __future__ import annotations

import numpy as np

from .errors import DegenerateDenominatorError

__all__ = [
    "TruncatedSeries",
    "mul",
    "compose",
    "reciprocal_linear",
    "binomial_expand",
]


class TruncatedSeries:
    """Maclaurin coefficients of a function, kept up to a fixed degree.

    ``coeffs[n]`` is the coefficient of ``z**n``.  The array is copied on
    construction and write-locked, so instances can be shared freely.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        arr = np.array(coeffs, dtype=np.complex128, copy=True).reshape(-1)
        if arr.size == 0:
            raise ValueError("a series needs at least its constant coefficient")
        if not np.all(np.isfinite(arr)):
            raise ValueError("series coefficients must be finite")
        arr.flags.writeable = False
        self.coeffs = arr

    @property
    def degree(self) -> int:
        return self.coeffs.size - 1

    @classmethod
    def constant(cls, value, degree: int) -> "TruncatedSeries":
        arr = np.zeros(degree + 1, dtype=np.complex128)
        arr[0] = value
        return cls(arr)

    @classmethod
    def zero(cls, degree: int) -> "TruncatedSeries":
        return cls(np.zeros(degree + 1, dtype=np.complex128))

    @classmethod
    def one(cls, degree: int) -> "TruncatedSeries":
        return cls.constant(1.0, degree)

    @classmethod
    def identity(cls, degree: int) -> "TruncatedSeries":
        return cls.monomial(1, degree)

    @classmethod
    def monomial(cls, n: int, degree: int) -> "TruncatedSeries":
        if not 0 <= n <= degree:
            raise ValueError(f"monomial degree {n} outside [0, {degree}]")
        arr = np.zeros(degree + 1, dtype=np.complex128)
        arr[n] = 1.0
        return cls(arr)

    def resized(self, degree: int) -> "TruncatedSeries":
        """Copy with the coefficient array padded or cut to the new degree."""
        if degree == self.degree:
            return self
        arr = np.zeros(degree + 1, dtype=np.complex128)
        keep = min(degree, self.degree) + 1
        arr[:keep] = self.coeffs[:keep]
        return TruncatedSeries(arr)

    def __call__(self, z):
        """Evaluate by Horner's rule; accepts scalars or arrays."""
        acc = np.zeros_like(np.asarray(z, dtype=np.complex128))
        for c in self.coeffs[::-1]:
            acc = acc * z + c
        return acc if acc.ndim else complex(acc)

    def __add__(self, other):
        if isinstance(other, TruncatedSeries):
            d = min(self.degree, other.degree)
            return TruncatedSeries(self.coeffs[: d + 1] + other.coeffs[: d + 1])
        arr = self.coeffs.copy()
        arr[0] += other
        return TruncatedSeries(arr)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, TruncatedSeries):
            d = min(self.degree, other.degree)
            return TruncatedSeries(self.coeffs[: d + 1] - other.coeffs[: d + 1])
        arr = self.coeffs.copy()
        arr[0] -= other
        return TruncatedSeries(arr)

    def __neg__(self):
        return TruncatedSeries(-self.coeffs)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return mul(self, other, min(self.degree, other.degree))
        return TruncatedSeries(self.coeffs * other)

    __rmul__ = __mul__

    def __repr__(self):
        head = np.array2string(self.coeffs[:4], precision=6, separator=", ")
        tail = ", ..." if self.degree > 3 else ""
        return f"TruncatedSeries(degree={self.degree}, coeffs={head[:-1]}{tail}])"


def mul(f: TruncatedSeries, g: TruncatedSeries, degree: int) -> TruncatedSeries:
    """Cauchy product of two series, truncated at ``degree``."""
    full = np.convolve(f.coeffs, g.coeffs)
    out = np.zeros(degree + 1, dtype=np.complex128)
    keep = min(full.size, degree + 1)
    out[:keep] = full[:keep]
    return TruncatedSeries(out)


def compose(f: TruncatedSeries, g: TruncatedSeries, degree: int) -> TruncatedSeries:
    """Coefficients of ``f(g(z))`` up to ``degree``.

    Horner's rule over truncated powers of ``g``; a nonzero ``g(0)`` is fine,
    the result is then the expansion of the composite about 0 provided the
    expansion of ``f`` converges at ``g(0)``.
    """
    acc = TruncatedSeries.constant(f.coeffs[f.degree], degree)
    for k in range(f.degree - 1, -1, -1):
        acc = mul(acc, g, degree) + f.coeffs[k]
    return acc


def reciprocal_linear(c, d, degree: int) -> TruncatedSeries:
    """Expansion of ``1/(c*z + d)``: coefficient n equals ``(-c/d)**n / d``."""
    if d == 0:
        raise DegenerateDenominatorError("cannot expand 1/(c*z + d) with d = 0")
    ratio = -complex(c) / complex(d)
    coeffs = ratio ** np.arange(degree + 1) / complex(d)
    return TruncatedSeries(coeffs)


def binomial_expand(u, p, degree: int) -> TruncatedSeries:
    """Expansion of ``(1 + u*z)**p`` for real ``p`` via generalized binomials.

    The coefficient of ``z**n`` is ``C(p, n) * u**n`` where the binomial
    follows the product recurrence ``C(p, n) = C(p, n-1) * (p - n + 1) / n``.
    The recurrence, not a gamma-function quotient, is what keeps integer ``p``
    exact: past ``n = p`` every factor is exactly zero.
    """
    u = complex(u)
    coeffs = np.empty(degree + 1, dtype=np.complex128)
    coeffs[0] = 1.0
    binom = 1.0
    upow = 1.0 + 0.0j
    for n in range(1, degree + 1):
        binom = binom * (p - n + 1) / n
        upow = upow * u
        coeffs[n] = binom * upow
    return TruncatedSeries(coeffs)
