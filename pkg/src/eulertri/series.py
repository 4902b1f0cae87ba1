"""Truncated power series in t with polynomial coefficients.

A :class:`BiSeries` of order N stores coefficients c[0..N], each a
:class:`~eulertri.polys.Poly` in a secondary variable (q, x, ...), and
represents ``sum_n c[n] t^n + O(t^(N+1))``.  All arithmetic truncates at
the order and is exact.

``exp`` is defined when the constant-in-t coefficient is the zero
polynomial; ``log`` and rational powers when it is the constant
polynomial 1.  Rational powers go through exp(e * log s), which keeps
every coefficient a polynomial with rational coefficients.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .polys import Poly, Scalar, frac

PolyLike = Union[Poly, int, Fraction]


class SeriesDomainError(ValueError):
    """Raised when exp/log/pow preconditions on the constant term fail."""


def _as_poly(value: PolyLike) -> Poly:
    if isinstance(value, Poly):
        return value
    return Poly.const(value)


class BiSeries:
    """Power series truncated at a fixed order, coefficients are Poly."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[PolyLike], order: int | None = None):
        c = [_as_poly(v) for v in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("order must be >= 0")
            c = c[: order + 1] + [Poly.zero()] * (order + 1 - len(c))
        if not c:
            raise ValueError("a series needs at least its constant term")
        self._c = tuple(c)

    @classmethod
    def zero(cls, order: int) -> "BiSeries":
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> "BiSeries":
        return cls([Poly.one()], order)

    @classmethod
    def t(cls, order: int) -> "BiSeries":
        return cls([Poly.zero(), Poly.one()], order)

    @classmethod
    def linear(cls, slope: PolyLike, order: int) -> "BiSeries":
        """The series slope * t."""
        return cls([Poly.zero(), _as_poly(slope)], order)

    @property
    def order(self) -> int:
        return len(self._c) - 1

    @property
    def coeffs(self) -> tuple[Poly, ...]:
        return self._c

    def __getitem__(self, n: int) -> Poly:
        if 0 <= n < len(self._c):
            return self._c[n]
        return Poly.zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, BiSeries):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(self._c)

    def truncate(self, order: int) -> "BiSeries":
        return BiSeries(self._c, order)

    def __add__(self, other) -> "BiSeries":
        other = self._coerce(other)
        n = min(self.order, other.order)
        return BiSeries([self._c[i] + other._c[i] for i in range(n + 1)])

    __radd__ = __add__

    def __neg__(self) -> "BiSeries":
        return BiSeries([-v for v in self._c])

    def __sub__(self, other) -> "BiSeries":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "BiSeries":
        return self._coerce(other) - self

    def __mul__(self, other) -> "BiSeries":
        if isinstance(other, (int, Fraction, Poly)):
            p = _as_poly(other)
            return BiSeries([v * p for v in self._c])
        if not isinstance(other, BiSeries):
            return NotImplemented
        n = min(self.order, other.order)
        out = [Poly.zero() for _ in range(n + 1)]
        for i in range(n + 1):
            a = self._c[i]
            if a.is_zero():
                continue
            for j in range(n + 1 - i):
                b = other._c[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return BiSeries(out)

    __rmul__ = __mul__

    def _coerce(self, other) -> "BiSeries":
        if isinstance(other, BiSeries):
            return other
        if isinstance(other, (int, Fraction, Poly)):
            return BiSeries([_as_poly(other)], self.order)
        raise TypeError(f"cannot treat {other!r} as a series")

    def exp(self) -> "BiSeries":
        """Series exponential; needs a vanishing constant-in-t term."""
        if not self._c[0].is_zero():
            raise SeriesDomainError(
                f"exp needs constant term 0, found {self._c[0]}"
            )
        n = self.order
        out = [Poly.one()] + [Poly.zero() for _ in range(n)]
        for m in range(1, n + 1):
            acc = Poly.zero()
            for j in range(1, m + 1):
                if not self._c[j].is_zero():
                    acc = acc + j * self._c[j] * out[m - j]
            out[m] = acc / m
        return BiSeries(out)

    def log(self) -> "BiSeries":
        """Series logarithm; needs constant-in-t term exactly 1."""
        if self._c[0] != Poly.one():
            raise SeriesDomainError(
                f"log needs constant term 1, found {self._c[0]}"
            )
        n = self.order
        out = [Poly.zero() for _ in range(n + 1)]
        for m in range(1, n + 1):
            acc = self._c[m]
            for j in range(1, m):
                if not out[j].is_zero() and not self._c[m - j].is_zero():
                    acc = acc - Fraction(j, m) * out[j] * self._c[m - j]
            out[m] = acc
        return BiSeries(out)

    def pow(self, exponent: Scalar) -> "BiSeries":
        """Rational power via exp(e * log s); needs constant term 1."""
        e = frac(exponent)
        if self._c[0] != Poly.one():
            raise SeriesDomainError(
                f"pow needs constant term 1, found {self._c[0]}"
            )
        if e == 0:
            return BiSeries.one(self.order)
        if e == 1:
            return self
        return (self.log() * e).exp()

    def __repr__(self) -> str:
        inner = ", ".join(repr(c) for c in self._c)
        return f"BiSeries([{inner}])"


def exp_linear(slope: PolyLike, order: int) -> BiSeries:
    """exp(slope * t) computed directly: coefficient of t^n is slope^n/n!."""
    s = _as_poly(slope)
    out = [Poly.one()]
    power = Poly.one()
    for n in range(1, order + 1):
        power = power * s
        out.append(power / math.factorial(n))
    return BiSeries(out)


def cos_series(order: int) -> BiSeries:
    """cos t as an exact rational series."""
    out = []
    for n in range(order + 1):
        if n % 2:
            out.append(Poly.zero())
        else:
            out.append(Poly.const(Fraction((-1) ** (n // 2), math.factorial(n))))
    return BiSeries(out)


def sin_series(order: int) -> BiSeries:
    """sin t as an exact rational series."""
    out = []
    for n in range(order + 1):
        if n % 2 == 0:
            out.append(Poly.zero())
        else:
            out.append(Poly.const(Fraction((-1) ** ((n - 1) // 2), math.factorial(n))))
    return BiSeries(out)
