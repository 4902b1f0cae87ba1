"""Dense univariate polynomials over exact rationals.

The coefficient type throughout the package is ``fractions.Fraction``,
so every operation is exact: results are always in lowest terms with a
positive denominator, and structural equality of coefficient tuples is
mathematical equality.  A polynomial is a tuple of coefficients indexed
by exponent with no trailing zeros; the zero polynomial is the empty
tuple and reports degree -1.

>>> p = Poly([1, 1])
>>> p * p
Poly([1, 2, 1])
>>> (p * p)(Fraction(1, 2))
Fraction(9, 4)
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Iterator, Union

Scalar = Union[int, Fraction]


def frac(value) -> Fraction:
    """Coerce an int, a "p/q" string, or a Fraction to a Fraction.

    Floats are rejected: the package never rounds, so a float in the
    input is a bug at the call site.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


def rational_binomial(r: Scalar, k: int) -> Fraction:
    """Binomial coefficient with an arbitrary rational top argument.

    Computed as r(r-1)...(r-k+1)/k!; exact for any rational r.

    >>> rational_binomial(3, 2)
    Fraction(3, 1)
    >>> rational_binomial(Fraction(5, 2), 2)
    Fraction(15, 8)
    """
    if k < 0:
        return Fraction(0)
    r = frac(r)
    prod = Fraction(1)
    for j in range(k):
        prod *= r - j
    return prod / math.factorial(k)


class Poly:
    """Immutable dense polynomial with Fraction coefficients."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        c = [frac(v) for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._c = tuple(c)

    @classmethod
    def zero(cls) -> "Poly":
        return cls()

    @classmethod
    def one(cls) -> "Poly":
        return cls([1])

    @classmethod
    def x(cls) -> "Poly":
        return cls([0, 1])

    @classmethod
    def const(cls, value: Scalar) -> "Poly":
        return cls([value])

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._c

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self._c) - 1

    def is_zero(self) -> bool:
        return not self._c

    def leading(self) -> Fraction:
        if not self._c:
            raise ValueError("zero polynomial has no leading coefficient")
        return self._c[-1]

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self._c):
            return self._c[k]
        return Fraction(0)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self == Poly.const(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    def __bool__(self) -> bool:
        return bool(self._c)

    def __add__(self, other) -> "Poly":
        other = _coerce(other)
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly([-v for v in self._c])

    def __sub__(self, other) -> "Poly":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "Poly":
        return _coerce(other) + (-self)

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return Poly([v * other for v in self._c])
        if not isinstance(other, Poly):
            return NotImplemented
        if not self._c or not other._c:
            return Poly()
        out = [Fraction(0)] * (len(self._c) + len(other._c) - 1)
        for i, a in enumerate(self._c):
            if a == 0:
                continue
            for j, b in enumerate(other._c):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "Poly":
        s = frac(scalar)
        return Poly([v / s for v in self._c])

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Poly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, value):
        """Evaluate by Horner's rule; accepts scalars or another Poly."""
        if isinstance(value, Poly):
            acc: Poly | Fraction = Poly()
            for c in reversed(self._c):
                acc = acc * value + Poly.const(c)
            return acc if isinstance(acc, Poly) else Poly.const(acc)
        v = frac(value)
        acc = Fraction(0)
        for c in reversed(self._c):
            acc = acc * v + c
        return acc

    def derivative(self) -> "Poly":
        return Poly([i * c for i, c in enumerate(self._c)][1:])

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        other = _coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q = [Fraction(0)] * max(len(self._c) - len(other._c) + 1, 0)
        r = list(self._c)
        d = other.degree
        lead = other.leading()
        while len(r) - 1 >= d and any(v != 0 for v in r):
            while r and r[-1] == 0:
                r.pop()
            if len(r) - 1 < d:
                break
            shift = len(r) - 1 - d
            coeff = r[-1] / lead
            q[shift] = coeff
            for i, v in enumerate(other._c):
                r[shift + i] -= coeff * v
        return Poly(q), Poly(r)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self / self.leading()

    def reversed(self, n: int | None = None) -> "Poly":
        """Coefficients reversed against degree n (default: own degree)."""
        if n is None:
            n = self.degree
        if n < self.degree:
            raise ValueError("reversal degree below actual degree")
        dense = [self[k] for k in range(n + 1)]
        return Poly(reversed(dense))

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for i, c in enumerate(self._c):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*x" if c != 1 else "x")
            else:
                parts.append(f"{c}*x^{i}" if c != 1 else f"x^{i}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"Poly([{', '.join(str(c) for c in self._c)}])"


def _coerce(value) -> Poly:
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Fraction)):
        return Poly.const(value)
    raise TypeError(f"cannot treat {value!r} as a polynomial")


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor over the rationals."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


def squarefree_part(p: Poly) -> Poly:
    """p with every repeated factor reduced to multiplicity one."""
    if p.degree <= 0:
        return p.monic() if not p.is_zero() else p
    g = poly_gcd(p, p.derivative())
    if g.degree <= 0:
        return p.monic()
    return (p // g).monic()


def compose_linear_lift(a: Poly, n: int, lam: Scalar, d: Scalar) -> Poly:
    """The degree-n homogenization sum_i a_i x^i (lam + d x)^(n-i).

    Equals (lam + d x)^n * a(x / (lam + d x)) whenever deg a <= n, which
    is required (otherwise the expression is not a polynomial).
    """
    lam, d = frac(lam), frac(d)
    if lam == 0:
        raise ValueError("lam must be nonzero")
    if a.degree > n:
        raise ValueError(f"degree {a.degree} exceeds lift order {n}")
    base = Poly([lam, d])
    x = Poly.x()
    out = Poly()
    xp = Poly.one()
    powers = [Poly.one()]
    for _ in range(n):
        powers.append(powers[-1] * base)
    for i in range(min(a.degree, n) + 1):
        c = a[i]
        if c != 0:
            out = out + c * xp * powers[n - i]
        xp = xp * x
    return out


def format_fraction(value: Scalar) -> str:
    """Serialize exactly: "p/q" when fractional, bare integer otherwise."""
    v = frac(value)
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def parse_fraction(text: str) -> Fraction:
    return Fraction(text.strip())
