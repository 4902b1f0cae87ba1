"""General derivative polynomials and their triangle identities.

With x = tan t and y = sec t, the n-th derivative of y^delta equals
Q_n(delta, tan t) * y^delta for a polynomial Q_n in t of degree n whose
exponents all share the parity of n.  Storage exploits that parity:
``coeffs[k]`` multiplies t^(n - 2k), so the recurrence

    Q_(n+1) = (1 + t^2) dQ_n/dt + delta * t * Q_n

turns into q[n+1][j] = (delta + n - 2j) q[n][j] + (n - 2j + 2) q[n][j-1].

Q_n(1, 1) gives the Springer numbers; an independent oracle recomputes
them by differentiating sec t symbolically in the closed (x, y^2)
algebra with d/dt x = y^2 and d/dt y^2 = 2 x y^2.

The radical identities connecting Q_n to the half-support companion
triangles and to the palindromic families are verified here in
substitution variables that clear every square root, so all checks stay
inside exact rational polynomial arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .polys import Poly, Scalar, frac
from .reports import VerificationReport
from .series import BiSeries, cos_series, sin_series
from .transforms import eulerian_rule, s_triangle_rule
from .triangles import build_generic


@dataclass(frozen=True)
class DerivativePoly:
    """Q_n(delta, t) in parity storage: coeffs[k] is the t^(n-2k) coefficient."""

    n: int
    delta: Fraction
    coeffs: tuple[Fraction, ...]

    def to_poly(self) -> Poly:
        dense = [Fraction(0)] * (self.n + 1)
        for k, c in enumerate(self.coeffs):
            dense[self.n - 2 * k] = c
        return Poly(dense)

    def __call__(self, t: Scalar) -> Fraction:
        return self.to_poly()(t)


def derivative_poly_family(delta: Scalar, n_max: int) -> list[DerivativePoly]:
    """Q_0 .. Q_n_max at a fixed rational delta."""
    delta = frac(delta)
    family = [DerivativePoly(0, delta, (Fraction(1),))]
    for n in range(n_max):
        prev = family[-1].coeffs
        width = (n + 1) // 2 + 1
        nxt = []
        for j in range(width):
            v = Fraction(0)
            if j < len(prev):
                v += (delta + n - 2 * j) * prev[j]
            if 1 <= j <= len(prev):
                v += (n - 2 * j + 2) * prev[j - 1]
            nxt.append(v)
        family.append(DerivativePoly(n + 1, delta, tuple(nxt)))
    return family


def springer_numbers(n_max: int) -> list[int]:
    """Q_n(1, 1) for n = 0..n_max; always integers."""
    out = []
    for q in derivative_poly_family(1, n_max):
        v = sum(q.coeffs, Fraction(0))
        assert v.denominator == 1
        out.append(int(v))
    return out


def springer_numbers_by_differentiation(n_max: int) -> list[int]:
    """Independent oracle: repeatedly differentiate sec t symbolically.

    Writing d^n/dt^n sec t = g_n(x, z) sec t with x = tan t and z = sec^2 t,
    the chain rule gives g_(n+1) = D g_n + x g_n where D x = z and
    D z = 2 x z.  The value at t = pi/4 data point (x, z) = (1, 2) is the
    n-th Springer number.
    """
    g: dict[tuple[int, int], Fraction] = {(0, 0): Fraction(1)}
    out = []
    for _ in range(n_max + 1):
        out.append(sum(c * 2 ** j for (i, j), c in g.items()))
        nxt: dict[tuple[int, int], Fraction] = {}

        def bump(key, value):
            if value:
                nxt[key] = nxt.get(key, Fraction(0)) + value

        for (i, j), c in g.items():
            if i:
                bump((i - 1, j + 1), i * c)  # D x^i -> i x^(i-1) z * z^j
            if j:
                bump((i + 1, j), 2 * j * c)  # D z^j -> 2j x z^j * x^i
            bump((i + 1, j), c)  # the x * g term
        g = nxt
    assert all(v.denominator == 1 for v in map(Fraction, out))
    return [int(v) for v in out]


def verify_s_derivative_identity(
    a: Scalar, b: Scalar, c: Scalar, n_max: int, scope: str = "params"
) -> VerificationReport:
    """Row polynomials of the half-support triangle (a k + b | c(n-2k+1))
    match the derivative polynomials after the square root is cleared:

        S_n(a (1 + v) / (2c)) = (a/2)^n sum_k q[n][k](2b/a) v^k

    as polynomials in the substitution variable v.
    """
    a, b, c = frac(a), frac(b), frac(c)
    report = VerificationReport("thm34", scope, n_max)
    if not (a > 0 and b > 0 and c > 0):
        report.note("hypothesis a, b, c > 0 violated (flag only)")
    s_tri = build_generic(s_triangle_rule(a, b, c), n_max)
    family = derivative_poly_family(2 * b / a, n_max)
    argument = Poly([a / (2 * c), a / (2 * c)])  # a(1+v)/(2c) as a poly in v
    for n in range(n_max + 1):
        lhs = s_tri.row_poly(n)(argument)
        rhs = (a / 2) ** n * Poly(family[n].coeffs)
        ok = lhs == rhs
        report.add(f"n={n}", ok, "" if ok else f"lhs={lhs}, rhs={rhs}")
    return report


def verify_eulerian_derivative_identity(
    a1: Scalar, a2: Scalar, n_max: int, scope: str = "params"
) -> VerificationReport:
    """Rows of the palindromic family (a1 k + a2 | a1 n - a1 k + a2) equal

        (a1/2)^n sum_k q[n][k](2 a2/a1) (-1)^k (1+x)^(n-2k) (1-x)^(2k),

    the real form obtained by substituting t = (1+x) / (i (1-x)) into the
    parity expansion of Q_n (the powers of i collapse to (-1)^k).
    """
    a1, a2 = frac(a1), frac(a2)
    report = VerificationReport("thm35", scope, n_max)
    if not (0 < a1 <= 2 * a2):
        report.note("hypothesis 0 < a1 <= 2*a2 violated (flag only)")
    e_tri = build_generic(eulerian_rule(a1, a2), n_max)
    family = derivative_poly_family(2 * a2 / a1, n_max)
    one_plus = Poly([1, 1])
    one_minus = Poly([1, -1])
    for n in range(n_max + 1):
        rhs = Poly()
        for k, qk in enumerate(family[n].coeffs):
            term = qk * one_plus ** (n - 2 * k) * one_minus ** (2 * k)
            rhs = rhs + (term if k % 2 == 0 else -term)
        rhs = (a1 / 2) ** n * rhs
        lhs = e_tri.row_poly(n)
        ok = lhs == rhs
        report.add(f"n={n}", ok, "" if ok else f"lhs={lhs}, rhs={rhs}")
    return report


def verify_derivative_egf(
    delta: Scalar, order: int, scope: str = "params"
) -> VerificationReport:
    """sum_n Q_n(delta, x) z^n / n! = (cos z - x sin z)^(-delta), checked
    coefficientwise to the truncation order."""
    delta = frac(delta)
    report = VerificationReport("egf-Q", scope, order)
    base = cos_series(order) - BiSeries([Poly.x()], order) * sin_series(order)
    rhs = base.pow(-delta)
    family = derivative_poly_family(delta, order)
    for n in range(order + 1):
        expected = family[n].to_poly() / math.factorial(n)
        ok = rhs[n] == expected
        report.add(
            f"z^{n}", ok, "" if ok else f"series={rhs[n]}, direct={expected}"
        )
    return report
