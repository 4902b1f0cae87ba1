"""Exponential generating function checks for the two-term and staircase
families, via exact truncated series with polynomial-in-q coefficients.

The closed forms all contain an apparent pole ((q-1) for the staircase
family, (2q-1) for its companion); the common factor is cancelled
symbolically before any series arithmetic, so every series coefficient
stays a polynomial in q:

    2q - (q+1) e^((q-1)t) = (q-1) [1 - (q+1) sum_{m>=1} (q-1)^(m-1) t^m / m!]
    2q -       e^((2q-1)t) = (2q-1) [1 - sum_{m>=1} (2q-1)^(m-1) t^m / m!]

Rational powers (the exponents -(1 + b2/b1) and 3/2) go through the
exact exp/log machinery of :mod:`eulertri.series`.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .polys import Poly, Scalar, frac
from .reports import VerificationReport
from .series import BiSeries, exp_linear
from .transforms import FrobeniusParams
from .triangles import CoeffRule, Triangle, affine, build_generic

STAIRCASE_RULE = CoeffRule(
    stay=affine(0, 1, 1), step=affine(1, 0, 1), jump=affine(1, -1, 1),
    name="staircase",
)
FLOWER_RULE = CoeffRule(
    stay=affine(0, 1, 1), step=affine(2, -2, 1), name="flower"
)


def _compare_rows(
    series: BiSeries, triangle: Triangle, order: int, report: VerificationReport
) -> None:
    for n in range(order + 1):
        expected = triangle.row_poly(n)
        got = series[n] * math.factorial(n)
        ok = got == expected
        report.add(
            f"t^{n}", ok, "" if ok else f"series*n!={got}, triangle={expected}"
        )


def verify_egf_frobenius(
    a1: Scalar, a2: Scalar, b1: Scalar, b2: Scalar, order: int,
    scope: str = "params",
) -> VerificationReport:
    """e^(a2 t) [1 + (b1/a1) q (1 - e^(a1 t))]^(-(1 + b2/b1)) matches the
    rows of the two-term triangle (a1 k + a2 | b1 k + b2)."""
    a1, a2, b1, b2 = frac(a1), frac(a2), frac(b1), frac(b2)
    report = VerificationReport("egfF", scope, order)
    params = FrobeniusParams(a1, a2, b1, b2)
    triangle = build_generic(params.rule(), order)
    bracket = [Poly.one()]
    for m in range(1, order + 1):
        bracket.append(Poly([0, -(b1 / a1) * a1 ** m / math.factorial(m)]))
    rhs = exp_linear(Poly.const(a2), order) * BiSeries(bracket).pow(-(1 + b2 / b1))
    _compare_rows(rhs, triangle, order, report)
    return report


def verify_egf_staircase(order: int) -> VerificationReport:
    """((q-1) e^((q-1)t/3) / (2q - (q+1) e^((q-1)t)))^(3/2) matches the
    staircase triangle rows, after the (q-1) factor is cancelled."""
    report = VerificationReport("egf-staircase", "staircase", order)
    triangle = build_generic(STAIRCASE_RULE, order)
    q_minus_1 = Poly([-1, 1])
    q_plus_1 = Poly([1, 1])
    numerator = exp_linear(q_minus_1 / 3, order)
    denominator = [Poly.one()]
    for m in range(1, order + 1):
        denominator.append(
            -q_plus_1 * q_minus_1 ** (m - 1) / math.factorial(m)
        )
    ratio = numerator * BiSeries(denominator).pow(-1)
    rhs = ratio.pow(Fraction(3, 2))
    _compare_rows(rhs, triangle, order, report)
    return report


def verify_egf_flower(order: int) -> VerificationReport:
    """((2q-1) e^((2q-1)t/3) / (2q - e^((2q-1)t)))^(3/2) matches the
    flower triangle rows, after the (2q-1) factor is cancelled."""
    report = VerificationReport("egf-flower", "flower", order)
    triangle = build_generic(FLOWER_RULE, order)
    two_q_minus_1 = Poly([-1, 2])
    numerator = exp_linear(two_q_minus_1 / 3, order)
    denominator = [Poly.one()]
    for m in range(1, order + 1):
        denominator.append(-(two_q_minus_1 ** (m - 1)) / math.factorial(m))
    ratio = numerator * BiSeries(denominator).pow(-1)
    rhs = ratio.pow(Fraction(3, 2))
    _compare_rows(rhs, triangle, order, report)
    return report
