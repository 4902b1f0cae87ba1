"""Run-polynomial identities of David-Barton type, verified radical-free.

The triangles here follow

    T[n][k] = d(a1 k + a2) T[n-1][k] + b2 T[n-1][k-1] + c(n-k+1) T[n-1][k-2]

with the coupling b2 = d(a2 + sigma*a1), c = d*a1, sigma in {-1, 0, 1}.
The claimed identity relates T_n to the palindromic family E at index
n + sigma through the substitution w = sqrt((1-x)/(1+x)).  Substituting
x = (1-w^2)/(1+w^2) clears every radical, leaving the exact polynomial
identity in w

    (1+w^2)^n T_n((1-w^2)/(1+w^2))
        = a2^(-sigma) (2d)^n 2^(-(n+sigma))
          * sum_k E[n+sigma][k] (1-w)^k (1+w)^(n+sigma-k).

For sigma in {0, 1} this holds exactly.  For sigma = -1 it fails already
at n = 1 for every admissible instance: the left side is
d*a2 + d(a2 - a1)x while the right side forces d*a2*(1 + x), so the
verifier reports the counterexample instead of passing.  (The underlying
two-term companion has A[1][1] = sigma*d*a1, which vanishes only for
sigma = 0; the half-support pairing used to justify sigma = -1 needs it
to vanish.)
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .derivative import derivative_poly_family
from .polys import Poly, Scalar, frac
from .reports import VerificationReport
from .triangles import CoeffRule, Triangle, affine, build_generic
from .transforms import eulerian_rule


@dataclass(frozen=True)
class DavidBartonInstance:
    """Coupled parameters (a1, a2, c, d, b2, sigma) with c = d*a1 and
    b2 = d(a2 + sigma*a1) enforced at construction."""

    a1: Fraction
    a2: Fraction
    c: Fraction
    d: Fraction
    b2: Fraction
    sigma: int

    def __post_init__(self):
        for name in ("a1", "a2", "c", "d", "b2"):
            object.__setattr__(self, name, frac(getattr(self, name)))
        if self.sigma not in (-1, 0, 1):
            raise ValueError("sigma must be -1, 0, or 1")
        if not (self.a1 > 0 and self.a2 > 0 and self.d > 0):
            raise ValueError("a1, a2, d must be positive")
        if self.c != self.d * self.a1:
            raise ValueError(f"c must equal d*a1: c={self.c}, d*a1={self.d * self.a1}")
        if self.b2 != self.d * (self.a2 + self.sigma * self.a1):
            raise ValueError(
                f"b2 must equal d*(a2 + sigma*a1): b2={self.b2}, "
                f"expected {self.d * (self.a2 + self.sigma * self.a1)}"
            )

    @classmethod
    def from_core(cls, a1: Scalar, a2: Scalar, d: Scalar, sigma: int):
        a1, a2, d = frac(a1), frac(a2), frac(d)
        return cls(a1, a2, d * a1, d, d * (a2 + sigma * a1), sigma)

    def rule(self) -> CoeffRule:
        return CoeffRule(
            stay=affine(0, self.d * self.a1, self.d * self.a2),
            step=affine(0, 0, self.b2),
            jump=affine(self.c, -self.c, self.c),
            name="david-barton",
        )


def build_runs_triangle(inst: DavidBartonInstance, n_max: int) -> Triangle:
    tri = build_generic(inst.rule(), n_max)
    return Triangle(tri.rows, f"david-barton({inst})")


def _clear_substitution(row, n: int) -> Poly:
    """(1+w^2)^n * P((1-w^2)/(1+w^2)) for P with coefficients `row`."""
    num = Poly([1, 0, -1])  # 1 - w^2
    den = Poly([1, 0, 1])  # 1 + w^2
    out = Poly()
    for k, coeff in enumerate(row):
        if coeff != 0:
            out = out + coeff * num ** k * den ** (n - k)
    return out


def verify_david_barton(
    inst: DavidBartonInstance, n_max: int, scope: str = "params"
) -> VerificationReport:
    """The radical-free identity in w described in the module docstring.

    sigma = -1 starts at n = 1 (the right side would index row -1 of the
    palindromic family at n = 0) and is expected to fail there; the
    report carries the exact counterexample.
    """
    report = VerificationReport("thm36", scope, n_max)
    tri = build_runs_triangle(inst, n_max)
    e_tri = build_generic(eulerian_rule(inst.a1, inst.a2), n_max + 1)
    one_plus = Poly([1, 1])
    one_minus = Poly([1, -1])
    start = 0
    if inst.sigma == -1:
        start = 1
        report.note("sigma=-1: n=0 skipped (companion row would have index -1)")
    for n in range(start, n_max + 1):
        lhs = _clear_substitution(tri.row(n), n)
        if any(lhs[i] != 0 for i in range(1, lhs.degree + 1, 2)):
            report.add(f"n={n}", False, "left side not even in w")
            continue
        m = n + inst.sigma
        erow = e_tri.row(m)
        rhs = Poly()
        for k in range(m + 1):
            if erow[k] != 0:
                rhs = rhs + erow[k] * one_minus ** k * one_plus ** (m - k)
        rhs = (
            inst.a2 ** (-inst.sigma)
            * (2 * inst.d) ** n
            * Fraction(1, 2 ** (n + inst.sigma))
            * rhs
        )
        ok = lhs == rhs
        report.add(f"n={n}", ok, "" if ok else f"lhs={lhs}, rhs={rhs}")
    return report


def classical_run_triangle(n_max: int) -> Triangle:
    """Rows m = 0.. holding the run histogram of S_(m+2), dense from 0.

    Built from the shifted instance (a1 = a2 = d = 1, sigma = 1) by
    doubling and reindexing: runs(m+2)[k+1] = 2 * shifted[m][k].
    """
    shifted = build_runs_triangle(DavidBartonInstance.from_core(1, 1, 1, 1), n_max)
    rows = [(Fraction(0),) + tuple(2 * v for v in row) for row in shifted.rows]
    return Triangle(rows, "alternating-runs")


def verify_classical_runs_identity(n_max: int) -> VerificationReport:
    """The classical run/descent identity, radical-free: for n >= 2,

        (1+w^2)^(n-1) R_n((1-w^2)/(1+w^2))
            = sum_k E[n][k] (1-w)^k (1+w)^(n+1-k)

    with R the run histogram triangle and E the descent triangle
    (both recurrence-built).  Also checks the row sums R_n(1) = n!.
    """
    report = VerificationReport("thm36", "classical-runs", n_max)
    runs = classical_run_triangle(max(n_max - 2, 0))
    desc_rule = CoeffRule(stay=affine(0, 1, 0), step=affine(1, -1, 1), name="descents")
    desc = build_generic(desc_rule, n_max)
    one_plus = Poly([1, 1])
    one_minus = Poly([1, -1])
    for n in range(2, n_max + 1):
        row = runs.row(n - 2)
        lhs = _clear_substitution(row, n - 1)
        erow = desc.row(n)
        rhs = Poly()
        for k in range(n + 1):
            if erow[k] != 0:
                rhs = rhs + erow[k] * one_minus ** k * one_plus ** (n + 1 - k)
        ok_identity = lhs == rhs
        ok_sum = sum(row) == math.factorial(n)
        ok = ok_identity and ok_sum
        report.add(
            f"n={n}",
            ok,
            "" if ok else f"identity={ok_identity} rowsum={ok_sum}",
        )
    return report


def verify_type_b_runs(n_max: int) -> VerificationReport:
    """The three exact links for the shifted type-B run triangle Z~:

    (ii)  Z~_n(x) = sum_k W[n+1][k] 2^k x^k (1+x)^(n-k), W the
          half-support triangle (2k+1 | n-2k+1);
    (iii) the David-Barton identity against the type-B descent family
          (instance a1=2, a2=1, d=1, sigma=1);
    (iv)  Z~_n(x) = sum_k q[n+1][k](1) (x-1)^k (1+x)^(n-k), the
          radical-cleared normal form of the derivative-polynomial link
          (derived through the half-support triangle; the published
          closed form is mis-stated, see the decisions ledger).
    """
    report = VerificationReport("prop43", "runs-typeB-Z-shifted", n_max)
    inst = DavidBartonInstance.from_core(2, 1, 1, 1)
    z_tri = build_runs_triangle(inst, n_max)
    w_rule = CoeffRule(
        stay=affine(0, 2, 1), step=affine(1, -2, 1), k_cap=(1, 2), name="w-half"
    )
    w_tri = build_generic(w_rule, n_max + 1)
    family = derivative_poly_family(1, n_max + 1)
    one_plus = Poly([1, 1])
    x_minus = Poly([-1, 1])
    x = Poly.x()
    for n in range(n_max + 1):
        zpoly = z_tri.row_poly(n)
        wrow = w_tri.row(n + 1)
        part2 = Poly()
        for k in range(n + 2):
            if wrow[k] != 0:
                part2 = part2 + wrow[k] * Fraction(2 ** k) * x ** k * one_plus ** (n - k)
        ok2 = part2 == zpoly
        part4 = Poly()
        for k, qk in enumerate(family[n + 1].coeffs):
            if qk != 0:
                part4 = part4 + qk * x_minus ** k * one_plus ** (n - k)
        ok4 = part4 == zpoly
        ok = ok2 and ok4
        report.add(
            f"n={n}", ok, "" if ok else f"half-support={ok2} derivative={ok4}"
        )
    db = verify_david_barton(inst, n_max, scope="runs-typeB-Z-shifted")
    report.add("david-barton link", db.passed,
               "" if db.passed else (db.first_failure.detail if db.first_failure else ""))
    report.note("derivative link checked via the derived normal form "
                "sum_k q[n+1][k](1) (x-1)^k (1+x)^(n-k)")
    return report
