"""Triangular arrays built from three-term and two-term row recurrences.

The master family computes

    T[n][k] = lam*(a0*n + a1*k + a2) * T[n-1][k]
            + (b0*n + b1*k + b2)     * T[n-1][k-1]
            + (c*d/lam)*(n - k + 1)  * T[n-1][k-2]

from T[0][0] = 1, with out-of-range references treated as zero.  When
b1 = d*a1 - c the family has a two-term companion array whose rows lift
back to the master rows (see :mod:`eulertri.transforms`).

:class:`CoeffRule` is the generic carrier: three affine coefficient
functions of (n, k) plus an optional support cap, enough to express every
triangle this package ships as a preset.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .polys import Poly, Scalar, frac


class TriangleError(ValueError):
    pass


class IncompatibleParamsError(TriangleError):
    """The two-term companion requires b1 = d*a1 - c."""


@dataclass(frozen=True)
class Affine:
    """Exact affine function (n, k) -> n_coeff*n + k_coeff*k + const."""

    n_coeff: Fraction
    k_coeff: Fraction
    const: Fraction

    def __call__(self, n: int, k: int) -> Fraction:
        return self.n_coeff * n + self.k_coeff * k + self.const

    def is_zero(self) -> bool:
        return self.n_coeff == 0 and self.k_coeff == 0 and self.const == 0


def affine(n_coeff: Scalar = 0, k_coeff: Scalar = 0, const: Scalar = 0) -> Affine:
    return Affine(frac(n_coeff), frac(k_coeff), frac(const))


@dataclass(frozen=True)
class CoeffRule:
    """Row recurrence row[n][k] = stay*prev[k] + step*prev[k-1] + jump*prev[k-2].

    ``k_cap = (add, div)`` restricts the support to div*k <= n + add
    (entries beyond are identically zero); ``None`` means full support
    0 <= k <= n.
    """

    stay: Optional[Affine] = None
    step: Optional[Affine] = None
    jump: Optional[Affine] = None
    k_cap: Optional[tuple[int, int]] = None
    name: str = "generic"


class Triangle:
    """Immutable jagged array of exact rational rows with provenance."""

    __slots__ = ("rows", "provenance")

    def __init__(self, rows, provenance: str = ""):
        self.rows = tuple(tuple(frac(v) for v in row) for row in rows)
        self.provenance = provenance

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    def row(self, n: int) -> tuple[Fraction, ...]:
        if not 0 <= n < len(self.rows):
            raise IndexError(f"row {n} not built (have rows 0..{len(self.rows)-1})")
        return self.rows[n]

    def row_poly(self, n: int) -> Poly:
        return Poly(self.row(n))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Triangle):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"Triangle({self.n_rows} rows, {self.provenance!r})"


@dataclass(frozen=True)
class TriangleParams:
    """The nine master-recurrence parameters."""

    lam: Fraction
    a0: Fraction
    a1: Fraction
    a2: Fraction
    b0: Fraction
    b1: Fraction
    b2: Fraction
    c: Fraction
    d: Fraction

    def __post_init__(self):
        for name in ("lam", "a0", "a1", "a2", "b0", "b1", "b2", "c", "d"):
            object.__setattr__(self, name, frac(getattr(self, name)))
        if self.lam == 0:
            raise TriangleError("lam must be nonzero")

    @property
    def sign_conditions_hold(self) -> bool:
        """Whether the canonical sign region holds (lam > 0, the listed
        parameters nonnegative).  Violations are permitted; theorems that
        need the region consult this flag."""
        return self.lam > 0 and all(
            v >= 0 for v in (self.a0, self.a1, self.a2, self.b0, self.b2, self.d)
        )

    @property
    def companion_compatible(self) -> bool:
        return self.b1 == self.d * self.a1 - self.c

    def master_rule(self) -> CoeffRule:
        jump_scale = self.c * self.d / self.lam
        return CoeffRule(
            stay=affine(self.lam * self.a0, self.lam * self.a1, self.lam * self.a2),
            step=affine(self.b0, self.b1, self.b2),
            jump=None if jump_scale == 0 else affine(jump_scale, -jump_scale, jump_scale),
            name="master",
        )

    def companion_rule(self) -> CoeffRule:
        if not self.companion_compatible:
            raise IncompatibleParamsError(
                f"companion requires b1 = d*a1 - c: b1 = {self.b1}, "
                f"d*a1 - c = {self.d * self.a1 - self.c}"
            )
        return CoeffRule(
            stay=affine(self.a0, self.a1, self.a2),
            step=affine(
                self.b0 + self.d * (self.a1 - self.a0),
                -(self.c + self.d * self.a1),
                self.b2 + self.d * (self.a1 - self.a2),
            ),
            name="companion",
        )


def triangle_params(lam, a0, a1, a2, b0, b1, b2, c, d) -> TriangleParams:
    return TriangleParams(
        frac(lam), frac(a0), frac(a1), frac(a2),
        frac(b0), frac(b1), frac(b2), frac(c), frac(d),
    )


def build_generic(rule: CoeffRule, n_max: int) -> Triangle:
    """Rows 0..n_max from a CoeffRule, starting from row [1]."""
    if n_max < 0:
        raise TriangleError("n_max must be >= 0")
    rows: list[tuple[Fraction, ...]] = [(Fraction(1),)]
    for n in range(1, n_max + 1):
        prev = rows[-1]
        row = []
        for k in range(n + 1):
            if rule.k_cap is not None:
                add, div = rule.k_cap
                if div * k > n + add:
                    row.append(Fraction(0))
                    continue
            v = Fraction(0)
            if rule.stay is not None and k <= n - 1:
                v += rule.stay(n, k) * prev[k]
            if rule.step is not None and 1 <= k:
                v += rule.step(n, k) * prev[k - 1]
            if rule.jump is not None and 2 <= k:
                v += rule.jump(n, k) * prev[k - 2]
            row.append(v)
        rows.append(tuple(row))
    return Triangle(rows, rule.name)


def build_master(params: TriangleParams, n_max: int) -> Triangle:
    tri = build_generic(params.master_rule(), n_max)
    return Triangle(tri.rows, f"master({params})")


def build_companion(params: TriangleParams, n_max: int) -> Triangle:
    tri = build_generic(params.companion_rule(), n_max)
    return Triangle(tri.rows, f"companion({params})")


def reciprocal(tri: Triangle) -> Triangle:
    """Rows reversed: entry (n, k) becomes entry (n, n-k)."""
    return Triangle(
        tuple(tuple(reversed(row)) for row in tri.rows),
        f"reciprocal({tri.provenance})",
    )


def row_poly(tri: Triangle, n: int) -> Poly:
    return tri.row_poly(n)
