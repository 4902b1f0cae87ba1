"""Brute-force combinatorial oracles, independent of the recurrence engine.

Everything here counts actual objects (permutations, signed permutations,
set partitions, labeled tableaux) or unrolls a published polynomial
recurrence that is *not* the triangle recurrence under test.  These
histograms are the ground truth the preset triangles are validated
against.

Enumeration caps keep the full suite fast: symmetric groups up to n = 8
(40320 elements) and hyperoctahedral groups up to n = 6 (46080 elements).
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Iterator

from .polys import Poly
from .triangles import Triangle

MAX_SYMMETRIC = 8
MAX_SIGNED = 6

# A signed permutation of rank n is a tuple of n nonzero integers whose
# absolute values are a permutation of 1..n.
SignedPermutation = tuple[int, ...]


def is_signed_permutation(values: SignedPermutation) -> bool:
    return (
        all(isinstance(v, int) and v != 0 for v in values)
        and sorted(abs(v) for v in values) == list(range(1, len(values) + 1))
    )


def signed_permutations(n: int) -> Iterator[SignedPermutation]:
    """All 2^n * n! elements of the rank-n hyperoctahedral group."""
    for perm in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            yield tuple(s * v for s, v in zip(signs, perm))


def descent_count(seq) -> int:
    return sum(1 for i in range(len(seq) - 1) if seq[i] > seq[i + 1])


def type_b_descent_count(pi: SignedPermutation) -> int:
    """Descents of a signed permutation including position 0 with pi(0)=0."""
    return descent_count((0,) + tuple(pi))


def excedance_a_count(pi: SignedPermutation) -> int:
    """Positions i with pi(i) > i, signed values compared as integers."""
    return sum(1 for i, v in enumerate(pi, start=1) if v > i)


def alternating_runs(seq) -> int:
    """Maximal monotone segments of a sequence of distinct integers."""
    runs = 0
    direction = 0
    for i in range(len(seq) - 1):
        step = 1 if seq[i + 1] > seq[i] else -1
        if step != direction:
            runs += 1
            direction = step
    return max(runs, 1) if len(seq) >= 2 else (1 if seq else 0)


def oracle_eulerian(n: int) -> list[int]:
    """Descent histogram over the symmetric group S_n (n <= 8)."""
    if not 0 <= n <= MAX_SYMMETRIC:
        raise ValueError(f"n must be in 0..{MAX_SYMMETRIC}")
    hist = [0] * max(n, 1)
    for perm in itertools.permutations(range(1, n + 1)):
        hist[descent_count(perm)] += 1
    return hist


def oracle_type_b(n: int, statistic: str) -> list[int]:
    """Histogram of a statistic over the hyperoctahedral group B_n (n <= 6).

    statistic:
      "descent"      -- descents with the 0-prefix convention, values 0..n
      "excedance_A"  -- positions i with pi(i) > i, values 0..n
      "runs"         -- alternating runs of up signed permutations
                        (pi(1) > 0) with the 0-prefix, values 1..n;
                        the histogram is dense from 0
    """
    if not 0 <= n <= MAX_SIGNED:
        raise ValueError(f"n must be in 0..{MAX_SIGNED}")
    hist = [0] * (n + 1)
    if statistic == "descent":
        for pi in signed_permutations(n):
            hist[type_b_descent_count(pi)] += 1
    elif statistic == "excedance_A":
        for pi in signed_permutations(n):
            hist[excedance_a_count(pi)] += 1
    elif statistic == "runs":
        if n < 1:
            raise ValueError("runs statistic needs n >= 1")
        for pi in signed_permutations(n):
            if pi[0] > 0:
                hist[alternating_runs((0,) + pi)] += 1
    else:
        raise ValueError(f"unknown statistic {statistic!r}")
    return hist


def oracle_runs_A(n: int) -> list[int]:
    """Alternating-run histogram over S_n, dense from 0 (2 <= n <= 8)."""
    if not 2 <= n <= MAX_SYMMETRIC:
        raise ValueError(f"n must be in 2..{MAX_SYMMETRIC}")
    hist = [0] * n
    for perm in itertools.permutations(range(1, n + 1)):
        hist[alternating_runs(perm)] += 1
    return hist


def oracle_runs_A_shifted(m: int) -> list[int]:
    """Row m of the shifted run triangle: half of runs(m+2) at k+1."""
    raw = oracle_runs_A(m + 2)
    out = []
    for k in range(m + 1):
        v = raw[k + 1] if k + 1 < len(raw) else 0
        assert v % 2 == 0
        out.append(v // 2)
    return out


def oracle_stirling(n: int, k: int) -> int:
    """k! * S(n, k) by the alternating binomial sum (n <= 12)."""
    if n > 12:
        raise ValueError("capped at n <= 12")
    return sum((-1) ** (k - j) * math.comb(k, j) * j ** n for j in range(k + 1))


def count_set_partitions(n: int, k: int) -> int:
    """S(n, k) by direct enumeration of restricted-growth strings (n <= 8)."""
    if n > MAX_SYMMETRIC:
        raise ValueError(f"capped at n <= {MAX_SYMMETRIC}")
    if n == 0:
        return 1 if k == 0 else 0

    total = 0

    def extend(pos: int, blocks: int):
        nonlocal total
        if pos == n:
            if blocks == k:
                total += 1
            return
        for b in range(blocks):
            extend(pos + 1, blocks)
        extend(pos + 1, blocks + 1)

    extend(0, 0)
    return total


def lambert_polynomials(n_max: int) -> list[Poly]:
    """The derivative-numerator polynomials p_1..p_n_max of the Lambert W
    function, from p_(n+1) = -(n x + 3n - 1) p_n + (1 + x) p_n'."""
    polys = [Poly.one()]
    for n in range(1, n_max):
        p = polys[-1]
        polys.append(-Poly([3 * n - 1, n]) * p + Poly([1, 1]) * p.derivative())
    return polys


def oracle_lambert(n_max: int) -> Triangle:
    """Rows 0..n_max holding the coefficient rows beta_1..beta_(n_max+1),
    where p_n = (-1)^(n-1) * sum_k beta[n][k] x^k."""
    rows = []
    for m, p in enumerate(lambert_polynomials(n_max + 1)):
        signed = p if m % 2 == 0 else -p
        coeffs = [signed[k] for k in range(m + 1)]
        assert all(v >= 0 for v in coeffs)
        rows.append(coeffs)
    return Triangle(rows, "lambert-derivative-recurrence")


def staircase_tableaux_histogram(n: int) -> list[int]:
    """Diagonal alpha/delta histogram over gamma-free staircase tableaux.

    Direct enumeration over all labelings of the staircase diagram of
    size n; kept to n <= 2, the sanity range (the triangle itself is
    recurrence-defined at larger sizes).
    """
    if not 1 <= n <= 2:
        raise ValueError("tableau enumeration capped at n <= 2")
    boxes = [(i, j) for i in range(1, n + 1) for j in range(1, n + 2 - i)]
    diagonal = {(i, n + 1 - i) for i in range(1, n + 1)}
    hist = [0] * (n + 1)
    for labels in itertools.product((None, "a", "b", "d"), repeat=len(boxes)):
        fill = dict(zip(boxes, labels))
        if any(fill[box] is None for box in diagonal):
            continue
        ok = True
        for (i, j), lab in fill.items():
            if lab in ("b", "d"):
                # boxes in the same row, left of a beta/delta, must be empty
                if any(fill[(i, jj)] is not None for jj in range(1, j)):
                    ok = False
                    break
            if lab == "a":
                # boxes in the same column, above an alpha, must be empty
                if any(
                    fill.get((ii, j)) is not None for ii in range(1, i)
                ):
                    ok = False
                    break
        if ok:
            hist[sum(1 for box in diagonal if fill[box] in ("a", "d"))] += 1
    return hist
