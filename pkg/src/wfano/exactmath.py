"""Exact integer and rational arithmetic utilities.

Everything here is exact: arbitrary-precision integers, ``fractions.Fraction``
for rationals, Smith normal form over the integers with unimodular transforms,
and squarefree analysis of binary forms.  No floating point anywhere; the
genericity decisions downstream depend on these answers being exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence


def gcd_tuple(values: Sequence[int]) -> int:
    """Greatest common divisor of a nonempty sequence of positive integers."""
    if not values:
        raise ValueError("gcd_tuple: empty sequence")
    g = 0
    for v in values:
        if v <= 0:
            raise ValueError(f"gcd_tuple: nonpositive entry {v}")
        g = gcd(g, v)
    return g


# ---------------------------------------------------------------------------
# integer matrices


def mat_identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> list[list[int]]:
    if not a or not b:
        return []
    n, k, m = len(a), len(b), len(b[0])
    assert all(len(r) == k for r in a), "dimension mismatch"
    return [[sum(a[i][s] * b[s][j] for s in range(k)) for j in range(m)] for i in range(n)]


def mat_det(m: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix (fraction-free Bareiss)."""
    n = len(m)
    if n == 0:
        return 1
    assert all(len(r) == n for r in m), "not square"
    a = [list(r) for r in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class SmithForm:
    """Diagonalization L * A * R = D with L, R unimodular.

    ``diagonal`` holds the elementary divisors (nonnegative, each dividing the
    next nonzero one), padded with zeros up to min(rows, cols).
    """

    diagonal: tuple[int, ...]
    left: tuple[tuple[int, ...], ...]
    right: tuple[tuple[int, ...], ...]

    def verify(self, original: Sequence[Sequence[int]]) -> bool:
        rows = len(original)
        cols = len(original[0]) if rows else 0
        prod = mat_mul(mat_mul(self.left, original), self.right) if rows and cols else []
        for i in range(rows):
            for j in range(cols):
                expect = self.diagonal[i] if i == j and i < len(self.diagonal) else 0
                if prod[i][j] != expect:
                    return False
        if abs(mat_det(self.left)) != 1 or abs(mat_det(self.right)) != 1:
            return False
        nz = [d for d in self.diagonal if d]
        return all(nz[i + 1] % nz[i] == 0 for i in range(len(nz) - 1))


def smith_normal_form(matrix: Sequence[Sequence[int]]) -> SmithForm:
    """Smith normal form of an integer matrix.

    Pivoting picks the smallest-absolute-value nonzero entry, ties broken by
    lowest (row, col), which makes the reduction deterministic for a fixed
    input.  Returns diagonal entries normalized nonnegative with the
    divisibility chain enforced.
    """
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    for r in matrix:
        if len(r) != cols:
            raise ValueError("smith_normal_form: ragged matrix")
    a = [list(r) for r in matrix]
    left = mat_identity(rows)
    right = mat_identity(cols)

    def row_op(dst: int, src: int, q: int) -> None:
        for j in range(cols):
            a[dst][j] -= q * a[src][j]
        for j in range(rows):
            left[dst][j] -= q * left[src][j]

    def col_op(dst: int, src: int, q: int) -> None:
        for i in range(rows):
            a[i][dst] -= q * a[i][src]
        for i in range(cols):
            right[i][dst] -= q * right[i][src]

    def swap_rows(i: int, j: int) -> None:
        a[i], a[j] = a[j], a[i]
        left[i], left[j] = left[j], left[i]

    def swap_cols(i: int, j: int) -> None:
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in right:
            row[i], row[j] = row[j], row[i]

    def negate_row(i: int) -> None:
        a[i] = [-v for v in a[i]]
        left[i] = [-v for v in left[i]]

    k = 0
    limit = min(rows, cols)
    while k < limit:
        pivot = None
        for i in range(k, rows):
            for j in range(k, cols):
                v = a[i][j]
                if v != 0 and (pivot is None or abs(v) < abs(a[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        swap_rows(k, pivot[0])
        swap_cols(k, pivot[1])
        if a[k][k] < 0:
            negate_row(k)
        clean = True
        for i in range(k + 1, rows):
            if a[i][k]:
                row_op(i, k, a[i][k] // a[k][k])
                if a[i][k]:
                    clean = False
        for j in range(k + 1, cols):
            if a[k][j]:
                col_op(j, k, a[k][j] // a[k][k])
                if a[k][j]:
                    clean = False
        if not clean:
            continue  # remainders left nonzero entries in the border; redo pivot
        # pivot must divide the whole remaining block
        offender = None
        for i in range(k + 1, rows):
            for j in range(k + 1, cols):
                if a[i][j] % a[k][k] != 0:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            row_op(k, offender, -1)  # add offending row, then restart this pivot
            continue
        k += 1

    diag = [a[i][i] for i in range(limit)]
    return SmithForm(
        diagonal=tuple(diag),
        left=tuple(tuple(r) for r in left),
        right=tuple(tuple(r) for r in right),
    )


# ---------------------------------------------------------------------------
# binary forms

Q = Fraction


@dataclass(frozen=True)
class BinaryForm:
    """Homogeneous form of the given degree in an ordered pair of variables.

    ``coefficients[i]`` multiplies u^(degree-i) * v^i, where (u, v) is the
    variable pair in stratum order.  A projective root [p : q] means the form
    vanishes at (u, v) = (p, q); [1 : 0] is the "point at infinity" of the
    v-chart.
    """

    degree: int
    coefficients: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.coefficients) != self.degree + 1:
            raise ValueError("BinaryForm: need degree+1 coefficients")

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coefficients)


def binary_form(coefficients: Sequence[Fraction | int]) -> BinaryForm:
    coeffs = tuple(Fraction(c) for c in coefficients)
    return BinaryForm(degree=len(coeffs) - 1, coefficients=coeffs)


def _poly_trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = a[:]
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    while len(a) >= len(b) and any(a):
        if a[-1] == 0:
            a.pop()
            continue
        k = len(a) - len(b)
        c = a[-1] / b[-1]
        q[k] = c
        for i, bc in enumerate(b):
            a[i + k] -= c * bc
        a.pop()
    return q, _poly_trim(a)


def poly_gcd(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    """Monic gcd of two univariate rational polynomials (dense, ascending)."""
    pa, pb = _poly_trim(list(a)), _poly_trim(list(b))
    while pb:
        pa, pb = pb, _poly_divmod(pa, pb)[1]
    if pa:
        lead = pa[-1]
        pa = [c / lead for c in pa]
    return pa


def _poly_derivative(p: Sequence[Fraction]) -> list[Fraction]:
    return [Fraction(i) * c for i, c in enumerate(p)][1:]


def _dehomogenize(b: BinaryForm) -> tuple[int, int, list[Fraction]]:
    """Split off u- and v-power factors, return (mult_at_[0:1], mult_at_[1:0], core).

    The core polynomial is in s = v/u, ascending, with nonzero ends, so it has
    no roots at 0 or infinity.
    """
    coeffs = list(b.coefficients)
    lo = 0
    while lo < len(coeffs) and coeffs[lo] == 0:
        lo += 1
    hi = len(coeffs) - 1
    while hi >= lo and coeffs[hi] == 0:
        hi -= 1
    core = coeffs[lo : hi + 1]
    # coefficients[i] multiplies u^(deg-i) v^i: leading zeros (low i) are u-powers,
    # i.e. vanishing at v-dominant point [0:1]; trailing zeros vanish at [1:0].
    mult_v = lo  # order of the root [1:0] (v = 0)... see note below
    mult_u = b.degree - hi  # order of the root [0:1] (u = 0)
    return mult_v, mult_u, core


def squarefree_and_root_count(b: BinaryForm) -> tuple[bool, int]:
    """Squarefreeness and number of distinct projective roots of a binary form.

    Roots at the two coordinate points are read off the vanishing orders of the
    end coefficients; the interior roots are counted over the algebraic closure
    as degree of the squarefree part of the dehomogenized core.
    """
    if b.is_zero():
        raise ValueError("squarefree_and_root_count: zero form")
    mult_v, mult_u, core = _dehomogenize(b)
    count = (1 if mult_v > 0 else 0) + (1 if mult_u > 0 else 0)
    squarefree = mult_v <= 1 and mult_u <= 1
    if len(core) > 1:
        g = poly_gcd(core, _poly_derivative(core))
        gdeg = len(g) - 1
        count += (len(core) - 1) - gdeg
        if gdeg > 0:
            squarefree = False
    return squarefree, count


def rational_roots(b: BinaryForm) -> list[tuple[int, int]]:
    """Distinct rational projective roots [p : q] of a binary form.

    A pair (p, q) is the point [u : v] = [p : q], primitive with p > 0, except
    (0, 1) for the root at u = 0.  Finite roots come first in increasing order
    of v/u, then (0, 1) last.
    """
    if b.is_zero():
        raise ValueError("rational_roots: zero form")
    mult_v, mult_u, core = _dehomogenize(b)
    roots: list[tuple[int, int]] = []
    if mult_v > 0:
        roots.append((1, 0))  # v = 0
    if mult_u > 0:
        roots.append((0, 1))  # u = 0
    if len(core) > 1:
        # integer-coefficient copy of the core in s = v/u
        den = 1
        for c in core:
            den = den * c.denominator // gcd(den, c.denominator)
        ic = [int(c * den) for c in core]
        cont = 0
        for c in ic:
            cont = gcd(cont, c)
        ic = [c // cont for c in ic]
        for p in _divisors(abs(ic[0])):
            for q in _divisors(abs(ic[-1])):
                for s in (Fraction(p, q), Fraction(-p, q)):
                    if _poly_eval(ic, s) == 0 and s not in [Fraction(r[1], r[0]) for r in roots if r[0] != 0]:
                        # root s = v/u, projectively [1 : s] -> primitive (den, num)? keep [p:q]=[u:v]
                        roots.append((s.denominator, s.numerator))
    uniq = sorted(set(roots), key=lambda r: (r[0] == 0, Fraction(r[1], r[0]) if r[0] else 0))
    return uniq


def _poly_eval(p: Sequence[int], s: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * s + c
    return acc


def _divisors(n: int) -> list[int]:
    if n == 0:
        return [1]
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            out.append(n // d)
        d += 1
    return sorted(set(out))
