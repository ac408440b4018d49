"""Weighted projective 4-space combinatorics.

Weight systems, weighted monomial enumeration and counting, and
well-formedness of the ambient space.  The library is hard-coded to five
variables x, y, z, t, w of weights a1 <= a2 <= a3 <= a4 <= a5; a hypersurface
family is the septuple (a1, ..., a5, d, I) with I = a1+...+a5 - d.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

VARIABLES = ("x", "y", "z", "t", "w")
NVARS = 5

#: exponent vector over (x, y, z, t, w)
Monomial = tuple[int, int, int, int, int]


@dataclass(frozen=True)
class WeightSystem:
    """Sorted weights plus the hypersurface degree."""

    weights: tuple[int, int, int, int, int]
    degree: int

    def __post_init__(self) -> None:
        if len(self.weights) != NVARS:
            raise ValueError("WeightSystem: need exactly five weights")
        if any(a <= 0 for a in self.weights):
            raise ValueError("WeightSystem: weights must be positive")
        if list(self.weights) != sorted(self.weights):
            raise ValueError("WeightSystem: weights must be sorted ascending")
        if self.degree <= 0:
            raise ValueError("WeightSystem: degree must be positive")

    @property
    def index(self) -> int:
        """Fano index I = sum(weights) - degree."""
        return sum(self.weights) - self.degree

    @property
    def septuple(self) -> tuple[int, ...]:
        return (*self.weights, self.degree, self.index)

    def __str__(self) -> str:
        return f"X_{self.degree} in P{self.weights}"


def weight_system(*values: int) -> WeightSystem:
    """Build a WeightSystem from (a1, ..., a5, d) or (a1, ..., a5, d, I)."""
    if len(values) == 7:
        ws = WeightSystem(tuple(values[:5]), values[5])
        if ws.index != values[6]:
            raise ValueError(f"inconsistent septuple: index is {ws.index}, not {values[6]}")
        return ws
    if len(values) == 6:
        return WeightSystem(tuple(values[:5]), values[5])
    raise ValueError("weight_system: expected 6 or 7 integers")


def parse_weight_system(text: str) -> WeightSystem:
    parts = [int(p) for p in text.replace(" ", "").split(",") if p]
    return weight_system(*parts)


def weighted_degree(m: Monomial, ws: WeightSystem) -> int:
    return sum(e * a for e, a in zip(m, ws.weights))


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))  # type: ignore[return-value]


def format_monomial(m: Monomial) -> str:
    """Text form mirroring the usual convention: "x^2*y*w", exponent 1 suppressed."""
    parts = []
    for var, e in zip(VARIABLES, m):
        if e == 1:
            parts.append(var)
        elif e > 1:
            parts.append(f"{var}^{e}")
        elif e < 0:
            raise ValueError("format_monomial: negative exponent")
    return "*".join(parts) if parts else "1"


_MONOMIAL_PART = re.compile(r"^([xyztw])(?:\^(\d+))?$")


def parse_monomial(text: str) -> Monomial:
    """Parse the grammar emitted by format_monomial (also accepts '1')."""
    text = text.strip()
    exps = [0] * NVARS
    if text == "1":
        return tuple(exps)  # type: ignore[return-value]
    for part in text.split("*"):
        m = _MONOMIAL_PART.match(part.strip())
        if not m:
            raise ValueError(f"parse_monomial: bad factor {part!r} in {text!r}")
        idx = VARIABLES.index(m.group(1))
        if exps[idx]:
            raise ValueError(f"parse_monomial: repeated variable in {text!r}")
        exps[idx] = int(m.group(2)) if m.group(2) else 1
    return tuple(exps)  # type: ignore[return-value]


def parse_monomial_set(text: str) -> frozenset[Monomial]:
    """Parse a comma-separated monomial list."""
    return frozenset(parse_monomial(p) for p in text.split(",") if p.strip())


def enumerate_monomials(ws: WeightSystem, k: int) -> list[Monomial]:
    """All monomials of weighted degree k, sorted lexicographically by exponents.

    The sort is on the exponent tuples (x before y before z before t before w),
    which pins a canonical serialization order for golden comparisons.
    """
    if k < 0:
        raise ValueError("enumerate_monomials: negative degree")
    weights = ws.weights
    out: list[Monomial] = []

    def rec(i: int, rem: int, cur: list[int]) -> None:
        if i == NVARS - 1:
            if rem % weights[i] == 0:
                out.append(tuple(cur + [rem // weights[i]]))  # type: ignore[arg-type]
            return
        for e in range(rem // weights[i] + 1):
            rec(i + 1, rem - e * weights[i], cur + [e])

    rec(0, k, [])
    out.sort()
    return out


def count_monomials(ws: WeightSystem, k: int) -> int:
    """Number of monomials of weighted degree k (coin-counting DP).

    Agrees with the coefficient of q^k in prod_i 1/(1 - q^(a_i)).
    """
    if k < 0:
        raise ValueError("count_monomials: negative degree")
    counts = [0] * (k + 1)
    counts[0] = 1
    for a in ws.weights:
        for v in range(a, k + 1):
            counts[v] += counts[v - a]
    return counts[k]


def wps_well_formed(ws: WeightSystem) -> bool:
    """True iff every four of the five weights are coprime (no quasi-reflections)."""
    a = ws.weights
    for i in range(NVARS):
        g = 0
        for j in range(NVARS):
            if j != i:
                g = gcd(g, a[j])
        if g != 1:
            return False
    return True


def format_monomial_set(monomials: Iterable[Monomial]) -> str:
    return ", ".join(format_monomial(m) for m in sorted(monomials))


def subset_weights(ws: WeightSystem, subset: Sequence[int]) -> tuple[int, ...]:
    return tuple(ws.weights[i] for i in subset)
