"""Singular points of the general member and terminality.

The general member is quasismooth, so it is singular exactly where the ambient
space is: at coordinate vertices it passes through, and along coordinate
strata whose weights share a factor.  Each isolated singular point is a cyclic
quotient singularity; the Reid--Tai criterion then decides terminality.  Any
positive-dimensional singular locus rules terminality out immediately, since
terminal 3-fold singularities are isolated.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import gcd

from .membership import StratumSelector, format_stratum
from .wspace import NVARS, VARIABLES, WeightSystem


@dataclass(frozen=True)
class QuotientSingularity:
    """Isolated cyclic quotient type 1/r(w1, w2, w3), local weights in [1, r-1]."""

    order: int
    local_weights: tuple[int, int, int]

    def __post_init__(self) -> None:
        if self.order < 2:
            raise ValueError("QuotientSingularity: order must be >= 2")
        for w in self.local_weights:
            if not 1 <= w < self.order:
                raise ValueError("QuotientSingularity: local weights must lie in [1, r-1]")
            if gcd(w, self.order) != 1:
                raise ValueError(
                    "QuotientSingularity: weights must be coprime to the order "
                    "(non-isolated types are tracked separately)"
                )

    def canonical(self) -> tuple[int, tuple[int, int, int]]:
        """Normal form under generator change: lexicographically least scaling."""
        r = self.order
        best = None
        for c in range(1, r):
            if gcd(c, r) != 1:
                continue
            scaled = tuple(sorted((c * w) % r for w in self.local_weights))
            if best is None or scaled < best:
                best = scaled
        return r, best  # type: ignore[return-value]

    def equivalent_to(self, other: "QuotientSingularity") -> bool:
        return self.canonical() == other.canonical()

    def __str__(self) -> str:
        return f"1/{self.order}({','.join(str(w) for w in self.local_weights)})"


@dataclass(frozen=True)
class BasketPoint:
    location: str
    count: int
    singularity: QuotientSingularity

    def __str__(self) -> str:
        return f"{self.count} x {self.singularity} at {self.location}"


@dataclass(frozen=True)
class SingularityBasket:
    points: tuple[BasketPoint, ...]
    non_isolated: tuple[tuple[StratumSelector, str], ...] = field(default_factory=tuple)

    @property
    def terminal_eligible(self) -> bool:
        return not self.non_isolated

    def to_strings(self) -> list[str]:
        return [
            f"{p.count} x 1/{p.singularity.order}"
            f"({','.join(str(w) for w in p.singularity.local_weights)})"
            for p in self.points
        ]


def reid_tai_terminal(q: QuotientSingularity) -> bool:
    """Reid--Tai: terminal iff every age sum_i frac(k*w_i/r) exceeds 1.

    Evaluated in integers: sum((k*w_i) mod r) > r for all k in 1..r-1.
    """
    r = q.order
    for k in range(1, r):
        if sum((k * w) % r for w in q.local_weights) <= r:
            return False
    return True


def _edge_monomial_count(ai: int, aj: int, d: int) -> int:
    return sum(1 for alpha in range(d // ai + 1) if (d - alpha * ai) % aj == 0)


def _stratum_monomial_count(weights: tuple[int, ...], d: int, cap: int = 2) -> int:
    """Number of monomials of degree d on the stratum, counted up to ``cap``."""
    count = 0

    def rec(i: int, rem: int) -> None:
        nonlocal count
        if count >= cap:
            return
        if i == len(weights) - 1:
            if rem % weights[i] == 0:
                count += 1
            return
        for k in range(rem // weights[i] + 1):
            rec(i + 1, rem - k * weights[i])
            if count >= cap:
                return

    rec(0, d)
    return count


def _vertex_solving_indices(ws: WeightSystem, i: int) -> list[int]:
    a, d = ws.weights, ws.degree
    return [
        j
        for j in range(NVARS)
        if j != i and d - a[j] >= a[i] and (d - a[j]) % a[i] == 0
    ]


def singular_points_general(ws: WeightSystem, _checked: bool = False) -> SingularityBasket:
    """Locate the singular points of a general member and their quotient types.

    Vertices: a coordinate point P_i with a_i >= 2 lies on X iff a_i does not
    divide d; its local type is 1/a_i of the three weights other than a_i and
    the solving variable a_j (the smallest-index j with a monomial x_i^m x_j),
    reduced mod a_i.  Edges with weight gcd q >= 2 meet X in (#edge monomials
    - 1) points of transverse type 1/q(other three weights mod q), or lie
    inside X when there are no edge monomials.  Any configuration with a
    positive-dimensional singular locus (contained edge, reduced local weight
    0 or sharing a factor with the order, or a 3-variable stratum with weight
    gcd > 1 meeting X in a curve) is recorded in non_isolated.
    """
    if not _checked:
        from .membership import fast_accept

        if not fast_accept(ws):
            raise ValueError(
                f"singular_points_general: {ws} fails the membership predicates; "
                "singularity types are undefined"
            )
    a, d = ws.weights, ws.degree
    points: list[BasketPoint] = []
    non_isolated: list[tuple[StratumSelector, str]] = []

    # 2-dimensional singular strata: X meets them in a curve of singular points
    # unless the restricted equation is a single monomial.
    for subset in combinations(range(NVARS), 3):
        q = gcd(gcd(a[subset[0]], a[subset[1]]), a[subset[2]])
        if q <= 1:
            continue
        wts = tuple(sorted(a[i] for i in subset))
        n = _stratum_monomial_count(wts, d, cap=2)
        if n == 0:
            non_isolated.append((subset, f"stratum with weight gcd {q} lies inside X"))
        elif n >= 2:
            non_isolated.append(
                (subset, f"X meets the gcd-{q} stratum in a curve of singular points")
            )

    # vertices
    for i in range(NVARS):
        ai = a[i]
        if ai == 1 or d % ai == 0:
            continue  # smooth point, or vertex off X (pure power present)
        js = _vertex_solving_indices(ws, i)
        if not js:
            raise ValueError("singular_points_general: uncovered vertex on a quasismooth input")
        types = []
        for j in js:
            wts = tuple(a[k] % ai for k in range(NVARS) if k not in (i, j))
            types.append(wts)
        wts = types[0]
        location = f"vertex {VARIABLES[i]}"
        if any(w == 0 or gcd(w, ai) != 1 for w in wts):
            non_isolated.append(((i,), f"vertex type 1/{ai}{wts} has a non-coprime weight"))
            continue
        sing = QuotientSingularity(ai, tuple(sorted(wts)))  # type: ignore[arg-type]
        for other in types[1:]:
            if any(w == 0 or gcd(w, ai) != 1 for w in other):
                continue
            alt = QuotientSingularity(ai, tuple(sorted(other)))  # type: ignore[arg-type]
            if not sing.equivalent_to(alt):
                raise RuntimeError(
                    f"inconsistent vertex types at {location}: {sing} vs {alt}"
                )
        points.append(BasketPoint(location, 1, sing))

    # edges
    for i, j in combinations(range(NVARS), 2):
        q = gcd(a[i], a[j])
        if q <= 1:
            continue
        n = _edge_monomial_count(a[i], a[j], d)
        location = f"edge {VARIABLES[i]}{VARIABLES[j]}"
        if n == 0:
            non_isolated.append(((i, j), f"edge with weight gcd {q} lies inside X"))
            continue
        npts = n - 1
        if npts == 0:
            continue
        wts = tuple(a[k] % q for k in range(NVARS) if k not in (i, j))
        if any(w == 0 or gcd(w, q) != 1 for w in wts):
            non_isolated.append(((i, j), f"edge type 1/{q}{wts} has a non-coprime weight"))
            continue
        sing = QuotientSingularity(q, tuple(sorted(wts)))  # type: ignore[arg-type]
        points.append(BasketPoint(location, npts, sing))

    return SingularityBasket(points=tuple(points), non_isolated=tuple(non_isolated))


def terminal_general(ws: WeightSystem, _checked: bool = False) -> bool:
    """True iff the general member has only terminal singularities."""
    basket = singular_points_general(ws, _checked=_checked)
    if basket.non_isolated:
        return False
    return all(reid_tai_terminal(p.singularity) for p in basket.points)


def format_non_isolated(entries: tuple[tuple[StratumSelector, str], ...]) -> list[str]:
    return [f"{format_stratum(s)}: {reason}" for s, reason in entries]
