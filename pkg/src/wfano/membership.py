"""Defining predicates of a hypersurface family.

Well-formedness of the hypersurface, linear-cone exclusion, and the
combinatorial quasismoothness test for the general member.  "General member"
is treated purely combinatorially: the support is all monomials of degree d,
so every predicate here is a statement about which weighted monomials exist.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import gcd

from .wspace import NVARS, VARIABLES, WeightSystem, wps_well_formed

#: a coordinate stratum, as a sorted tuple of variable indices
StratumSelector = tuple[int, ...]


def format_stratum(s: StratumSelector) -> str:
    return "{" + ",".join(VARIABLES[i] for i in s) + "}"


@dataclass(frozen=True)
class MembershipReport:
    ws: WeightSystem
    wps_well_formed: bool
    hypersurface_well_formed: bool
    linear_cone: bool
    quasismooth_general: bool
    failing_strata: tuple[tuple[StratumSelector, str], ...] = field(default_factory=tuple)

    @property
    def accepted(self) -> bool:
        return (
            self.wps_well_formed
            and self.hypersurface_well_formed
            and not self.linear_cone
            and self.quasismooth_general
        )

    def to_dict(self) -> dict:
        return {
            "wpsWellFormed": self.wps_well_formed,
            "hypersurfaceWellFormed": self.hypersurface_well_formed,
            "linearCone": self.linear_cone,
            "quasismoothGeneral": self.quasismooth_general,
            "failingStrata": [
                {"stratum": format_stratum(s), "reason": r} for s, r in self.failing_strata
            ],
        }


@lru_cache(maxsize=1 << 20)
def representable(weights: tuple[int, ...], target: int) -> bool:
    """Does target = sum e_i * weights_i admit a nonnegative integer solution?"""
    if target == 0:
        return True
    if target < 0 or not weights:
        return False
    if len(weights) == 1:
        return target % weights[0] == 0
    w = weights[0]
    rest = weights[1:]
    for k in range(target // w + 1):
        if representable(rest, target - k * w):
            return True
    return False


def is_linear_cone(ws: WeightSystem) -> bool:
    """True iff d equals some weight, i.e. a variable appears linearly on its own."""
    return ws.degree in ws.weights


def _vertex_covered(ws: WeightSystem, i: int) -> bool:
    """Subset {x_i}: pure power x_i^(d/a_i), or some monomial x_i^m * x_j, m >= 1."""
    a, d = ws.weights, ws.degree
    if d % a[i] == 0:
        return True
    for j in range(NVARS):
        if j == i:
            continue
        r = d - a[j]
        if r >= a[i] and r % a[i] == 0:
            return True
    return False


def quasismooth_general(ws: WeightSystem) -> tuple[bool, list[tuple[StratumSelector, str]]]:
    """Quasismoothness of the general degree-d member.

    For every nonempty subset S of the variables, either (a) some monomial of
    degree d uses only variables of S, or (b) there are |S| monomials of the
    form (monomial in S) * x_j with pairwise distinct outside variables x_j.
    Since there are only 5 - |S| outside variables, (b) can only help subsets
    of size 1 or 2; larger subsets need a pure monomial.

    Returns (verdict, failing strata with reasons).
    """
    if is_linear_cone(ws):
        raise ValueError("quasismooth_general: linear cones are excluded upstream")
    a, d = ws.weights, ws.degree
    failing: list[tuple[StratumSelector, str]] = []
    for r in range(1, NVARS + 1):
        for subset in combinations(range(NVARS), r):
            wts = tuple(sorted(a[i] for i in subset))
            if representable(wts, d):
                continue
            outside = [j for j in range(NVARS) if j not in subset]
            witnesses = [j for j in outside if d - a[j] >= 0 and representable(wts, d - a[j])]
            if len(witnesses) < r:
                failing.append(
                    (
                        subset,
                        f"no pure degree-{d} monomial and only {len(witnesses)} of the "
                        f"required {r} outside variables admit one",
                    )
                )
    return not failing, failing


def hypersurface_well_formed(ws: WeightSystem) -> bool:
    """Ambient well-formedness plus codimension >= 2 contact with the singular locus.

    A two-dimensional singular stratum of the ambient space (a 3-variable
    stratum whose weights share a factor) would lie inside the general member
    exactly when no degree-d monomial uses only its variables; that is the one
    configuration that violates well-formedness of the hypersurface.
    """
    if not wps_well_formed(ws):
        return False
    a, d = ws.weights, ws.degree
    for subset in combinations(range(NVARS), 3):
        if gcd(gcd(a[subset[0]], a[subset[1]]), a[subset[2]]) > 1:
            wts = tuple(sorted(a[i] for i in subset))
            if not representable(wts, d):
                return False
    return True


def membership_report(ws: WeightSystem) -> MembershipReport:
    """Evaluate all defining predicates of the family at once."""
    cone = is_linear_cone(ws)
    if cone:
        qs, failing = False, []
    else:
        qs, failing = quasismooth_general(ws)
    return MembershipReport(
        ws=ws,
        wps_well_formed=wps_well_formed(ws),
        hypersurface_well_formed=hypersurface_well_formed(ws),
        linear_cone=cone,
        quasismooth_general=qs,
        failing_strata=tuple(failing),
    )


def fast_accept(ws: WeightSystem) -> bool:
    """Cheap-first evaluation of the membership conjunction (same verdict)."""
    if is_linear_cone(ws):
        return False
    for i in range(NVARS):
        if not _vertex_covered(ws, i):
            return False
    if not wps_well_formed(ws):
        return False
    if not hypersurface_well_formed(ws):
        return False
    return quasismooth_general(ws)[0]
