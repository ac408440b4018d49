"""Diagonal symmetry groups, involution detection, and line stabilizers.

The group of diagonal coordinate scalings preserving a polynomial up to scalar
depends only on its support: it is the character group of Z^5 / L, where L is
the lattice generated by pairwise exponent differences.  Its free rank and
torsion are read off a Smith normal form.  The weighted one-parameter scaling
always survives, so "trivial" means free rank 1 and no torsion.

Stabilizers of finite point sets on the projective line are enumerated exactly
over the rationals by sending a base triple to every ordered triple of targets
and testing set preservation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from .exactmath import rational_roots, smith_normal_form
from .symalg import (
    GenericityError,
    builtin_plan,
    family_weight_system,
    normalize,
    sample_family_member,
    slice_form,
)
from .wspace import (
    Monomial,
    NVARS,
    WeightSystem,
    enumerate_monomials,
    format_monomial,
    weight_system,
    weighted_degree,
)


@dataclass(frozen=True)
class DiagonalSymmetryGroup:
    """Free rank and torsion of the diagonal-scaling symmetry group.

    torsion_generators holds one rational exponent vector q per torsion factor:
    the scaling x_k -> exp(2*pi*i*q_k) * x_k generates that factor, and every
    support difference pairs integrally with q (checked on construction).
    """

    free_rank: int
    torsion: tuple[int, ...]
    torsion_generators: tuple[tuple[Fraction, ...], ...] = ()

    @property
    def induced_trivial(self) -> bool:
        return self.free_rank == 1 and not self.torsion

    def to_dict(self) -> dict:
        return {
            "freeRank": self.free_rank,
            "torsion": list(self.torsion),
            "inducedTrivial": self.induced_trivial,
            "torsionGenerators": [[str(q) for q in g] for g in self.torsion_generators],
        }


def _difference_rows(support: frozenset[Monomial] | set[Monomial]) -> list[list[int]]:
    mons = sorted(support)
    base = mons[0]
    return [[m[i] - base[i] for i in range(NVARS)] for m in mons[1:]]


def diagonal_symmetry_group(
    support: frozenset[Monomial] | set[Monomial], ws: WeightSystem
) -> DiagonalSymmetryGroup:
    """Diagonal scalings fixing every ratio of support monomials.

    The support must be nonempty and of a single grade.  Free rank is always
    at least 1 (the weighted scaling); torsion factors come with explicit
    root-of-unity generator vectors.
    """
    if not support:
        raise ValueError("diagonal_symmetry_group: empty support")
    grades = {weighted_degree(m, ws) for m in support}
    if len(grades) != 1:
        raise ValueError("diagonal_symmetry_group: mixed grades in support")
    rows = _difference_rows(support)
    if not rows:
        # single monomial: every diagonal scaling fixes it up to scalar
        return DiagonalSymmetryGroup(free_rank=NVARS, torsion=())
    snf = smith_normal_form(rows)
    divisors = [d for d in snf.diagonal if d != 0]
    rank = len(divisors)
    torsion = tuple(d for d in divisors if d > 1)
    # Character generators: with U A V = D, the transformed lattice is spanned
    # by d_k * e_k, so the character with exponent vector (column k of V)/d_k
    # pairs integrally with every difference and has order exactly d_k (the
    # column is primitive because V is unimodular).
    generators = []
    v = snf.right
    for k, d in enumerate(snf.diagonal):
        if d > 1:
            q = tuple(Fraction(v[i][k], d) for i in range(NVARS))
            for row in rows:
                pairing = sum(qi * ri for qi, ri in zip(q, row))
                if pairing.denominator != 1:
                    raise RuntimeError("torsion generator fails integrality check")
            generators.append(q)
    return DiagonalSymmetryGroup(
        free_rank=NVARS - rank, torsion=torsion, torsion_generators=tuple(generators)
    )


def has_diagonal_involution(
    support: frozenset[Monomial] | set[Monomial], ws: WeightSystem
) -> tuple[bool, tuple[int, ...] | None]:
    """Is there a sign-vector symmetry beyond the weighted scaling torus?

    Any order-2 element of the symmetry group modulo the torus is represented
    by a sign vector, so this reduces to linear algebra over F_2: the answer is
    yes iff the mod-2 kernel of the difference matrix is larger than the span
    of the mod-2 weight vector.  The witness is the lexicographically smallest
    nontrivial solution, as a +-1 vector encoded by its sign pattern.
    """
    if not support:
        raise ValueError("has_diagonal_involution: empty support")
    rows = [[x % 2 for x in r] for r in _difference_rows(support)]
    kernel = _f2_kernel(rows)
    torus = tuple(a % 2 for a in ws.weights)
    solutions = sorted(v for v in kernel if v != (0,) * NVARS and v != torus)
    if not solutions:
        return False, None
    return True, solutions[0]


def _f2_kernel(rows: list[list[int]]) -> list[tuple[int, ...]]:
    """All vectors v in F_2^5 with row . v = 0 for every row."""
    mat = [r[:] for r in rows if any(r)]
    pivots: list[int] = []
    rank = 0
    for c in range(NVARS):
        pr = next((i for i in range(rank, len(mat)) if mat[i][c]), None)
        if pr is None:
            continue
        mat[rank], mat[pr] = mat[pr], mat[rank]
        for i in range(len(mat)):
            if i != rank and mat[i][c]:
                mat[i] = [a ^ b for a, b in zip(mat[i], mat[rank])]
        pivots.append(c)
        rank += 1
    free = [c for c in range(NVARS) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * NVARS
        v[fc] = 1
        for i, pc in enumerate(pivots):
            v[pc] = sum(mat[i][j] & v[j] for j in free) % 2
        basis.append(v)
    out = []
    for mask in range(1 << len(basis)):
        v = [0] * NVARS
        for b in range(len(basis)):
            if mask >> b & 1:
                v = [a ^ c for a, c in zip(v, basis[b])]
        out.append(tuple(v))
    return out


def signs_from_witness(witness: tuple[int, ...]) -> tuple[int, ...]:
    """Translate an F_2 log-vector into the +-1 scaling it represents."""
    return tuple(-1 if b else 1 for b in witness)


def involution_template_support() -> tuple[frozenset[Monomial], WeightSystem]:
    """Support template of a quartic invariant under (t, w) -> (-t, -w).

    These are exactly the degree-4 monomials on unit weights whose total
    (t, w)-degree is even: h4(x,y,z) + t^2 a2 + t w b2 + w^2 c2 + g4(t,w).
    """
    ws = weight_system(1, 1, 1, 1, 1, 4)
    support = frozenset(
        m for m in enumerate_monomials(ws, 4) if (m[3] + m[4]) % 2 == 0
    )
    return support, ws


# ---------------------------------------------------------------------------
# stabilizers of point sets on the projective line

#: a point [p : q] on the line, primitive pair, or INFINITY
P1Point = tuple[int, int]

INFINITY: P1Point = (0, 1)


def p1_point(value: Fraction | int | str) -> P1Point:
    """Normalize a rational number (or 'inf') to a primitive [p : q] pair.

    Convention: the point [p : q] is the value q/p, i.e. the pair is (1, v)
    for a finite rational v and (0, 1) for infinity, matching the root pairs
    produced by the binary-form machinery.
    """
    if isinstance(value, str):
        if value.strip().lower() in ("inf", "infinity", "oo"):
            return INFINITY
        value = Fraction(value)
    v = Fraction(value)
    return (v.denominator, v.numerator)


@dataclass(frozen=True)
class MoebiusMap:
    """Fractional-linear map by a primitive integer matrix, canonical sign."""

    matrix: tuple[tuple[int, int], tuple[int, int]]

    def __call__(self, point: P1Point) -> P1Point:
        (a, b), (c, d) = self.matrix
        # [p : q] -> matrix action on the (u, v) coordinates of [u : v]
        p, q = point
        u, v = a * p + b * q, c * p + d * q
        return _normalize_pair(u, v)

    def compose(self, other: "MoebiusMap") -> "MoebiusMap":
        (a, b), (c, d) = self.matrix
        (e, f), (g, h) = other.matrix
        return moebius_map(((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h)))

    def inverse(self) -> "MoebiusMap":
        (a, b), (c, d) = self.matrix
        return moebius_map(((d, -b), (-c, a)))

    @property
    def is_identity(self) -> bool:
        (a, b), (c, d) = self.matrix
        return b == 0 and c == 0 and a == d

    def describe(self) -> str:
        def lin(p: int, q: int) -> str:
            parts = []
            if p:
                parts.append(f"{p:+d}u".replace("+1u", "+u").replace("-1u", "-u"))
            if q:
                parts.append(f"{q:+d}v".replace("+1v", "+v").replace("-1v", "-v"))
            return "".join(parts).lstrip("+") or "0"

        (a, b), (c, d) = self.matrix
        return f"[u:v] -> [{lin(a, b)} : {lin(c, d)}]"


def _normalize_pair(u: int, v: int) -> P1Point:
    from math import gcd as _g

    if u == 0 and v == 0:
        raise ValueError("degenerate projective point")
    g = _g(abs(u), abs(v))
    u, v = u // g, v // g
    if u < 0 or (u == 0 and v < 0):
        u, v = -u, -v
    return (u, v)


def moebius_map(matrix: tuple[tuple[int, int], tuple[int, int]]) -> MoebiusMap:
    (a, b), (c, d) = matrix
    if a * d - b * c == 0:
        raise ValueError("moebius_map: singular matrix")
    from math import gcd as _g

    g = 0
    for x in (a, b, c, d):
        g = _g(g, abs(x))
    a, b, c, d = a // g, b // g, c // g, d // g
    for x in (a, b, c, d):
        if x != 0:
            if x < 0:
                a, b, c, d = -a, -b, -c, -d
            break
    return MoebiusMap(((a, b), (c, d)))


def _map_through_triple(src: tuple[P1Point, P1Point, P1Point], dst: tuple[P1Point, P1Point, P1Point]) -> MoebiusMap:
    """The unique fractional-linear map sending the source triple to the target."""

    def to_standard(t: tuple[P1Point, P1Point, P1Point]) -> tuple[tuple[int, int], tuple[int, int]]:
        # matrix sending [1:0], [0:1], [1:1] to the triple (p_i, q_i)
        (p0, q0), (p1, q1), (p2, q2) = t
        det = p0 * q1 - p1 * q0
        lam = p2 * q1 - p1 * q2
        mu = p0 * q2 - p2 * q0
        m = ((lam * p0, mu * p1), (lam * q0, mu * q1))
        if m[0][0] * m[1][1] - m[0][1] * m[1][0] == 0:
            raise ValueError("coincident points in triple")
        return m

    ms = to_standard(src)
    md = to_standard(dst)
    inv_ms = ((ms[1][1], -ms[0][1]), (-ms[1][0], ms[0][0]))
    prod = (
        (
            md[0][0] * inv_ms[0][0] + md[0][1] * inv_ms[1][0],
            md[0][0] * inv_ms[0][1] + md[0][1] * inv_ms[1][1],
        ),
        (
            md[1][0] * inv_ms[0][0] + md[1][1] * inv_ms[1][0],
            md[1][0] * inv_ms[0][1] + md[1][1] * inv_ms[1][1],
        ),
    )
    return moebius_map(prod)


def pgl2_set_stabilizer(points: list[P1Point]) -> list[MoebiusMap]:
    """All fractional-linear maps permuting a finite set of >= 3 points.

    Built by mapping a fixed base triple to every ordered triple of targets
    and keeping the maps that preserve the set; closure under composition and
    inverses is verified before returning.
    """
    pts = [_normalize_pair(*p) for p in points]
    if len(set(pts)) != len(pts):
        raise ValueError("pgl2_set_stabilizer: points must be distinct")
    if len(pts) < 3:
        raise ValueError("pgl2_set_stabilizer: fewer than 3 points has infinite stabilizer")
    base = tuple(pts[:3])
    point_set = set(pts)
    found: dict[tuple[tuple[int, int], tuple[int, int]], MoebiusMap] = {}
    for triple in permutations(pts, 3):
        m = _map_through_triple(base, triple)  # type: ignore[arg-type]
        if m.matrix in found:
            continue
        if all(m(p) in point_set for p in pts):
            found[m.matrix] = m
    maps = list(found.values())
    for m in maps:
        if m.inverse().matrix not in found:
            raise RuntimeError("stabilizer not closed under inverse")
        for n in maps:
            if m.compose(n).matrix not in found:
                raise RuntimeError("stabilizer not closed under composition")
    maps.sort(key=lambda m: m.matrix)
    return maps


# ---------------------------------------------------------------------------
# certificates


@dataclass(frozen=True)
class AutomorphismCertificate:
    family: int
    seed: int
    support: frozenset[Monomial]
    group: DiagonalSymmetryGroup
    has_involution: bool
    point_set: tuple[P1Point, ...] | None
    stabilizer_order: int | None
    checks: tuple[str, ...]

    @property
    def trivial(self) -> bool:
        ok = self.group.induced_trivial and not self.has_involution
        if self.point_set is not None:
            ok = ok and self.stabilizer_order == 1
        return ok

    def to_json(self) -> str:
        payload = {
            "family": self.family,
            "seed": self.seed,
            "support": [format_monomial(m) for m in sorted(self.support)],
            "diagonalGroup": self.group.to_dict(),
            "hasInvolution": self.has_involution,
            "pointSet": [list(p) for p in self.point_set] if self.point_set else None,
            "stabilizerOrder": self.stabilizer_order,
            "checks": list(self.checks),
            "trivial": self.trivial,
        }
        return json.dumps(payload, indent=1, sort_keys=True) + "\n"


#: slice data for the line argument: family -> (pair, extra cofactor slices)
_LINE_SLICES: dict[int, tuple[tuple[int, int], tuple[str, ...]]] = {
    19: ((2, 3), ("1", "y^3")),  # quartic on x=y=w=0 plus the y^3 coefficient conic
    28: ((1, 2), ("1",)),  # quintic on x=t=w=0
}


def certify_trivial_automorphisms(family: int, seed: int = 0) -> AutomorphismCertificate:
    """Machine-checkable certificate that the reduced member admits only the torus.

    Stages: (i) sample and reduce a general member, (ii) for the two families
    with a residual equal-weight 2x2 block, extract the designated point set on
    the invariant line and verify its stabilizer is trivial, (iii) verify the
    diagonal symmetry group of the reduced support is exactly the weighted
    scaling torus, with no sign involution.
    """
    plan = builtin_plan(family)
    ws = family_weight_system(family)
    checks: list[str] = []
    last_error: Exception | None = None
    for attempt in range(8):
        try:
            f = sample_family_member(family, seed=seed + attempt)
            g, _ = normalize(f, plan)
            break
        except GenericityError as exc:  # resample on degenerate draws
            last_error = exc
    else:
        raise GenericityError(f"certify: sampling stage failed for family {family}: {last_error}")
    checks.append(f"sampled general member (seed {seed + attempt}) and reduced it")
    support = g.support
    group = diagonal_symmetry_group(support, ws)
    invol, witness = has_diagonal_involution(support, ws)
    checks.append(
        f"diagonal group of the reduced support: free rank {group.free_rank}, "
        f"torsion {list(group.torsion)}"
    )
    point_set: tuple[P1Point, ...] | None = None
    stab_order: int | None = None
    if family in _LINE_SLICES:
        pair, cofactors = _LINE_SLICES[family]
        pts: list[P1Point] = []
        from .wspace import parse_monomial

        for cof in cofactors:
            form = slice_form(g, pair, parse_monomial(cof))
            roots = rational_roots(form)
            pts.extend(roots)
        if len(set(pts)) != len(pts):
            raise GenericityError(f"certify: designated points collide for family {family}")
        stab = pgl2_set_stabilizer(pts)
        point_set = tuple(pts)
        stab_order = len(stab)
        checks.append(
            f"invariant-line point set of size {len(pts)} has stabilizer of order {stab_order}"
        )
    return AutomorphismCertificate(
        family=family,
        seed=seed,
        support=support,
        group=group,
        has_involution=invol,
        point_set=point_set,
        stabilizer_order=stab_order,
        checks=tuple(checks),
    )
