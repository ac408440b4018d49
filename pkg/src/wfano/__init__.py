"""Exact-arithmetic toolkit for quasismooth terminal weighted Fano 3-fold
hypersurfaces: weighted monomial combinatorics, the bounded classification
search, coordinate normalization pipelines, diagonal symmetry groups, and the
degree-of-irrationality decision procedure."""

from .wspace import (
    Monomial,
    WeightSystem,
    count_monomials,
    enumerate_monomials,
    format_monomial,
    parse_monomial,
    parse_weight_system,
    weight_system,
    wps_well_formed,
)
from .membership import (
    MembershipReport,
    hypersurface_well_formed,
    is_linear_cone,
    membership_report,
    quasismooth_general,
)
from .singular import (
    QuotientSingularity,
    SingularityBasket,
    reid_tai_terminal,
    singular_points_general,
    terminal_general,
)
from .catalog import (
    EXCEPTIONAL_EIGHT,
    FamilyRecord,
    SearchBounds,
    classify,
    load_catalog,
    projection_exceptional,
    save_catalog,
)
from .symalg import (
    GradedPolynomial,
    NormalizationPlan,
    Substitution,
    builtin_plan,
    cubic_normal_form,
    normalize,
    normalized_member,
    quasismooth_member,
    reference_support,
    sample_general_member,
    stratum_restriction,
    substitute,
)
from .symmetry import (
    DiagonalSymmetryGroup,
    certify_trivial_automorphisms,
    diagonal_symmetry_group,
    has_diagonal_involution,
    pgl2_set_stabilizer,
)
from .irrational import IrrationalityVerdict, decide, projection_degree

__version__ = "0.1.0"

__all__ = [
    "Monomial",
    "WeightSystem",
    "count_monomials",
    "enumerate_monomials",
    "format_monomial",
    "parse_monomial",
    "parse_weight_system",
    "weight_system",
    "wps_well_formed",
    "MembershipReport",
    "hypersurface_well_formed",
    "is_linear_cone",
    "membership_report",
    "quasismooth_general",
    "QuotientSingularity",
    "SingularityBasket",
    "reid_tai_terminal",
    "singular_points_general",
    "terminal_general",
    "EXCEPTIONAL_EIGHT",
    "FamilyRecord",
    "SearchBounds",
    "classify",
    "load_catalog",
    "projection_exceptional",
    "save_catalog",
    "GradedPolynomial",
    "NormalizationPlan",
    "Substitution",
    "builtin_plan",
    "cubic_normal_form",
    "normalize",
    "normalized_member",
    "quasismooth_member",
    "reference_support",
    "sample_general_member",
    "stratum_restriction",
    "substitute",
    "DiagonalSymmetryGroup",
    "certify_trivial_automorphisms",
    "diagonal_symmetry_group",
    "has_diagonal_involution",
    "pgl2_set_stabilizer",
    "IrrationalityVerdict",
    "decide",
    "projection_degree",
]
