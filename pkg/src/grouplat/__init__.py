"""Closure operators, formations, and finite spaces over catalogs of small groups."""

from __future__ import annotations

from .classes import (
    GroupClass,
    class_from_text,
    empty_class,
    full_class,
    lift_class,
    parse_class_expr,
    predicate_class,
    restrict_class,
)
from .errors import (
    BoundTooLarge,
    EmptyFormation,
    ExpressionError,
    FormatError,
    GroupLatError,
    NotAFormation,
    NotAntisymmetric,
    NotInCatalog,
    NotNormal,
    NotPrime,
    NotSubgroup,
    OrderExceedsBound,
    UniverseMismatch,
    UnknownName,
    UnknownPredicate,
    VersionMismatch,
)
from .formations import (
    FormationSpec,
    ResidualWitness,
    class_product,
    class_product_associativity_gap,
    fitting_closure,
    formation_closure,
    gaschutz_product,
    residual,
    residual_composition_check,
    residual_epi_commute_check,
    residual_members_of_table,
    verify_formation,
)
from .groups import (
    GroupTable,
    alternating,
    cyclic,
    cyclic_semidirect,
    dicyclic,
    dihedral,
    direct_product,
    elementary_abelian,
    find_isomorphism,
    generalized_dihedral,
    isomorphic,
    special_linear_2_3,
    symmetric,
    trivial_group,
)
from .operators import (
    AdditivityVerdict,
    AdjunctionReport,
    AxiomReport,
    Compose,
    Join,
    LeqVerdict,
    Meet,
    Primitive,
    apply,
    apply_text,
    check_additive,
    check_adjunction,
    check_axioms,
    check_leq,
    comparison_edges,
    parse_operator,
    render_operator,
)
from .topology import (
    CoreResult,
    FinitePreorder,
    ProbeResult,
    alexandrov_closure,
    build_preorder,
    connected_components_bfs,
    connected_components_union_find,
    homotopy_equivalent,
    is_path_connected,
    operator_space_probe,
    stong_core,
    to_dot,
)
from .universe import (
    MAX_SUPPORTED_ORDER,
    Universe,
    UniverseEntry,
    build_universe,
    catalog_counts,
    load_catalog,
    render_catalog,
    save_catalog,
)
from .verify import CheckResult, RunReport, run_verification

__version__ = "0.1.0"

__all__ = [
    "AdditivityVerdict",
    "AdjunctionReport",
    "AxiomReport",
    "BoundTooLarge",
    "CheckResult",
    "Compose",
    "CoreResult",
    "EmptyFormation",
    "ExpressionError",
    "FinitePreorder",
    "FormatError",
    "FormationSpec",
    "GroupClass",
    "GroupLatError",
    "GroupTable",
    "Join",
    "LeqVerdict",
    "MAX_SUPPORTED_ORDER",
    "Meet",
    "NotAFormation",
    "NotAntisymmetric",
    "NotInCatalog",
    "NotNormal",
    "NotPrime",
    "NotSubgroup",
    "OrderExceedsBound",
    "Primitive",
    "ProbeResult",
    "ResidualWitness",
    "RunReport",
    "Universe",
    "UniverseEntry",
    "UniverseMismatch",
    "UnknownName",
    "UnknownPredicate",
    "VersionMismatch",
    "alexandrov_closure",
    "alternating",
    "apply",
    "apply_text",
    "build_preorder",
    "build_universe",
    "catalog_counts",
    "check_additive",
    "check_adjunction",
    "check_axioms",
    "check_leq",
    "class_from_text",
    "class_product",
    "class_product_associativity_gap",
    "comparison_edges",
    "connected_components_bfs",
    "connected_components_union_find",
    "cyclic",
    "cyclic_semidirect",
    "dicyclic",
    "dihedral",
    "direct_product",
    "elementary_abelian",
    "empty_class",
    "find_isomorphism",
    "fitting_closure",
    "formation_closure",
    "full_class",
    "gaschutz_product",
    "generalized_dihedral",
    "homotopy_equivalent",
    "is_path_connected",
    "isomorphic",
    "lift_class",
    "load_catalog",
    "operator_space_probe",
    "parse_class_expr",
    "parse_operator",
    "predicate_class",
    "render_catalog",
    "render_operator",
    "residual",
    "residual_composition_check",
    "residual_epi_commute_check",
    "residual_members_of_table",
    "restrict_class",
    "run_verification",
    "save_catalog",
    "special_linear_2_3",
    "stong_core",
    "symmetric",
    "to_dot",
    "trivial_group",
    "verify_formation",
]
