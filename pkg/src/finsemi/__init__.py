"""Finite semigroup toolkit: tables, inflation structure, automorphisms."""

from .automorphisms import (
    PermGroup,
    Permutation,
    SubgroupReport,
    automorphism_witness,
    compose,
    enumerate_automorphisms,
    identity,
    inverse,
    is_automorphism,
    subgroup_checks,
)
from .core import (
    CayleyTable,
    CongruenceWitness,
    Partition,
    check_associativity,
    compute_h,
    compute_psi,
    format_table,
    is_congruence,
    parse_table,
    product_set,
    relabel_table,
)
from .enumeration import (
    CorpusSummary,
    EnumerationTask,
    canonicalize,
    corpus_verify,
    enumerate_semigroups,
)
from .errors import (
    FinsemiError,
    MalformedInput,
    NotAnAutomorphism,
    NotAssociative,
    NotClosed,
    NotExtendable,
    OrderTooLarge,
)
from .inflation import (
    FiberSizeSpec,
    InflationWitness,
    RetractionMap,
    Transversal,
    build_inflation,
    choose_transversal,
    format_fiber_spec,
    induced_retraction,
    parse_fiber_spec,
    restrict_to_subsemigroup,
    retraction_from_theta,
    verify_inflation,
    verify_kernel_in_h,
)
from .theorem import (
    ExtensionScheme,
    TheoremReport,
    decompose_automorphism,
    embed_h,
    extend_automorphism,
    extendable_automorphisms,
    extension_scheme,
    predicted_class_group_order,
    psi_class_group,
    verify_theorem,
)

__version__ = "0.1.0"

__all__ = [
    "CayleyTable",
    "CongruenceWitness",
    "CorpusSummary",
    "EnumerationTask",
    "ExtensionScheme",
    "FiberSizeSpec",
    "FinsemiError",
    "InflationWitness",
    "MalformedInput",
    "NotAnAutomorphism",
    "NotAssociative",
    "NotClosed",
    "NotExtendable",
    "OrderTooLarge",
    "PermGroup",
    "Permutation",
    "RetractionMap",
    "SubgroupReport",
    "TheoremReport",
    "Transversal",
    "automorphism_witness",
    "build_inflation",
    "canonicalize",
    "check_associativity",
    "choose_transversal",
    "compose",
    "compute_h",
    "compute_psi",
    "corpus_verify",
    "decompose_automorphism",
    "embed_h",
    "enumerate_automorphisms",
    "enumerate_semigroups",
    "extend_automorphism",
    "extendable_automorphisms",
    "extension_scheme",
    "format_fiber_spec",
    "format_table",
    "identity",
    "induced_retraction",
    "inverse",
    "is_automorphism",
    "is_congruence",
    "parse_fiber_spec",
    "parse_table",
    "predicted_class_group_order",
    "product_set",
    "psi_class_group",
    "relabel_table",
    "restrict_to_subsemigroup",
    "retraction_from_theta",
    "subgroup_checks",
    "verify_inflation",
    "verify_kernel_in_h",
    "verify_theorem",
]
