"""Nilpotent orbits of simple Lie algebras in good characteristic: weighted
Dynkin diagrams, stability under split and twisted Frobenius maps, and
brute-force finite-field checks."""

from .errors import (
    BudgetError,
    HypothesisError,
    InvalidLabelError,
    InvalidTypeError,
    NilorbitError,
    UnsupportedError,
)
from .frobenius import (
    FrobeniusDescriptor,
    StabilityReport,
    frobenius_classes,
    frobenius_descriptor,
    frobenius_image,
    is_stable,
    orbit_action,
    rationality_report,
)
from .orbits import (
    OrbitLabel,
    Partition,
    closure,
    closure_poset,
    dominance_leq,
    enumerate_orbit_labels,
    is_very_even,
    parse_label,
)
from .roottypes import (
    DiagramAutomorphism,
    DynkinType,
    RootSystem,
    apply_automorphism,
    build_root_system,
    coxeter_number,
    diagram_automorphisms,
    good_prime,
    parse_type,
)
from .wdd import (
    HList,
    OneParamSubgroup,
    WeightedDynkinDiagram,
    d4_table,
    grading_dimension,
    h_list,
    one_param_subgroup,
    orbit_dimension,
    wdd_type_A,
    wdd_type_D,
    weighted_diagram,
)

__version__ = "0.1.0"
