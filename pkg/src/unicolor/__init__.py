"""Unique colorability of uniform hypergraphs under positive-degree conditions."""
from .coloring import (
    Coloring,
    PartProfile,
    Uniqueness,
    are_equivalent,
    canonicalize,
    check_structural_props,
    classify_parts,
    enumerate_classes,
    is_proper,
    is_uniquely_colorable,
    uniqueness_status,
)
from .constructions import (
    ConstructionSpec,
    build_construction,
    build_nested_sunflowers,
    build_quasi_sunflower,
    complete_kpartite,
    hkr,
    random_kpartite,
    sample_kpartite_above,
)
from .core import (
    Hypergraph,
    Rational,
    VertexSet,
    degree,
    format_rational,
    has_isolated,
    link,
    min_positive_degree,
    pair_covered,
    parse_rational,
    shadow,
)
from .report import Report
from .thresholds import conjecture_probe, ffk_check, phase_point, phi, phi_upper

__version__ = "0.1.0"

__all__ = [
    "Coloring",
    "PartProfile",
    "Uniqueness",
    "are_equivalent",
    "canonicalize",
    "check_structural_props",
    "classify_parts",
    "enumerate_classes",
    "is_proper",
    "is_uniquely_colorable",
    "uniqueness_status",
    "ConstructionSpec",
    "build_construction",
    "build_nested_sunflowers",
    "build_quasi_sunflower",
    "complete_kpartite",
    "hkr",
    "random_kpartite",
    "sample_kpartite_above",
    "Hypergraph",
    "Rational",
    "VertexSet",
    "degree",
    "format_rational",
    "has_isolated",
    "link",
    "min_positive_degree",
    "pair_covered",
    "parse_rational",
    "shadow",
    "Report",
    "conjecture_probe",
    "ffk_check",
    "phase_point",
    "phi",
    "phi_upper",
]
