"""Exhaustive classification of sdf-absorbing ideals in finite commutative rings."""

from __future__ import annotations

__version__ = "0.1.0"

from .classify import (
    ClassificationRecord,
    all_ideals_sdf_report,
    classify_ideal,
    classify_ring,
    fast_criteria,
    is_sdf_bruteforce,
    is_sdf_counterexample,
    is_weakly_prime,
    is_weakly_prime_counterexample,
    is_weakly_sdf_bruteforce,
    nil_zn_classification,
    sdf_in_Z,
    sdf_via_linear_system,
    zero_ideal_zn_closed_form,
)
from .corpus import CorpusSpec, build_corpus, fields_corpus
from .dsl import DslError, parse_elements, parse_ideal, parse_ring, parse_spec
from .errors import (
    ConstructionError,
    DefectError,
    DomainError,
    InapplicableError,
    InputError,
    ResourceError,
    SdfaError,
)
from .harness import REGISTRY, PropertyResult, replay, run_all, run_property
from .ideals import Ideal, enumerate_ideals, ideal_generated, is_prime, is_radical
from .report import ReportDocument
from .rings import (
    FiniteRing,
    ModuleSpec,
    RingHom,
    localize,
    make_amalgamation,
    make_galois_field,
    make_idealization,
    make_poly_quotient,
    make_product,
    make_quotient,
    make_zn,
)
from .verdict import Verdict

__all__ = [
    "__version__",
    "ClassificationRecord",
    "all_ideals_sdf_report",
    "classify_ideal",
    "classify_ring",
    "fast_criteria",
    "is_sdf_bruteforce",
    "is_sdf_counterexample",
    "is_weakly_prime",
    "is_weakly_prime_counterexample",
    "is_weakly_sdf_bruteforce",
    "nil_zn_classification",
    "sdf_in_Z",
    "sdf_via_linear_system",
    "zero_ideal_zn_closed_form",
    "CorpusSpec",
    "build_corpus",
    "fields_corpus",
    "DslError",
    "parse_elements",
    "parse_ideal",
    "parse_ring",
    "parse_spec",
    "ConstructionError",
    "DefectError",
    "DomainError",
    "InapplicableError",
    "InputError",
    "ResourceError",
    "SdfaError",
    "REGISTRY",
    "PropertyResult",
    "replay",
    "run_all",
    "run_property",
    "Ideal",
    "enumerate_ideals",
    "ideal_generated",
    "is_prime",
    "is_radical",
    "ReportDocument",
    "FiniteRing",
    "ModuleSpec",
    "RingHom",
    "localize",
    "make_amalgamation",
    "make_galois_field",
    "make_idealization",
    "make_poly_quotient",
    "make_product",
    "make_quotient",
    "make_zn",
    "Verdict",
]
