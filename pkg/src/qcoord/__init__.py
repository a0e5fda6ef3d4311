"""Exact computation in the quantum 3x3 matrix algebra and its torus-invariant primes."""

from .catalog import Catalog, CatalogIntegrityError, ParameterError, catalog_load, primitive_ideal_generators
from .hopf import apply_antipode, apply_antipode_inverse, apply_composite, apply_rho, apply_tau, parse_composite
from .ideals import (
    HPrimeSpec,
    Permutation,
    build_hprime,
    check_polynormal,
    commutation_scalar,
    containment_poset,
    filtered_member,
    graded_basis,
    is_normal,
    is_normal_binomial,
    member,
)
from .qmatrix import X, AlgebraElement, GlElement, MinorSpec, normal_form, quantum_determinant, quantum_minor, weight
from .qtorus import TorusPresentation, integer_kernel, presentation_from_generators, verify_center_entry, verify_fraction_identity
from .scalars import ALPHA, BETA, GAMMA, Q, QHAT, QINV, LaurentScalar
from .suites import Check, VerificationReport, verify_suite, verify_symmetry_table

__version__ = "0.1.0"

__all__ = [
    "AlgebraElement",
    "ALPHA",
    "apply_antipode",
    "apply_antipode_inverse",
    "apply_composite",
    "apply_rho",
    "apply_tau",
    "BETA",
    "build_hprime",
    "Catalog",
    "catalog_load",
    "CatalogIntegrityError",
    "Check",
    "check_polynormal",
    "commutation_scalar",
    "containment_poset",
    "filtered_member",
    "GAMMA",
    "GlElement",
    "graded_basis",
    "HPrimeSpec",
    "integer_kernel",
    "is_normal",
    "is_normal_binomial",
    "LaurentScalar",
    "member",
    "MinorSpec",
    "normal_form",
    "ParameterError",
    "parse_composite",
    "Permutation",
    "presentation_from_generators",
    "primitive_ideal_generators",
    "Q",
    "QHAT",
    "QINV",
    "quantum_determinant",
    "quantum_minor",
    "TorusPresentation",
    "VerificationReport",
    "verify_center_entry",
    "verify_fraction_identity",
    "verify_suite",
    "verify_symmetry_table",
    "weight",
    "X",
]

