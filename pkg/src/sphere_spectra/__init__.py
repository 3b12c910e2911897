"""Exact spectra of higher spin and odd-order conformally invariant operators on spheres."""
from .closed_form import (
    D_odd_eigen,
    D_odd_k_eigen,
    P_k_eigen,
    P_k_sq_eigen,
    TTstar_eigen,
    c_i_const,
    factored_identity_check,
    gamma_ratio,
    higher_spin_eigen,
    higher_spin_sq_eigen,
    spectral_Z,
    spectral_Z_float,
)
from .engine import (
    FACTORED_ODD_ORDER,
    HIGHER_SPIN,
    SPECTRAL_FUNCTION,
    OperatorSpec,
    SpectrumTable,
    loop_products,
    neighbors,
    propagate,
    transition_quotient,
)
from .errors import ConsistencyError, DomainError, PoleError, SpectraError, StructuralError
from .rep_oracle import bochner, casimir, dirac_square, lichnerowicz_check, weyl_dim
from .verify import run_suite, verify_against_closed_form
from .weights import (
    FORM,
    SYMMETRIC,
    BundleSpec,
    IsotypicLabel,
    branches,
    enumerate_labels,
    label_to_weight,
    rho,
    validate_dominant,
    weight_to_label,
)

__version__ = "0.1.0"

__all__ = [
    "BundleSpec",
    "ConsistencyError",
    "D_odd_eigen",
    "D_odd_k_eigen",
    "DomainError",
    "FACTORED_ODD_ORDER",
    "FORM",
    "HIGHER_SPIN",
    "IsotypicLabel",
    "OperatorSpec",
    "P_k_eigen",
    "P_k_sq_eigen",
    "PoleError",
    "SPECTRAL_FUNCTION",
    "SYMMETRIC",
    "SpectraError",
    "SpectrumTable",
    "StructuralError",
    "TTstar_eigen",
    "bochner",
    "branches",
    "c_i_const",
    "casimir",
    "dirac_square",
    "enumerate_labels",
    "factored_identity_check",
    "gamma_ratio",
    "higher_spin_eigen",
    "higher_spin_sq_eigen",
    "label_to_weight",
    "lichnerowicz_check",
    "loop_products",
    "neighbors",
    "propagate",
    "rho",
    "run_suite",
    "spectral_Z",
    "spectral_Z_float",
    "transition_quotient",
    "validate_dominant",
    "verify_against_closed_form",
    "weight_to_label",
    "weyl_dim",
]
