"""Exact computation with jet spaces of affine varieties.

The package builds, for an affine variety cut out by explicit polynomial
equations, the variety of its order-m arcs as an explicit weighted
homogeneous ideal, and provides the Groebner-basis toolkit (normal forms,
elimination, intersections, quotients, saturations, dimension, radical
membership) needed to interrogate it.
"""

from .analysis import (
    Verdict,
    claim_ids,
    example_suite,
    flatness_fiber_gap,
    irreducibility_failure_check,
    main_component,
    nilpotent_witness,
    quadric_x1_report,
    smooth_fiber_check,
    structural_suite,
)
from .coeffs import DEFAULT_PRIME, QQ, PrimeField, RationalField
from .errors import (
    BudgetExceededError,
    InputError,
    JetcasError,
    ParseError,
    PreconditionError,
)
from .groebner import (
    Budget,
    DimReport,
    Ideal,
    eliminate,
    groebner_basis,
    ideal_equal,
    intersect,
    krull_dim,
    normal_form,
    quotient,
    radical_member,
    saturate,
)
from .jets import (
    JetContext,
    JetIdeal,
    derivation_check,
    fiber_ideal,
    gm_action_check,
    jacobian_ideal,
    jet_coefficients,
    jet_var,
    jetify,
    section_check,
    truncation_check,
    weight_homogeneity_check,
)
from .orders import GREVLEX, LEX, Block, Grevlex, Lex, Weighted
from .parser import parse_poly
from .ring import Poly, PolyRing

__all__ = [
    "BudgetExceededError",
    "Budget",
    "Block",
    "DEFAULT_PRIME",
    "DimReport",
    "GREVLEX",
    "Grevlex",
    "Ideal",
    "InputError",
    "JetcasError",
    "JetContext",
    "JetIdeal",
    "LEX",
    "Lex",
    "ParseError",
    "Poly",
    "PolyRing",
    "PreconditionError",
    "PrimeField",
    "QQ",
    "RationalField",
    "Weighted",
    "Verdict",
    "claim_ids",
    "derivation_check",
    "eliminate",
    "example_suite",
    "fiber_ideal",
    "flatness_fiber_gap",
    "gm_action_check",
    "groebner_basis",
    "ideal_equal",
    "intersect",
    "irreducibility_failure_check",
    "jacobian_ideal",
    "jet_coefficients",
    "jet_var",
    "jetify",
    "krull_dim",
    "main_component",
    "nilpotent_witness",
    "normal_form",
    "parse_poly",
    "quadric_x1_report",
    "quotient",
    "radical_member",
    "saturate",
    "section_check",
    "smooth_fiber_check",
    "structural_suite",
    "truncation_check",
    "weight_homogeneity_check",
]

__version__ = "0.1.0"
