"""Translation-invariant star products on R^m and their alpha-cohomology."""
from .catalog import (coboundary_cocycle, cohomology_dimension, harmonic, moyal, preset,
                      random_cocycle, random_modefield, wick_voros, zero_cocycle)
from .cochain import (Cochain, check_d_squared_zero, check_membership, coboundary,
                      eval_cochain, zero_cochain)
from .cocycle import (BlackBoxCocycle, StarCocycle, ThetaClass, check_cocycle_condition,
                      check_complex_property, check_harmonic, check_sigma_structure,
                      check_unitality, classify, coordinate_commutator, eval_alpha,
                      extract_sigma, harmonic_projection, is_cohomologous, project_pointwise)
from .equivalence import (check_quantum_equivalence, check_trace_property, gauge_transform,
                          nonequivalence_witness)
from .errors import (AlphaStarError, InputError, RangeError, UnsupportedArityError,
                     ValidationError)
from .modefield import (ModeField, derivative, integral, star, star_chain, star_chain_right,
                        translate)
from .polynomial import Polynomial
from .report import Check, Report

__version__ = "0.1.0"

__all__ = [
    "coboundary_cocycle",
    "cohomology_dimension",
    "harmonic",
    "moyal",
    "preset",
    "random_cocycle",
    "random_modefield",
    "wick_voros",
    "zero_cocycle",
    "Cochain",
    "check_d_squared_zero",
    "check_membership",
    "coboundary",
    "eval_cochain",
    "zero_cochain",
    "BlackBoxCocycle",
    "StarCocycle",
    "ThetaClass",
    "check_cocycle_condition",
    "check_complex_property",
    "check_harmonic",
    "check_sigma_structure",
    "check_unitality",
    "classify",
    "coordinate_commutator",
    "eval_alpha",
    "extract_sigma",
    "harmonic_projection",
    "is_cohomologous",
    "project_pointwise",
    "check_quantum_equivalence",
    "check_trace_property",
    "gauge_transform",
    "nonequivalence_witness",
    "AlphaStarError",
    "InputError",
    "RangeError",
    "UnsupportedArityError",
    "ValidationError",
    "ModeField",
    "derivative",
    "integral",
    "star",
    "star_chain",
    "star_chain_right",
    "translate",
    "Polynomial",
    "Check",
    "Report",
]
