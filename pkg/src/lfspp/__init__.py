"""Exact solvers and a theorem laboratory for linear fractional set packing."""
from .core import (
    Instance, Pack, Rational, LfsppError, ValidationError, NonBinaryMatrix,
    NonPositiveBeta, DimensionMismatch, MagnitudeOverflow, ParseError,
    LengthMismatch, NonPositiveDenominator, InfeasiblePack, InstanceTooLarge,
    validate_instance, is_feasible, objective, linear_objective,
    parse_instance, format_instance, read_instance,
)
from .packs import (
    Kind, PackClass, redundant_columns, classify, complete_to_prime,
    enumerate_packs, max_cardinality_pack,
)
from .solvers import (
    SolveReport, solve, solve_oracle, solve_lspp, solve_bnb, solve_dinkelbach,
    is_admissible, min_denominator,
)

__version__ = "0.1.0"
