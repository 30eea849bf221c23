"""Quine-McCluskey minimization of single-output Boolean functions."""
from .cover import Cover, MinimizeReport, PIChart, build_chart, extract_essentials, minimize, solve_reduced
from .cube import (
    Implicant,
    ProblemSpec,
    combine,
    covers,
    expand_minterms,
    literal_count,
    make_implicant,
    ones_count,
)
from .errors import DomainError, GuardRefusal, ParseError, QMError
from .estimator import QuineMcCluskeyClassifier
from .formats import (
    VariableNaming,
    emit_expression,
    emit_json,
    emit_pla,
    parse_minterm_spec,
    parse_pla,
)
from .primes import ReductionColumn, generate_primes, group_by_ones, reduction_pass

__version__ = "0.1.0"
