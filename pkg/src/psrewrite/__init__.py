"""Exact rewriting on truncated multivariate formal power series.

The engine divides series by a finite rule set with respect to the
opposite of an admissible degree-compatible monomial order, tracking
big-O precision through every operation: normal forms, cofactor
certificates, ideal membership and congruence verdicts, standard-basis
falsification and confluence probes.  A companion module decides
normal-form and confluence properties of finite abstract rewriting
systems exhaustively.
"""

from .ars import (
    BACKWARD,
    FORWARD,
    Conversion,
    FiniteARS,
    SystemProperties,
    check_properties,
    eliminate_valleys,
    normal_forms,
    reachable,
    validate_conversion,
)
from .errors import (
    DimensionMismatchError,
    InvalidConversionError,
    InvalidTraceError,
    NotReducibleError,
    ParseError,
    PreconditionFailedError,
    PrecisionUnattainableError,
    RewritingError,
    ZeroOrUnknownLeadingError,
)
from .monomials import (
    DEGLEX,
    EQUAL,
    GREATER,
    LESS,
    Monomial,
    MonomialOrder,
    OrderKind,
    monomials_below,
    monomials_of_degree,
)
from .rewrite import (
    AttractivityReport,
    ConfluenceProbeReport,
    Member,
    MembershipVerdict,
    NotMember,
    ReductionStep,
    ReductionTrace,
    RewriteRule,
    RuleSet,
    StandardBasisCounterexample,
    StandardRepresentation,
    UnknownAtPrecision,
    attractivity_check,
    cofactors,
    confluence_probe,
    congruence_test,
    falsify_standard_basis,
    ideal_membership,
    multiple_to_zero_chain,
    normalize,
    normalize_random,
    random_polynomial,
    reduce_step,
    reducible_monomials,
    standard_representation,
    translate,
)
from .series import Coefficient, TruncatedSeries, Valuation, delta
from .textio import (
    format_conversion,
    format_monomial,
    format_series,
    format_trace,
    parse_ars_system,
    parse_conversion,
    parse_rules,
    parse_series,
)

__version__ = "0.1.0"
