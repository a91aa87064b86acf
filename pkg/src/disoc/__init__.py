"""Double-interval societies: construction, verification, search, bounds.

Voters approve two disjoint closed intervals on the rational line; the
central quantities are the approval number (the most voters any single
platform satisfies) and its ratio to the society size.  This package
builds low-ratio pairwise-intersecting societies from double-n strings,
verifies claimed societies exactly, finds minimum string diameters
exhaustively, and evaluates the size/approval trade-off bounds.
"""

from .bounds import (
    CONJECTURED_MIN_RATIO,
    DOUBLE_STRING_RATIO_LOWER,
    DOUBLE_STRING_RATIO_UPPER,
    BoundsRow,
    approval_lower_bound,
    bounds_rows,
    delta_theoretical_lower,
    emit_bounds_table,
    max_society_size,
    ratio_lower_bound_estimate,
)
from .endpoints import (
    EndpointParseError,
    EndpointRepresentation,
    endpoint_rep_from_society,
    parse_endpoint_rep,
    society_from_endpoint_rep,
)
from .exhaustive import (
    DeltaResult,
    EnumerationLimitError,
    count_canonical,
    delta_exhaustive,
    exists_with_diameter_at_most,
    iter_canonical,
)
from .search import (
    CertificateReport,
    InfeasibleTargetError,
    SearchConfig,
    SearchOutcome,
    SearchState,
    format_certificate,
    hill_climb,
    neighbors,
    parse_certificate,
    state_from_rep,
    verify_certificate,
)
from .society import (
    ApprovalResult,
    CoincidentEndpointsError,
    Interval,
    PairwiseReport,
    Society,
    SocietyError,
    Voter,
    approval_number,
    format_society,
    is_pairwise_intersecting,
    parse_society,
    society_from_pairs,
)
from .stats import EndpointStats, SocietyStats, endpoint_stats
from .strings import (
    DiameterReport,
    DoubleString,
    DoubleStringError,
    construct_quarter,
    construct_thirteen,
    endpoint_rep_from_string,
    society_from_string,
)

__version__ = "0.1.0"

__all__ = [
    "ApprovalResult",
    "BoundsRow",
    "CONJECTURED_MIN_RATIO",
    "CertificateReport",
    "CoincidentEndpointsError",
    "DOUBLE_STRING_RATIO_LOWER",
    "DOUBLE_STRING_RATIO_UPPER",
    "DeltaResult",
    "DiameterReport",
    "DoubleString",
    "DoubleStringError",
    "EndpointParseError",
    "EndpointRepresentation",
    "EndpointStats",
    "EnumerationLimitError",
    "InfeasibleTargetError",
    "Interval",
    "PairwiseReport",
    "SearchConfig",
    "SearchOutcome",
    "SearchState",
    "Society",
    "SocietyError",
    "SocietyStats",
    "Voter",
    "approval_lower_bound",
    "approval_number",
    "bounds_rows",
    "construct_quarter",
    "construct_thirteen",
    "count_canonical",
    "delta_exhaustive",
    "delta_theoretical_lower",
    "emit_bounds_table",
    "endpoint_rep_from_society",
    "endpoint_rep_from_string",
    "endpoint_stats",
    "exists_with_diameter_at_most",
    "format_certificate",
    "format_society",
    "hill_climb",
    "is_pairwise_intersecting",
    "iter_canonical",
    "max_society_size",
    "neighbors",
    "parse_certificate",
    "parse_endpoint_rep",
    "parse_society",
    "ratio_lower_bound_estimate",
    "society_from_endpoint_rep",
    "society_from_pairs",
    "society_from_string",
    "state_from_rep",
    "verify_certificate",
]
