from .entities import IneqPair, d8_pair, d24_pair, f8, f24, g8, g24, ineq_pair
from .harder import harder_inequality_suite
from .schemas import ReportSummary, VerificationReport
from .service import (
    INEQUALITIES,
    check_identity,
    common_ring,
    complete_positivity_scan,
    derivative_positivity_check,
    inequality_scan,
    level_increase_check,
    limit_check,
    log_grid,
    monotonicity_certificate,
    serre_bracket,
    special_values_check,
    vanishing_order_compare,
)
from .suites import SUITE_NAMES, run_suite
