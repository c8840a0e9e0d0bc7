from .checks import (
    check_auxidentity,
    check_depth1_recurrence_forms,
    check_depth2_chain,
    check_depth2_exceptional,
    check_kkd1_recurrences,
    check_lowpos,
    check_ode_depth1,
    check_ode_depth1_expanded,
    check_ode_depth2,
    check_x121,
    extremal_table,
)
from .entities import ExtremalForm
from .service import X, extremal, extremal_depth1, extremal_depth2, registry
