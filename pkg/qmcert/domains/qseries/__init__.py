from .codec import format_qseries, format_qseries_human, parse_qseries
from .entities import QSeries, SeriesValue, VanishingOrder
from .service import (
    delta_qexp,
    eisenstein_qexp,
    r4_count,
    r4_enumerate,
    series_add,
    series_D,
    series_eval,
    series_inverse,
    series_mul,
    series_neg,
    series_pow,
    series_reindex,
    series_scale,
    series_sub,
    series_vanishing_order,
    theta4_qexp,
)
