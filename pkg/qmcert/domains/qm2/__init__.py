from .entities import DELTA, E2, E4, E6, H2, H3, H4, QmPoly2
from .service import (
    from_level1,
    qm2_derivative,
    qm2_serre,
    qm2_serre_iter,
    qm2_slash_S,
    qm2_slash_T,
    qm2_to_qexp,
    qm2_vanishing_order,
)
