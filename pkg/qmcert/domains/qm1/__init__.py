from .entities import DELTA, E2, E4, E6, QmPoly1
from .service import (
    qm1_derivative,
    qm1_serre,
    qm1_serre_iter,
    qm1_to_qexp,
    qm1_vanishing_order,
    weight_depth,
)
