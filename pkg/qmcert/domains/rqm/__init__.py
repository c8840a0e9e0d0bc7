from .entities import RqmElem
from .service import (
    RqmValue,
    as_rqm,
    axis_eval,
    rqm_components,
    rqm_derivative,
    rqm_eval,
    rqm_flip,
    rqm_from_poly,
    rqm_leading_limit,
    rqm_leading_term,
    rqm_serre,
    rqm_slash_S,
    rqm_weight,
)
