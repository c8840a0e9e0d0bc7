from fractions import Fraction
from typing import Any

import mpmath
from pydantic import BaseModel, ConfigDict


def jsonable(value: Any) -> Any:
    """Convert exact and high-precision values into JSON-safe payloads."""
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, float):
        return value
    if isinstance(value, Fraction):
        return str(value) if value.denominator != 1 else value.numerator
    if isinstance(value, mpmath.mpf):
        return mpmath.nstr(value, 15)
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        return [jsonable(v) for v in value]
    return str(value)


class ReportModel(BaseModel):
    model_config = ConfigDict(populate_by_name=True, use_enum_values=False)
