from .bivariate import BivariateSeries
from .power import (
    PowerSeries,
    Reductions,
    ResidueSeries,
    compose,
    exact_divide,
    invert_unit,
    reductions,
)

__all__ = [
    "BivariateSeries",
    "PowerSeries",
    "Reductions",
    "ResidueSeries",
    "compose",
    "exact_divide",
    "invert_unit",
    "reductions",
]
