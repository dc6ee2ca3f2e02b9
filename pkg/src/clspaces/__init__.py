"""Numerical toolkit for Calderon-Lozanovskii spaces.

Young-function calculus with generalized conjugates, Luxemburg norms over
discretized measure spaces, multiplier and pointwise-product norm
estimation with certified one-sided bounds, and probe-based verification
of the multiplier and factorization theorems at desk scale.
"""

from .extreal import INF, ExtReal, ZeroTimesInfinityError
from .measure import (MeasureModel, StepFunction, counting, half_line,
                      indicator, rearrange, unit_interval)
from .spaces import (CL, Convexification, L1capLinf, Linf, Lorentz, Lp,
                     NormValue, SpaceSpec, fundamental, luxemburg_norm,
                     modular, norm)
from .young import (ConjugateTable, ExpMinusOne, PiecewiseLinear,
                    PowerFunction, TruncatedPower, YoungFunction,
                    classical_conjugate, conjugate, conjugate_truncated,
                    evaluate, right_inverse, young_inequality_residual)

__all__ = [
    "INF", "ExtReal", "ZeroTimesInfinityError",
    "MeasureModel", "StepFunction", "counting", "half_line", "indicator",
    "rearrange", "unit_interval",
    "CL", "Convexification", "L1capLinf", "Linf", "Lorentz", "Lp",
    "NormValue", "SpaceSpec", "fundamental", "luxemburg_norm", "modular",
    "norm",
    "ConjugateTable", "ExpMinusOne", "PiecewiseLinear", "PowerFunction",
    "TruncatedPower", "YoungFunction", "classical_conjugate", "conjugate",
    "conjugate_truncated", "evaluate", "right_inverse",
    "young_inequality_residual",
]

__version__ = "0.1.0"
