"""Rearrangement invariant norms and the Calderon-Lozanovskii construction.

Base norms on a discretized model (cell measure mu, values v_i):

* ``Lp``         ( sum |v_i|**p mu )**(1/p)
* ``Linf``       max |v_i|
* ``L1capLinf``  max( sum |v_i| mu, max |v_i| ), the intersection with Linf
* ``Lorentz``    sum v*_i w_i mu  for a non-increasing weight w
* ``Convexification``  || |f|^p ||_base^(1/p)  (p in (0,1): concavification)

On top of any base space X and Young function F sits the
Calderon-Lozanovskii space X_F with modular M_F(f) = || F(|f|) ||_X and
Luxemburg norm  ||f||_{X_F} = inf { lam > 0 : M_F(f / lam) <= 1 },
computed here by bisection on lam (the modular is nonincreasing in lam).
A function infinite on any cell of positive measure lies outside every
ideal space over the model, so such modulars evaluate to +inf.

The fundamental function of X_F obeys psi_{X_F}(t) = 1 / F^{-1}(1 / psi_X(t));
``fundamental`` evaluates CL specs through both this formula and the
Luxemburg norm of the indicator and raises FundamentalMismatch if the two
disagree beyond tolerance, so a defect in either path cannot pass silently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .extreal import ExtReal
from .measure import MeasureModel, StepFunction, indicator
from .young import PiecewiseLinear, PowerFunction, TruncatedPower, YoungFunction

_INF = math.inf

RTOL_NORM = 1e-10
FUNDAMENTAL_RTOL = 1e-6
_MAX_BISECT = 220


class NumericalError(RuntimeError):
    """A norm computation failed to bracket or converge."""


class FundamentalMismatch(AssertionError):
    """Formula and Luxemburg evaluation of a fundamental function disagree."""


@dataclass(frozen=True)
class NormValue:
    value: ExtReal
    method: str                      # "closed_form" or "bisection"
    iterations: Optional[int] = None

    def __float__(self) -> float:
        return float(self.value)


# ---------------------------------------------------------------------------
# Space specifications
# ---------------------------------------------------------------------------


class SpaceSpec:
    kind: str = "abstract"

    def norm_values(self, vals: np.ndarray, model: MeasureModel) -> float:
        """Norm of raw cell values; +inf values mean 'outside the space'."""
        raise NotImplementedError

    def is_closed_form(self) -> bool:
        return True

    def describe(self) -> str:
        return self.kind


def _guard_inf(vals: np.ndarray) -> bool:
    return bool(np.any(np.isinf(vals)))


class Lp(SpaceSpec):
    def __init__(self, p: float):
        if not (p >= 1.0 and math.isfinite(p)):
            raise ValueError(f"Lp requires p >= 1, got {p}")
        self.p = float(p)
        self.kind = "Lp"

    def norm_values(self, vals, model):
        if _guard_inf(vals):
            return _INF
        with np.errstate(over="ignore"):
            s = float(np.sum(vals**self.p)) * model.cell_measure
        return s ** (1.0 / self.p)

    def describe(self):
        return f"L{self.p:g}"


class Linf(SpaceSpec):
    kind = "Linf"

    def norm_values(self, vals, model):
        return float(np.max(vals)) if len(vals) else 0.0

    def describe(self):
        return "Linf"


class L1capLinf(SpaceSpec):
    kind = "L1capLinf"

    def norm_values(self, vals, model):
        if _guard_inf(vals):
            return _INF
        return max(float(np.sum(vals)) * model.cell_measure, float(np.max(vals)))

    def describe(self):
        return "L1capLinf"


class Lorentz(SpaceSpec):
    """Lambda(w): integral of the rearrangement against a decreasing weight."""

    kind = "lorentz"

    def __init__(self, weight):
        w = np.asarray(weight, dtype=float)
        if w.ndim != 1 or len(w) == 0:
            raise ValueError("Lorentz weight must be a nonempty vector")
        if np.any(w < 0) or not np.all(np.isfinite(w)):
            raise ValueError("Lorentz weight must be nonnegative and finite")
        if np.any(np.diff(w) > 1e-15):
            raise ValueError("Lorentz weight must be non-increasing")
        if not np.any(w > 0):
            raise ValueError("Lorentz weight must not be identically zero")
        self.weight = w
        self.weight.setflags(write=False)

    def norm_values(self, vals, model):
        if len(self.weight) != model.cells:
            raise ValueError(
                f"Lorentz weight has {len(self.weight)} entries, model has "
                f"{model.cells} cells"
            )
        if _guard_inf(vals):
            return _INF
        dec = -np.sort(-vals)
        return float(np.sum(dec * self.weight)) * model.cell_measure

    def describe(self):
        return f"Lambda(w[{len(self.weight)}])"


class Convexification(SpaceSpec):
    """X^(p): f with |f|^p in X, normed by the p-th root of the base norm."""

    kind = "convexification"

    def __init__(self, base: SpaceSpec, p: float):
        if not (p > 0 and math.isfinite(p) and p != 1.0):
            raise ValueError("convexification exponent must be positive and != 1")
        self.base = base
        self.p = float(p)
        self.label = "convexification" if p > 1.0 else "concavification"

    def norm_values(self, vals, model):
        with np.errstate(over="ignore"):
            powered = vals**self.p
        return self.base.norm_values(powered, model) ** (1.0 / self.p)

    def is_closed_form(self):
        return self.base.is_closed_form()

    def describe(self):
        return f"{self.base.describe()}^({self.p:g})"


class CL(SpaceSpec):
    """Calderon-Lozanovskii space X_F over a base space and Young function."""

    kind = "cl"

    def __init__(self, base: SpaceSpec, young: YoungFunction):
        self.base = base
        self.young = young

    def norm_values(self, vals, model):
        return _luxemburg(self.base, self.young, vals, model)[0]

    def is_closed_form(self):
        return False

    def describe(self):
        return f"({self.base.describe()})_[{self.young.kind}]"


# ---------------------------------------------------------------------------
# Modular and Luxemburg norm
# ---------------------------------------------------------------------------


def _modular_values(X: SpaceSpec, F: YoungFunction, vals: np.ndarray,
                    model: MeasureModel) -> float:
    fv = F.values(vals)
    if np.any(np.isinf(fv)):
        # F(|f|) infinite on a cell of positive measure: not in X.
        return _INF
    return X.norm_values(fv, model)


def modular(X: SpaceSpec, F: YoungFunction, f: StepFunction) -> ExtReal:
    """M_F(f) = || F(|f|) ||_X, +inf when F(|f|) leaves the space."""
    return ExtReal(_modular_values(X, F, f.values, f.model))


def _luxemburg_closed_form(X, F, vals, model, m) -> Optional[float]:
    """Exact Luxemburg value for power-type Young functions.

    For F(t) = t**p / p the modular is homogeneous of degree -p in the
    scaling, so M_F(f/lam) <= 1 is solved exactly by
    lam = ( ||f**p||_X / p )**(1/p); a truncation at b adds the hard
    constraint lam >= max|f| / b, and a function that is zero up to its
    jump gives the scaled sup norm.
    """
    if isinstance(F, (PowerFunction, TruncatedPower)):
        with np.errstate(over="ignore"):
            lam = (X.norm_values(vals**F.p, model) / F.p) ** (1.0 / F.p)
        if isinstance(F, TruncatedPower):
            lam = max(lam, m / F.b)
        return float(lam)
    if isinstance(F, PiecewiseLinear) and np.all(F.ys == 0.0):
        return float(m / F.b)
    return None


def _luxemburg(X: SpaceSpec, F: YoungFunction, vals: np.ndarray,
               model: MeasureModel, rtol: float = RTOL_NORM) -> tuple[float, int]:
    if not np.all(np.isfinite(vals)):
        return _INF, 0
    m = float(np.max(vals)) if len(vals) else 0.0
    if m == 0.0:
        return 0.0, 0
    if F.b == 0.0:
        return _INF, 0  # F is +inf off zero: only the zero function has finite norm

    closed = _luxemburg_closed_form(X, F, vals, model, m)
    if closed is not None:
        return closed, 0

    def mod(lam: float) -> float:
        return _modular_values(X, F, vals / lam, model)

    iters = 0
    # Lower bracket: below max|f| / b_F the modular is identically +inf.
    lo = m / F.b if math.isfinite(F.b) else 0.0
    if lo > 0.0 and mod(lo) <= 1.0:
        return lo, 0
    # Upper bracket: start from the scale suggested by the fundamental
    # function of the base space and double until the modular drops below 1.
    ones = np.ones(model.cells)
    n1 = X.norm_values(ones, model)
    s1 = F.inverse(1.0 / n1) if n1 > 0 else 1.0
    hi = m * max(1.0, 1.0 / s1) if s1 > 0 else m
    while mod(hi) > 1.0:
        hi *= 2.0
        iters += 1
        if iters > _MAX_BISECT:
            raise NumericalError("Luxemburg norm: no feasible upper bracket found")
    if lo == 0.0:
        lo = hi
        while mod(lo) <= 1.0:
            lo *= 0.5
            iters += 1
            if lo < 1e-280:
                # Modular stays <= 1 at all scales only for the zero function.
                raise NumericalError("Luxemburg norm: lower bracket underflow")
    for _ in range(_MAX_BISECT):
        if hi - lo <= rtol * hi:
            break
        mid = 0.5 * (lo + hi)
        iters += 1
        if mod(mid) <= 1.0:
            hi = mid
        else:
            lo = mid
    return hi, iters


def luxemburg_norm(X: SpaceSpec, F: YoungFunction, f: StepFunction,
                   rtol: float = RTOL_NORM) -> NormValue:
    """inf { lam > 0 : M_F(f / lam) <= 1 } by bisection on lam.

    The returned value lies on the feasible side: the modular at f divided
    by it is <= 1.
    """
    v, iters = _luxemburg(X, F, f.values, f.model, rtol=rtol)
    method = "bisection" if iters else "closed_form"
    return NormValue(ExtReal(v), method, iters if iters else None)


def norm(X: SpaceSpec, f: StepFunction) -> NormValue:
    """Norm of a step function in the given space."""
    v = X.norm_values(f.values, f.model)
    method = "closed_form" if X.is_closed_form() else "bisection"
    return NormValue(ExtReal(v), method)


# ---------------------------------------------------------------------------
# Fundamental function
# ---------------------------------------------------------------------------


def fundamental(X: SpaceSpec, model: MeasureModel, t: float) -> float:
    """psi_X(t): the norm of an indicator of measure t (t snapped to cells).

    For CL specs the value is computed both through the inverse formula
    and through the Luxemburg norm of the indicator; disagreement beyond
    FUNDAMENTAL_RTOL raises FundamentalMismatch.
    """
    snapped = model.snap(t)
    if snapped == 0.0:
        return 0.0
    ind = indicator(model, snapped)
    if isinstance(X, CL):
        psi_base = X.base.norm_values(ind.values, model)
        formula = _psi_cl_formula(X.young, psi_base)
        lux = X.norm_values(ind.values, model)
        if not _close_ext(formula, lux, FUNDAMENTAL_RTOL):
            raise FundamentalMismatch(
                f"fundamental-function cross-check failed at t={snapped!r}: "
                f"formula {formula!r} vs Luxemburg {lux!r}"
            )
        return formula
    return X.norm_values(ind.values, model)


def _psi_cl_formula(F: YoungFunction, psi_base: float) -> float:
    if psi_base == 0.0:
        return 0.0
    inv = F.inverse(1.0 / psi_base)
    if inv == 0.0:
        return _INF
    if math.isinf(inv):
        return 0.0
    return 1.0 / inv


def _close_ext(a: float, b: float, rtol: float) -> bool:
    if math.isinf(a) or math.isinf(b):
        return math.isinf(a) and math.isinf(b)
    return abs(a - b) <= rtol * max(abs(a), abs(b), 1e-300)
