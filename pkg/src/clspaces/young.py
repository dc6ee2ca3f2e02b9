"""Young functions and their generalized conjugates.

A Young function is a convex, nondecreasing F : [0, inf) -> [0, inf] with
F(0) = 0, not identically zero and not identically infinite off zero.  Its
jump point is b_F = sup { t >= 0 : F(t) < inf }; F "jumps to infinity"
when b_F is finite and is called "finite" otherwise.  The right-continuous
inverse is F^{-1}(s) = inf { t >= 0 : F(t) > s } with inf(empty) = inf and
F^{-1}(inf) defined as the limit of F^{-1}(s) for s -> inf.

Implemented kinds:

* ``power``            F(t) = t**p / p,  p >= 1
* ``truncated_power``  the power function cut off at b (+inf beyond b)
* ``exp_minus_one``    F(t) = exp(t) - 1 (a finite non-power test function)
* ``piecewise_linear`` convex interpolant through given knots, optionally
  jumping to +inf beyond a cutoff
* ``conjugate_table``  numeric output of the conjugation solver

The central operation is the generalized conjugate of G with respect to F,

    (G (-) F)(t)   = sup_{0 <= s < b_F}  { G(s t) - F(s) },
    (G (-)_a F)(t) = sup_{0 <= s <= a}   { G(s t) - F(s) },

computed in closed form for power/power pairs and otherwise by a log-spaced
grid supremum with golden-section refinement around the best grid cell.
Raw supremum values are stored as computed; convexity of the resulting
table is asserted (a violation raises ConvexityDefect) rather than
repaired, so solver bugs surface instead of being smoothed away.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .extreal import INF, ExtReal

_INF = math.inf


class ConvexityDefect(AssertionError):
    """A constructed conjugate table violated the chord inequality."""


class SolverError(RuntimeError):
    """A numerical routine failed to converge or bracket."""


@dataclass(frozen=True)
class SolverParams:
    """Tunables shared by the supremum solver and the inverse bisection."""

    grid_points: int = 512
    golden_iters: int = 72
    rel_floor: float = 1e-9      # lower end of the log s-grid, relative to the span
    open_margin: float = 1e-12   # pull-back from an open right endpoint
    expand_cap: float = 1e18     # bracket expansion limit for unbounded domains
    tol_sup: float = 1e-6        # relative accuracy budget of supremum values
    tol_cvx: float = 1e-6        # relative chord-inequality tolerance
    rtol_inv: float = 1e-10      # relative tolerance of the inverse bisection


DEFAULT_PARAMS = SolverParams()

_MAX_BISECT = 200


# ---------------------------------------------------------------------------
# Kinds
# ---------------------------------------------------------------------------


class YoungFunction:
    """Base class: scalar/vector evaluation, inverse, growth classification."""

    kind: str = "abstract"
    b: float = _INF  # jump point b_F; math.inf when the function is finite

    # -- evaluation ---------------------------------------------------------

    def value(self, t: float) -> float:
        """F(t) as a plain float, np.inf allowed.  t must be >= 0."""
        raise NotImplementedError

    def values(self, ts: np.ndarray) -> np.ndarray:
        """Vectorised evaluation; default falls back on the scalar path."""
        return np.array([self.value(float(t)) for t in np.asarray(ts, float).ravel()])

    @property
    def is_finite(self) -> bool:
        return math.isinf(self.b)

    @property
    def jumps(self) -> bool:
        return not self.is_finite

    # -- right-continuous inverse --------------------------------------------

    def inverse(self, s: float) -> float:
        """inf { t >= 0 : F(t) > s } for finite s >= 0; bisection fallback."""
        return _inverse_bisect(self, s, DEFAULT_PARAMS)

    def inverse_at_infinity(self) -> float:
        # lim_{s->inf} F^{-1}(s): the jump point if F jumps, inf otherwise.
        return self.b

    # -- growth class for divergence analysis --------------------------------

    def growth(self) -> tuple:
        """('jump', b) | ('poly', degree, coeff) | ('exp', rate).

        Describes the behaviour for large arguments; used to decide whether
        sup_s { G(st) - F(s) } diverges when both functions are finite.
        """
        raise NotImplementedError

    def __repr__(self) -> str:  # pragma: no cover - cosmetic
        return f"<{self.kind} b={self.b}>"


class PowerFunction(YoungFunction):
    """F(t) = t**p / p for p >= 1."""

    kind = "power"

    def __init__(self, p: float):
        if not (p >= 1.0 and math.isfinite(p)):
            raise ValueError(f"power exponent must satisfy p >= 1, got {p}")
        self.p = float(p)
        self.b = _INF

    def value(self, t):
        if t < 0:
            raise ValueError("Young functions are defined on [0, inf)")
        try:
            return t**self.p / self.p
        except OverflowError:
            return _INF

    def values(self, ts):
        ts = np.asarray(ts, float)
        with np.errstate(over="ignore"):
            return ts**self.p / self.p

    def inverse(self, s):
        # t**p / p > s  <=>  t > (p s)**(1/p)
        return (self.p * s) ** (1.0 / self.p)

    def growth(self):
        return ("poly", self.p, 1.0 / self.p)

    def __repr__(self):
        return f"<power p={self.p}>"


class TruncatedPower(YoungFunction):
    """F(t) = t**p / p on [0, b], +inf beyond; F(b) itself stays finite."""

    kind = "truncated_power"

    def __init__(self, p: float, b: float):
        if not (p >= 1.0 and math.isfinite(p)):
            raise ValueError(f"power exponent must satisfy p >= 1, got {p}")
        if not (b >= 0.0 and math.isfinite(b)):
            raise ValueError(f"truncation point must be finite and >= 0, got {b}")
        self.p = float(p)
        self.b = float(b)

    def value(self, t):
        if t < 0:
            raise ValueError("Young functions are defined on [0, inf)")
        if t > self.b:
            return _INF
        return t**self.p / self.p

    def values(self, ts):
        ts = np.asarray(ts, float)
        with np.errstate(over="ignore"):
            out = ts**self.p / self.p
        return np.where(ts > self.b, _INF, out)

    def inverse(self, s):
        x = (self.p * s) ** (1.0 / self.p)
        return x if x <= self.b else self.b

    def inverse_at_infinity(self):
        return self.b

    def growth(self):
        return ("jump", self.b)

    def __repr__(self):
        return f"<truncated_power p={self.p} b={self.b}>"


class ExpMinusOne(YoungFunction):
    """F(t) = exp(t) - 1; a deliberately non-power finite fixture."""

    kind = "exp_minus_one"

    def __init__(self):
        self.b = _INF

    def value(self, t):
        if t < 0:
            raise ValueError("Young functions are defined on [0, inf)")
        if t > 709.0:  # exp overflows float64 just above this
            return _INF
        return math.expm1(t)

    def values(self, ts):
        ts = np.asarray(ts, float)
        with np.errstate(over="ignore"):
            return np.expm1(ts)

    def inverse(self, s):
        return math.log1p(s)

    def growth(self):
        return ("exp", 1.0)


class PiecewiseLinear(YoungFunction):
    """Convex piecewise-linear Young function through (t_i, y_i) knots.

    Knots must start at (0, 0), have strictly increasing abscissae and
    nondecreasing slopes.  Beyond the last knot the final slope is
    extrapolated; if ``b`` is given (b >= last abscissa) the function is
    +inf strictly beyond b.
    """

    kind = "piecewise_linear"

    def __init__(self, knots, b: Optional[float] = None):
        pts = [(float(t), float(y)) for t, y in knots]
        if len(pts) < 2:
            raise ValueError("piecewise_linear needs at least two knots")
        xs = np.array([p[0] for p in pts])
        ys = np.array([p[1] for p in pts])
        if xs[0] != 0.0 or ys[0] != 0.0:
            raise ValueError("first knot must be (0, 0)")
        if not np.all(np.diff(xs) > 0):
            raise ValueError("knot abscissae must be strictly increasing")
        if not np.all(np.isfinite(ys)) or np.any(ys < 0) or np.any(np.diff(ys) < 0):
            raise ValueError("knot values must be finite, nonnegative, nondecreasing")
        slopes = np.diff(ys) / np.diff(xs)
        if np.any(np.diff(slopes) < -1e-12):
            raise ValueError("slopes must be nondecreasing (convexity)")
        if b is None:
            bb = _INF
        else:
            bb = float(b)
            if bb < xs[-1]:
                raise ValueError("cutoff b must not precede the last knot")
        if ys[-1] == 0.0 and not math.isfinite(bb):
            raise ValueError("identically zero without a jump is not a Young function")
        self.xs, self.ys, self.slopes = xs, ys, slopes
        self.b = bb

    def value(self, t):
        if t < 0:
            raise ValueError("Young functions are defined on [0, inf)")
        if t > self.b:
            return _INF
        if t <= self.xs[-1]:
            return float(np.interp(t, self.xs, self.ys))
        return float(self.ys[-1] + self.slopes[-1] * (t - self.xs[-1]))

    def values(self, ts):
        ts = np.asarray(ts, float)
        out = np.interp(ts, self.xs, self.ys)
        tail = ts > self.xs[-1]
        if np.any(tail):
            out = np.where(
                tail, self.ys[-1] + self.slopes[-1] * (ts - self.xs[-1]), out
            )
        return np.where(ts > self.b, _INF, out)

    def growth(self):
        if math.isfinite(self.b):
            return ("jump", self.b)
        return ("poly", 1.0, float(self.slopes[-1]))


def zero_jump(b: float) -> PiecewiseLinear:
    """The Young function that is 0 on [0, b] and +inf beyond.

    Appears as the conjugate of a function with itself; the induced
    Calderon-Lozanovskii norm is the sup norm scaled by 1/b.
    """
    return PiecewiseLinear([(0.0, 0.0), (b, 0.0)], b=b)


def inf_off_zero() -> TruncatedPower:
    """The degenerate conjugate that is +inf everywhere off zero (b = 0)."""
    return TruncatedPower(1.0, 0.0)


# ---------------------------------------------------------------------------
# Supremum solver
# ---------------------------------------------------------------------------


def _objective_array(G, F, t, svals):
    with np.errstate(over="ignore", invalid="ignore"):
        gv = G.values(svals * t)
        fv = F.values(svals)
        out = gv - fv
    # F infinite => s outside the admissible range, contributes nothing.
    return np.where(np.isinf(fv), -_INF, out)


def _objective_scalar(G, F, t, s):
    fv = F.value(s)
    if math.isinf(fv):
        return -_INF
    gv = G.value(s * t)
    if math.isinf(gv):
        return _INF
    return gv - fv


def _golden_max(f, lo, hi, iters):
    """Golden-section maximum of a scalar function on [lo, hi]."""
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(iters):
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = f(d)
        if b - a <= 1e-300:
            break
    return (c, fc) if fc >= fd else (d, fd)


def _sup_on_interval(G, F, t, s_hi, closed_right, params):
    """sup of G(st) - F(s) over [0, s_hi] or [0, s_hi); returns (val, smax, interior)."""
    right = s_hi if closed_right else s_hi * (1.0 - params.open_margin)
    lo = s_hi * params.rel_floor
    svals = np.concatenate(([0.0], np.geomspace(lo, right, params.grid_points)))
    obj = _objective_array(G, F, t, svals)
    if np.any(np.isposinf(obj)):
        i = int(np.argmax(np.isposinf(obj)))
        return _INF, float(svals[i]), True
    i = int(np.argmax(obj))
    best_v, best_s = float(obj[i]), float(svals[i])
    cell_lo = float(svals[max(i - 1, 0)])
    cell_hi = float(svals[min(i + 1, len(svals) - 1)])
    if cell_hi > cell_lo:
        s_ref, v_ref = _golden_max(
            lambda s: _objective_scalar(G, F, t, s), cell_lo, cell_hi, params.golden_iters
        )
        if v_ref > best_v:
            best_v, best_s = float(v_ref), float(s_ref)
    interior = i <= len(svals) - 8
    # The value 0 is always attained at s = 0, so the sup is nonnegative.
    if best_v < 0.0:
        best_v, best_s = 0.0, 0.0
    return best_v, best_s, interior


def _growth_jump_point(G, F) -> float:
    """Jump point of G (-) F when both functions are finite everywhere.

    sup_s { G(st) - F(s) } diverges exactly when G(st) outgrows F(s); the
    threshold in t follows from the growth classes.
    """
    gG, gF = G.growth(), F.growth()
    if gG[0] == "exp" and gF[0] == "exp":
        return gF[1] / gG[1]
    if gG[0] == "exp":
        return 0.0
    if gF[0] == "exp":
        return _INF
    _, dG, cG = gG
    _, dF, cF = gF
    if dG > dF:
        return 0.0
    if dG < dF:
        return _INF
    if cG == 0.0:
        return _INF  # G grows slower than any positive-coefficient tail
    return (cF / cG) ** (1.0 / dG)


def _conjugate_jump_point(G, F, a: Optional[float]) -> float:
    """Jump point of the conjugate, decided before any numeric work."""
    if a is not None:
        return G.b / a if math.isfinite(G.b) else _INF
    if math.isfinite(F.b):
        return G.b / F.b  # covers G.b = inf -> inf
    if math.isfinite(G.b):
        return 0.0
    return _growth_jump_point(G, F)


def _conjugate_value(G, F, t, a, params) -> tuple[float, float]:
    """Raw supremum value and maximizer at a single t in the finite region."""
    if t == 0.0:
        return 0.0, 0.0
    if a is not None:
        return _sup_on_interval(G, F, t, a, True, params)[:2]
    if math.isfinite(F.b):
        return _sup_on_interval(G, F, t, F.b, False, params)[:2]
    s_hi = max(1.0, t)
    while True:
        val, smax, interior = _sup_on_interval(G, F, t, s_hi, True, params)
        if math.isinf(val) or interior or s_hi > params.expand_cap:
            return val, smax
        s_hi *= 8.0


def _default_table_grid(b: float) -> np.ndarray:
    # Geometric grid with exact powers of two where possible; 0 prepended.
    if b == 0.0:
        return np.array([0.0])
    if math.isfinite(b):
        pts = b * 2.0 ** (-np.arange(120, -1, -1.0) / 8.0)
        return np.concatenate(([0.0], pts))
    pts = 2.0 ** (np.arange(-15 * 8, 15 * 8 + 1) / 8.0)
    return np.concatenate(([0.0], pts))


class ConjugateTable(YoungFunction):
    """Numeric generalized conjugate G (-) F, or G (-)_a F when a is given.

    Evaluation at any point reruns the supremum solver (memoised), so
    values are raw solver output rather than interpolants.  A table of
    values on a reference grid is materialised at construction and checked
    for convexity via the chord inequality.
    """

    kind = "conjugate_table"

    def __init__(self, outer: YoungFunction, inner: YoungFunction, a=None,
                 params: SolverParams = DEFAULT_PARAMS, grid=None):
        if a is not None:
            a = float(a)
            if not (a > 0.0):
                raise ValueError("truncation level a must be positive")
            if math.isinf(inner.value(a)):
                raise ValueError(
                    "truncation level a must satisfy F(a) < inf (a <= b_F)"
                )
        elif inner.b == 0.0:
            raise ValueError("inner function is +inf off zero: empty supremum range")
        self.outer, self.inner, self.a = outer, inner, a
        self.params = params
        self.b = _conjugate_jump_point(outer, inner, a)
        self._memo: dict[float, tuple[float, float]] = {}
        if grid is None:
            grid = _default_table_grid(self.b)
        else:
            grid = np.asarray(grid, float)
        if math.isfinite(self.b) and self.b > 0.0:
            grid = grid[grid <= self.b]
            if grid[-1] != self.b:
                grid = np.concatenate((grid, [self.b]))
        self.grid = grid
        self.table_values = np.array([self.value(float(t)) for t in grid])
        self._assert_convex()

    def _solve(self, t: float) -> tuple[float, float]:
        hit = self._memo.get(t)
        if hit is None:
            hit = _conjugate_value(self.outer, self.inner, t, self.a, self.params)
            self._memo[t] = hit
        return hit

    def value(self, t):
        if t < 0:
            raise ValueError("Young functions are defined on [0, inf)")
        if t == 0.0:
            return 0.0
        if t > self.b:
            return _INF
        return self._solve(float(t))[0]

    def maximizer(self, t: float) -> float:
        """The s attaining (up to solver tolerance) the supremum at t."""
        if t == 0.0 or t > self.b:
            return 0.0
        return self._solve(float(t))[1]

    def values(self, ts):
        return np.array([self.value(float(t)) for t in np.asarray(ts, float).ravel()])

    def inverse(self, s):
        return _inverse_bisect(self, s, self.params)

    def growth(self):
        if math.isfinite(self.b):
            return ("jump", self.b)
        g = self.grid
        v = self.table_values
        fin = np.isfinite(v)
        if fin.sum() >= 2:
            slope = (v[fin][-1] - v[fin][-2]) / (g[fin][-1] - g[fin][-2])
        else:  # pragma: no cover - degenerate table
            slope = 0.0
        return ("poly", 1.0, float(slope))

    def _assert_convex(self):
        g, v, tol = self.grid, self.table_values, self.params.tol_cvx
        for k in range(1, len(g) - 1):
            v0, v1, v2 = v[k - 1], v[k], v[k + 1]
            if not (math.isfinite(v0) and math.isfinite(v1) and math.isfinite(v2)):
                continue
            lam = (g[k] - g[k - 1]) / (g[k + 1] - g[k - 1])
            chord = (1.0 - lam) * v0 + lam * v2
            if v1 > chord + tol * max(1.0, abs(chord)):
                raise ConvexityDefect(
                    f"chord inequality violated at t={g[k]!r}: "
                    f"value {v1!r} > chord {chord!r}"
                )

    def __repr__(self):
        tag = f" a={self.a}" if self.a is not None else ""
        return f"<conjugate_table{tag} b={self.b}>"


# ---------------------------------------------------------------------------
# Right-continuous inverse (generic bisection)
# ---------------------------------------------------------------------------


def _inverse_bisect(F: YoungFunction, s: float, params: SolverParams) -> float:
    if s < 0:
        raise ValueError("inverse argument must be >= 0")
    if math.isinf(s):
        return F.inverse_at_infinity()
    lo = 0.0
    if math.isfinite(F.b):
        hi = F.b * (1.0 + 1e-6) + 1e-12
    else:
        hi = 1.0
        while F.value(hi) <= s:
            hi *= 2.0
            if hi > 1e300:
                return _INF  # F never exceeds s: inf over the empty set
    if not F.value(hi) > s:  # pragma: no cover - defensive
        raise SolverError("failed to bracket the right-continuous inverse")
    for _ in range(_MAX_BISECT):
        if hi - lo <= params.rtol_inv * hi:
            break
        mid = 0.5 * (lo + hi)
        if F.value(mid) > s:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


# ---------------------------------------------------------------------------
# Public operations
# ---------------------------------------------------------------------------


def evaluate(F: YoungFunction, t: float) -> ExtReal:
    """F(t) as an ExtReal; exact for closed-form kinds."""
    if t < 0:
        raise ValueError("Young functions are defined on [0, inf)")
    return ExtReal(F.value(float(t)))


def right_inverse(F: YoungFunction, s) -> ExtReal:
    """F^{-1}(s) = inf { t : F(t) > s }, with F^{-1}(inf) the b_F-side limit."""
    sf = float(s)
    if sf < 0:
        raise ValueError("inverse argument must be >= 0")
    if math.isinf(sf):
        return ExtReal(F.inverse_at_infinity())
    return ExtReal(F.inverse(sf))


def conjugate(G: YoungFunction, F: YoungFunction, *, force_generic: bool = False,
              params: SolverParams = DEFAULT_PARAMS, grid=None) -> YoungFunction:
    """Generalized conjugate G (-) F with sup over 0 <= s < b_F.

    Power/power pairs take a closed-form fast path: for exponents p < q the
    result is the power function with 1/r = 1/p - 1/q; p = q yields the
    zero-until-jump function with cutoff 1; p > q degenerates to +inf off
    zero.  An outer jump combined with a finite inner function also
    degenerates to +inf off zero (jump point 0).
    """
    if not force_generic:
        if isinstance(G, PowerFunction) and isinstance(F, PowerFunction):
            p, q = G.p, F.p
            if p < q:
                return PowerFunction(1.0 / (1.0 / p - 1.0 / q))
            if p == q:
                return zero_jump(1.0)
            return inf_off_zero()
        if G.jumps and F.is_finite:
            return inf_off_zero()
    return ConjugateTable(G, F, a=None, params=params, grid=grid)


def conjugate_truncated(G: YoungFunction, F: YoungFunction, a: float, *,
                        params: SolverParams = DEFAULT_PARAMS, grid=None) -> YoungFunction:
    """Truncated conjugate G (-)_a F with sup over the closed interval [0, a].

    Requires a > 0 and F(a) < inf; the closed endpoint is included in the
    search exactly.
    """
    return ConjugateTable(G, F, a=a, params=params, grid=grid)


def classical_conjugate(F: YoungFunction, *, force_generic: bool = False,
                        params: SolverParams = DEFAULT_PARAMS) -> YoungFunction:
    """The classical conjugate sup_s { s t - F(s) }: conjugation against id."""
    return conjugate(PowerFunction(1.0), F, force_generic=force_generic, params=params)


def young_inequality_residual(G: YoungFunction, F: YoungFunction, a: float,
                              s: float, t: float,
                              params: SolverParams = DEFAULT_PARAMS) -> float:
    """(G (-)_a F)(t) + F(s) - G(st); nonnegative up to solver tolerance.

    Returns +inf when the right-hand side is infinite (the inequality is
    then trivially satisfied in the extended reals).
    """
    if not (0.0 <= s <= a):
        raise ValueError(f"need 0 <= s <= a, got s={s}, a={a}")
    if math.isinf(F.value(a)):
        raise ValueError("truncation level a must satisfy F(a) < inf")
    conj_t, _ = (0.0, 0.0) if t == 0.0 else _conjugate_value(G, F, float(t), float(a), params)
    fs = F.value(s)
    if math.isinf(conj_t) or math.isinf(fs):
        return _INF
    gst = G.value(s * t)
    if math.isinf(gst):  # pragma: no cover - impossible when rhs is finite
        return -_INF
    return conj_t + fs - gst
