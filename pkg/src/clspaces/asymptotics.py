"""Dominance and equivalence checks between positive functions of t.

The factorization theory compares products of right-continuous inverses,
e.g. F^{-1} (G (-) F)^{-1} against G^{-1}, in one of three regimes: small
arguments (0, T], large arguments [T, T_max], or all arguments.  A <= B up
to a constant is tested by searching C over the ladder 1, 2, 4, ..., 2**16
on a log-spaced probe grid; equivalence runs both one-sided checks and
reports the larger constant.

A passing verdict means "consistent with the relation up to constant C on
the tested grid" and is not a proof; a failing verdict carries a concrete
witness probe that can be re-evaluated.  When even the top of the ladder
fails, the relation is reported as falsified with a note that it is
undetermined for constants beyond 65536.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .extreal import ZeroTimesInfinityError
from .young import YoungFunction

CONSTANT_LADDER = tuple(2.0**k for k in range(17))

_REGIMES = ("small", "large", "all")


@dataclass(frozen=True)
class ProbeGrid:
    """Log-spaced probe points per regime; the thresholds are search
    parameters, defaulting to the normalization scale 1."""

    t_small: float = 1.0
    t_large: float = 1.0
    t_max: float = 1e6
    points: int = 256
    floor_factor: float = 1e-8

    def probes(self, regime: str) -> np.ndarray:
        if regime not in _REGIMES:
            raise ValueError(f"unknown regime {regime!r}")
        small = np.geomspace(self.t_small * self.floor_factor, self.t_small,
                             self.points)
        large = np.geomspace(self.t_large, self.t_max, self.points)
        if regime == "small":
            return small
        if regime == "large":
            return large
        return np.unique(np.concatenate((small, large)))


DEFAULT_GRID = ProbeGrid()


@dataclass
class EquivalenceVerdict:
    relation: str                 # "dominates" | "equivalent" | "falsified"
    constant: float
    witness: Optional[dict] = None
    probes: int = 0
    indeterminate: int = 0
    note: str = ""

    @property
    def passed(self) -> bool:
        return self.relation in ("dominates", "equivalent")

    def to_json_dict(self) -> dict:
        return {
            "relation": self.relation,
            "constant": self.constant,
            "witness": self.witness,
            "probes": self.probes,
        }


# -- composition helpers ------------------------------------------------------


def young_fn(F: YoungFunction) -> Callable[[float], float]:
    return lambda t: F.value(float(t))


def inverse_fn(F: YoungFunction) -> Callable[[float], float]:
    return lambda s: F.inverse(float(s))


def product_fn(a: Callable[[float], float],
               b: Callable[[float], float]) -> Callable[[float], float]:
    """Pointwise product that refuses to evaluate 0 * inf."""

    def prod(t: float) -> float:
        va, vb = a(t), b(t)
        if (va == 0.0 and math.isinf(vb)) or (vb == 0.0 and math.isinf(va)):
            raise ZeroTimesInfinityError(f"0 * inf in composed function at t={t}")
        return va * vb

    return prod


def scaled_fn(c: float, a: Callable[[float], float]) -> Callable[[float], float]:
    return lambda t: c * a(t)


# -- checks -------------------------------------------------------------------


def _evaluate_probes(fn, ts):
    vals = np.empty(len(ts))
    indeterminate = []
    for i, t in enumerate(ts):
        try:
            vals[i] = fn(float(t))
        except ZeroTimesInfinityError:
            vals[i] = math.nan
            indeterminate.append(float(t))
    return vals, indeterminate


def check_dominance(lhs, rhs, regime: str,
                    grid: ProbeGrid = DEFAULT_GRID) -> EquivalenceVerdict:
    """Search the constant ladder for lhs <= C * rhs on the regime's probes.

    Probes where either side hits 0 * inf are reported as indeterminate
    and excluded from the comparison, never silently treated as passing
    zeros.
    """
    ts = grid.probes(regime)
    lv, ind_l = _evaluate_probes(lhs, ts)
    rv, ind_r = _evaluate_probes(rhs, ts)
    determinate = ~(np.isnan(lv) | np.isnan(rv))
    n_ind = int((~determinate).sum())
    tl, ll, rr = ts[determinate], lv[determinate], rv[determinate]

    slack = 1e-12
    for c in CONSTANT_LADDER:
        with np.errstate(invalid="ignore"):
            ok = ll <= c * rr * (1.0 + slack)
        ok |= np.isinf(ll) & np.isinf(rr)
        if bool(np.all(ok)):
            return EquivalenceVerdict(
                relation="dominates", constant=c, witness=None,
                probes=len(ts), indeterminate=n_ind,
            )
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = np.where(rr > 0, ll / rr, np.where(ll > 0, math.inf, 0.0))
    w = int(np.argmax(ratio))
    witness = {"t": float(tl[w]), "lhs": float(ll[w]), "rhs": float(rr[w])}
    top = CONSTANT_LADDER[-1]
    return EquivalenceVerdict(
        relation="falsified", constant=top, witness=witness,
        probes=len(ts), indeterminate=n_ind,
        note=f"undetermined at C <= {int(top)}: worst probe exceeds the ladder",
    )


def check_equivalence(lhs, rhs, regime: str,
                      grid: ProbeGrid = DEFAULT_GRID) -> EquivalenceVerdict:
    """Both one-sided checks; the constant is the max of the two."""
    fwd = check_dominance(lhs, rhs, regime, grid)
    bwd = check_dominance(rhs, lhs, regime, grid)
    n_ind = max(fwd.indeterminate, bwd.indeterminate)
    if fwd.passed and bwd.passed:
        return EquivalenceVerdict(
            relation="equivalent", constant=max(fwd.constant, bwd.constant),
            witness=None, probes=fwd.probes, indeterminate=n_ind,
        )
    failing = fwd if not fwd.passed else bwd
    side = "lhs <= C*rhs" if not fwd.passed else "rhs <= C*lhs"
    return EquivalenceVerdict(
        relation="falsified", constant=failing.constant,
        witness=failing.witness, probes=fwd.probes, indeterminate=n_ind,
        note=f"{side} failed: {failing.note}",
    )
