"""Extended nonnegative reals: values in [0, +inf].

Young-function calculus constantly produces the value +inf: functions jump
to infinity, conjugates degenerate, modulars blow up.  Instead of letting
IEEE semantics quietly turn 0*inf into nan somewhere inside a norm
computation, scalar results cross the public API as ExtReal values whose
arithmetic implements the extended-real conventions

    x + inf = inf,        c * inf = inf   (c > 0),

and *rejects* 0 * inf, which no formula in this toolkit ever needs.
Vectorised internals keep using plain float arrays with np.inf; ExtReal is
the contract at the scalar boundary only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


class ZeroTimesInfinityError(ArithmeticError):
    """Raised whenever an expression would evaluate 0 * inf."""


def _coerce(x) -> float:
    if isinstance(x, ExtReal):
        return x.value
    if isinstance(x, (int, float)):
        return float(x)
    return NotImplemented  # type: ignore[return-value]


@dataclass(frozen=True, slots=True)
class ExtReal:
    """A single value from [0, +inf], with explicit extended arithmetic."""

    value: float

    def __post_init__(self):
        v = float(self.value)
        if math.isnan(v):
            raise ValueError("ExtReal cannot hold nan")
        if v < 0.0:
            raise ValueError(f"ExtReal must be nonnegative, got {v}")
        object.__setattr__(self, "value", v)

    @property
    def is_inf(self) -> bool:
        return math.isinf(self.value)

    @property
    def is_finite(self) -> bool:
        return math.isfinite(self.value)

    def __float__(self) -> float:
        return self.value

    def __repr__(self) -> str:
        return "ExtReal(inf)" if self.is_inf else f"ExtReal({self.value!r})"

    def __str__(self) -> str:
        return "inf" if self.is_inf else repr(self.value)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if o < 0 and math.isinf(self.value):
            raise ZeroTimesInfinityError("inf + negative is outside [0, inf]")
        return ExtReal(self.value + o)

    __radd__ = __add__

    def __mul__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if (o == 0.0 and math.isinf(self.value)) or (
            self.value == 0.0 and math.isinf(o)
        ):
            raise ZeroTimesInfinityError("0 * inf is rejected, never evaluated")
        return ExtReal(self.value * o)

    __rmul__ = __mul__

    # -- comparisons --------------------------------------------------------

    def __eq__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.value == o

    def __lt__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.value < o

    def __le__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.value <= o

    def __gt__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.value > o

    def __ge__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.value >= o

    def __hash__(self):
        return hash(self.value)


INF = ExtReal(math.inf)
