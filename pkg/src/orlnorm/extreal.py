"""Nonnegative extended reals: values in [0, +inf] with absorbing infinity.

Modular integrals take values here.  Addition and ordering follow IEEE
float semantics for +inf; the one deliberate deviation from bare float
arithmetic is the measure-theoretic scaling convention 0 * inf == 0.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError


@dataclass(frozen=True)
class ExtendedReal:
    value: float

    def __post_init__(self) -> None:
        v = float(self.value)
        if math.isnan(v) or v < 0.0:
            raise DomainError(f"extended real must lie in [0, +inf], got {self.value!r}")
        object.__setattr__(self, "value", v)

    @property
    def is_finite(self) -> bool:
        return math.isfinite(self.value)

    @property
    def is_infinite(self) -> bool:
        return math.isinf(self.value)

    def __add__(self, other: "ExtendedReal | float | int") -> "ExtendedReal":
        return ExtendedReal(self.value + _as_float(other))

    __radd__ = __add__

    def scaled(self, c: float) -> "ExtendedReal":
        """Multiply by a nonnegative scalar; 0 * inf == 0 by convention."""
        c = float(c)
        if math.isnan(c) or c < 0.0:
            raise DomainError(f"scale factor must be nonnegative, got {c!r}")
        if c == 0.0:
            return ExtendedReal(0.0)
        return ExtendedReal(c * self.value)

    def __mul__(self, c: float) -> "ExtendedReal":
        return self.scaled(c)

    __rmul__ = __mul__

    def __float__(self) -> float:
        return self.value

    def __lt__(self, other: "ExtendedReal | float | int") -> bool:
        return self.value < _as_float(other)

    def __le__(self, other: "ExtendedReal | float | int") -> bool:
        return self.value <= _as_float(other)

    def __gt__(self, other: "ExtendedReal | float | int") -> bool:
        return self.value > _as_float(other)

    def __ge__(self, other: "ExtendedReal | float | int") -> bool:
        return self.value >= _as_float(other)

    def __repr__(self) -> str:
        return "ExtendedReal(inf)" if self.is_infinite else f"ExtendedReal({self.value!r})"


def _as_float(x: "ExtendedReal | float | int") -> float:
    return x.value if isinstance(x, ExtendedReal) else float(x)


EXT_ZERO = ExtendedReal(0.0)
EXT_INF = ExtendedReal(math.inf)
