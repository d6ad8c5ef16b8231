"""Problem instances for the finite-length and asymptotic bounds."""

from dataclasses import dataclass, field
from typing import Optional

from .errors import DomainError, InvalidParameterError


@dataclass(frozen=True)
class _SubblockInstance:
    m: int
    L: int
    w: int
    d: int

    def __post_init__(self):
        if self.m < 1:
            raise InvalidParameterError(f"m must be >= 1, got {self.m}")
        if self.L < 1:
            raise InvalidParameterError(f"L must be >= 1, got {self.L}")
        if not 0 <= self.w <= self.L:
            raise InvalidParameterError(f"w must lie in [0, L={self.L}], got {self.w}")
        if not 1 <= self.d <= self.m * self.L:
            raise InvalidParameterError(
                f"d must lie in [1, mL={self.m * self.L}], got {self.d}"
            )

    @property
    def t(self) -> int:
        """Packing radius floor((d - 1) / 2)."""
        return (self.d - 1) // 2

    @property
    def length(self) -> int:
        return self.m * self.L


@dataclass(frozen=True)
class CsccInstance(_SubblockInstance):
    """Constant subblock-composition codes: every subblock has weight exactly w."""


@dataclass(frozen=True)
class SeccInstance(_SubblockInstance):
    """Subblock energy-constrained codes: every subblock has weight at least w."""


@dataclass(frozen=True)
class RateParams:
    """Fixed (L, w, delta) for the asymptotic-rate formulas."""

    L: int
    w: int
    delta: float

    def __post_init__(self):
        if self.L < 1:
            raise InvalidParameterError(f"L must be >= 1, got {self.L}")
        if not 0 <= self.w <= self.L:
            raise InvalidParameterError(f"w must lie in [0, L={self.L}], got {self.w}")
        if not 0 < self.delta < 1:
            raise DomainError(f"delta must lie in (0, 1), got {self.delta}")

    @property
    def omega(self) -> float:
        return self.w / self.L


@dataclass
class RateBoundRow:
    """One row of a rate table; a value of None marks a cell outside its domain."""

    w: int
    delta: float
    values: dict[str, Optional[float]] = field(default_factory=dict)
