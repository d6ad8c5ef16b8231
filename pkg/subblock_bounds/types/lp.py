"""Covering programs, certificates and verdicts."""

from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import NamedTuple

from .errors import InvalidParameterError
from .profiles import OrbitIndexSet, WeightProfile


@dataclass(frozen=True)
class CoveringProgram:
    """
    min c.y subject to M y >= 1, y >= 0, with integer data.

    Attributes:
        matrix: rows x cols grid of non-negative integers
        objective: one cost per column
    """

    matrix: tuple[tuple[int, ...], ...]
    objective: tuple[int, ...]

    def __post_init__(self):
        matrix = tuple(tuple(row) for row in self.matrix)
        objective = tuple(self.objective)
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "objective", objective)
        if any(len(row) != len(objective) for row in matrix):
            raise InvalidParameterError(
                f"matrix rows must have {len(objective)} entries to match the objective"
            )

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.matrix), len(self.objective)


@dataclass(frozen=True)
class ReducedLP(CoveringProgram):
    """Orbit-reduced sphere-packing program: rows index centers, columns index orbits."""

    rows: OrbitIndexSet = None  # type: ignore[assignment]
    cols: OrbitIndexSet = None  # type: ignore[assignment]

    def __post_init__(self):
        super().__post_init__()
        if self.rows is None or self.cols is None:
            raise InvalidParameterError("a reduced program needs row and column indices")
        n_rows, n_cols = self.shape
        if len(self.rows) != n_rows or len(self.cols) != n_cols:
            raise InvalidParameterError(
                f"index sets ({len(self.rows)}x{len(self.cols)}) do not match the "
                f"matrix ({n_rows}x{n_cols})"
            )
        if any(c <= 0 for c in self.objective):
            raise InvalidParameterError("orbit sizes must be positive")
        for i, v in enumerate(self.rows):
            if v in self.cols and self.matrix[i][self.cols.index(v)] < 1:
                raise InvalidParameterError(f"row {v} does not cover its own orbit")

    def entry(self, v: WeightProfile, u: WeightProfile) -> int:
        return self.matrix[self.rows.index(v)][self.cols.index(u)]


class LPSolution(NamedTuple):
    """Exact optimum of a covering program with optimal primal and dual vectors."""

    value: Fraction
    primal: tuple[Fraction, ...]
    dual: tuple[Fraction, ...]


@dataclass(frozen=True)
class Certificate:
    """
    Sparse primal/dual pair keyed by weight profile.

    Unlisted profiles carry zero.
    """

    primal: Mapping[WeightProfile, Fraction] = field(default_factory=dict)
    dual: Mapping[WeightProfile, Fraction] = field(default_factory=dict)

    def primal_vector(self, cols: Sequence[WeightProfile]) -> list[Fraction]:
        return [Fraction(self.primal.get(u, 0)) for u in cols]

    def dual_vector(self, rows: Sequence[WeightProfile]) -> list[Fraction]:
        return [Fraction(self.dual.get(v, 0)) for v in rows]


class Verdict(str, Enum):
    """Outcome of an optimality-certificate check."""

    VALID = "valid"
    PRIMAL_INFEASIBLE = "primal-infeasible"
    DUAL_INFEASIBLE = "dual-infeasible"
    GAP = "gap"
