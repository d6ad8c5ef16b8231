"""
Exact dual simplex for covering programs.

Solves min c.y subject to M y >= 1, y >= 0 in exact arithmetic. With
non-negative costs the all-slack basis is dual feasible, so the dual simplex
starts without a phase one.

The tableau is kept integer-preserving: every entry is stored as an integer
numerator over one shared denominator (the current basis determinant), and
each pivot divides exactly by the previous pivot element. The most infeasible
row leaves; after a run of degenerate pivots the rule switches to Bland's
(smallest basic index leaves, smallest column index breaks ratio ties) until
the dual objective moves again.

Programs with at least ``WARM_START_CELLS`` entries are first handed to HiGHS
through ``scipy.optimize.linprog``. Its answer is only a hint, used twice:

1. The reported primal and dual vectors are snapped to nearby fractions; if
   the snapped pair passes ``check_vectors`` it is an exact optimality proof
   and is returned as is.
2. Otherwise the reported basis is pivoted into the exact tableau; if that is
   not dual feasible the solver restarts from the slack basis.

Whatever path is taken, the returned value and vectors are exact and have
passed ``check_vectors``.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np
from scipy.optimize import linprog

from ..logging import BoundsLogger
from ..metrics import BoundsFunctionName, BoundsMetrics, get_elapsed_ms, start_timer
from ..types.errors import InvalidParameterError, LPInfeasibleError, LPSolverError
from ..types.lp import CoveringProgram, LPSolution, Verdict
from .certificates import check_vectors

WARM_START_CELLS = 2500
DEGENERATE_LIMIT = 50
HINT_TOLERANCE = 1e-9
HINT_MAX_DENOMINATOR = 10**6


@dataclass(frozen=True)
class BasisHint:
    """Floating-point optimum reported by HiGHS."""

    primal: tuple[float, ...]
    dual: tuple[float, ...]
    support: tuple[int, ...]
    tight_rows: frozenset[int]
    zero_cost: tuple[int, ...]
    priced_rows: frozenset[int]

    def snapped(self) -> tuple[list[Fraction], list[Fraction]]:
        """Primal and dual vectors rounded to fractions with small denominators."""

        def snap(x: float) -> Fraction:
            if abs(x) <= HINT_TOLERANCE:
                return Fraction(0)
            return Fraction(x).limit_denominator(HINT_MAX_DENOMINATOR)

        return [snap(x) for x in self.primal], [snap(z) for z in self.dual]


def basis_hint(program: CoveringProgram) -> Optional[BasisHint]:
    """Ask HiGHS for an optimal vertex; None when it reports anything but success."""
    matrix = np.asarray(program.matrix, dtype=float)
    cost = np.asarray(program.objective, dtype=float)
    result = linprog(
        cost,
        A_ub=-matrix,
        b_ub=-np.ones(matrix.shape[0]),
        bounds=(0, None),
        method="highs-ds",
    )
    if result.status != 0:
        return None

    x = np.asarray(result.x)
    duals = -np.asarray(result.ineqlin.marginals)
    reduced = cost - matrix.T @ duals
    support = sorted(np.flatnonzero(x > HINT_TOLERANCE).tolist(), key=lambda j: -x[j])
    zero_cost = [
        j
        for j in np.flatnonzero(np.abs(reduced) <= HINT_TOLERANCE).tolist()
        if x[j] <= HINT_TOLERANCE
    ]
    residual = np.asarray(result.ineqlin.residual)
    return BasisHint(
        primal=tuple(x.tolist()),
        dual=tuple(duals.tolist()),
        support=tuple(support),
        tight_rows=frozenset(np.flatnonzero(residual <= HINT_TOLERANCE).tolist()),
        zero_cost=tuple(zero_cost),
        priced_rows=frozenset(np.flatnonzero(duals > HINT_TOLERANCE).tolist()),
    )


class DualSimplex:
    """Single-use tableau solver for one covering program."""

    def __init__(
        self,
        program: CoveringProgram,
        logger: Optional[BoundsLogger] = None,
        metrics: Optional[BoundsMetrics] = None,
        function_name: BoundsFunctionName = BoundsFunctionName.REDUCED_LP,
        warm_start: bool = True,
        degenerate_limit: int = DEGENERATE_LIMIT,
    ):
        if any(c < 0 for c in program.objective):
            raise InvalidParameterError("covering costs must be non-negative")
        if any(int(x) != x for row in program.matrix for x in row) or any(
            int(c) != c for c in program.objective
        ):
            raise InvalidParameterError("covering programs carry integer data")
        self.program = program
        self.logger = logger
        self.metrics = metrics
        self.function_name = function_name
        self.warm_start = warm_start
        self.degenerate_limit = degenerate_limit
        self.pivots = 0
        self.route = "cold"

        self.n_rows, self.n_cols = program.shape
        self.width = self.n_cols + self.n_rows
        self._reset()

    def _reset(self) -> None:
        # Row i reads -M_i y + s_i = -1 with s_i basic; the last entry is the
        # right-hand side. Actual entries are numerator / denominator.
        n_cols, n_rows = self.n_cols, self.n_rows
        self.rows: list[list[int]] = []
        for i, row in enumerate(self.program.matrix):
            entries = [-int(x) for x in row] + [0] * n_rows + [-1]
            entries[n_cols + i] = 1
            self.rows.append(entries)
        self.cost: list[int] = [int(c) for c in self.program.objective] + [0] * n_rows
        self.denominator = 1
        self.basis = [n_cols + i for i in range(n_rows)]

    def _leaving_row(self, bland: bool) -> Optional[int]:
        infeasible = [i for i, row in enumerate(self.rows) if row[-1] < 0]
        if not infeasible:
            return None
        if bland:
            return min(infeasible, key=lambda i: self.basis[i])
        return min(infeasible, key=lambda i: (self.rows[i][-1], self.basis[i]))

    def _entering_column(self, p: int) -> Optional[int]:
        row = self.rows[p]
        cost = self.cost
        best = None
        for j in range(self.width):
            a = row[j]
            # cost[j] / -a < cost[best] / -row[best], cross-multiplied
            if a < 0 and (best is None or cost[j] * -row[best] < cost[best] * -a):
                best = j
        return best

    def _pivot(self, p: int, q: int) -> None:
        prow = self.rows[p]
        a = prow[q]
        d = self.denominator
        for i, row in enumerate(self.rows):
            if i == p:
                continue
            f = row[q]
            if f == 0:
                if a != d:
                    self.rows[i] = [a * x // d for x in row]
            else:
                self.rows[i] = [(a * x - f * y) // d for x, y in zip(row, prow)]
        f = self.cost[q]
        if f == 0:
            if a != d:
                self.cost = [a * x // d for x in self.cost]
        else:
            self.cost = [(a * x - f * y) // d for x, y in zip(self.cost, prow)]

        if a < 0:
            self.rows = [[-x for x in row] for row in self.rows]
            self.cost = [-x for x in self.cost]
            a = -a
        self.denominator = a
        self.basis[p] = q
        self.pivots += 1

    def _slack_rows(self, j: int, preferred: frozenset[int]) -> list[int]:
        rows = [
            i
            for i in range(self.n_rows)
            if self.basis[i] >= self.n_cols and self.rows[i][j] != 0
        ]
        return sorted(rows, key=lambda i: (i not in preferred, i))

    def _crash(self, hint: BasisHint) -> bool:
        for j in hint.support:
            rows = self._slack_rows(j, hint.tight_rows)
            if rows:
                self._pivot(rows[0], j)
        for j in hint.zero_cost:
            rows = [
                i
                for i in self._slack_rows(j, hint.priced_rows)
                if i in hint.priced_rows
            ]
            if rows:
                self._pivot(rows[0], j)
        return all(c >= 0 for c in self.cost)

    def _hinted(self) -> Optional[tuple[list[Fraction], list[Fraction]]]:
        if not self.warm_start or self.n_rows * self.n_cols < WARM_START_CELLS:
            return None
        hint = basis_hint(self.program)
        if hint is None:
            return None

        primal, dual = hint.snapped()
        if check_vectors(self.program, primal, dual) is Verdict.VALID:
            self.route = "snapped"
            return primal, dual

        if self._crash(hint):
            self.route = "crash"
        else:
            self._reset()
        if self.logger is not None:
            self.logger.debug(
                f"Basis hint {'accepted' if self.route == 'crash' else 'rejected'}",
                category="lp",
                auxiliary={"hinted": len(hint.support), "pivots": self.pivots},
            )
        return None

    def _iterate(self) -> tuple[list[Fraction], list[Fraction]]:
        # Non-degenerate pivots raise the dual objective, so no basis repeats
        # across them; Bland's rule covers the degenerate runs.
        degenerate_run = 0
        while True:
            p = self._leaving_row(bland=degenerate_run >= self.degenerate_limit)
            if p is None:
                break
            q = self._entering_column(p)
            if q is None:
                raise LPInfeasibleError(
                    f"covering constraint {p} cannot be satisfied", row=p
                )
            degenerate_run = degenerate_run + 1 if self.cost[q] == 0 else 0
            self._pivot(p, q)

        d = self.denominator
        primal = [Fraction(0)] * self.n_cols
        for i, j in enumerate(self.basis):
            if j < self.n_cols:
                primal[j] = Fraction(self.rows[i][-1], d)
        dual = [Fraction(self.cost[self.n_cols + i], d) for i in range(self.n_rows)]
        return primal, dual

    def solve(self) -> LPSolution:
        start = start_timer()
        hinted = self._hinted()
        primal, dual = hinted if hinted is not None else self._iterate()
        value = sum(
            (c * y for c, y in zip(self.program.objective, primal)), Fraction(0)
        )

        verdict = check_vectors(self.program, primal, dual)
        if verdict is not Verdict.VALID:
            raise LPSolverError(
                f"solver output failed re-verification ({verdict.value})"
            )

        elapsed = get_elapsed_ms(start)
        if self.metrics is not None:
            self.metrics.update(self.function_name, elapsed, pivots=self.pivots)
        if self.logger is not None:
            self.logger.debug(
                "Solved covering program",
                category="lp",
                auxiliary={
                    "shape": f"{self.n_rows}x{self.n_cols}",
                    "pivots": self.pivots,
                    "route": self.route,
                    "value": str(value),
                    "elapsed_ms": elapsed,
                },
            )
        return LPSolution(value, tuple(primal), tuple(dual))


def solve_min(
    program: CoveringProgram,
    logger: Optional[BoundsLogger] = None,
    metrics: Optional[BoundsMetrics] = None,
    function_name: BoundsFunctionName = BoundsFunctionName.REDUCED_LP,
    warm_start: bool = True,
) -> LPSolution:
    """
    Exact optimum of min c.y s.t. M y >= 1, y >= 0.

    Returns:
        LPSolution(value, primal, dual); the pair has already passed
        ``check_vectors``.

    Raises:
        LPInfeasibleError: some covering row has no positive entry.
        LPSolverError: the final tableau did not certify itself.
    """
    if program.shape[0] == 0:
        return LPSolution(Fraction(0), tuple(Fraction(0) for _ in program.objective), ())
    return DualSimplex(program, logger, metrics, function_name, warm_start).solve()
