"""
Sphere-packing bounds for constant subblock-composition codes (CSCCs).

Every codeword has exactly w ones in each of its m subblocks of length L.
The orbit-reduced program has a single constraint row, indexed by the
uniform profile [w, ..., w], so its optimum is the smallest ratio
|O_u| / M*_{w,u}.
"""

from fractions import Fraction
from typing import Optional

from ..combinatorics import binom
from ..config import BoundsConfig, default_config
from ..logging import BoundsLogger
from ..lp import min_ratio, solve_min
from ..metrics import BoundsFunctionName, BoundsMetrics, get_elapsed_ms, start_timer
from ..orbits import constrained_ball_size, enumerate_cscc_profiles, orbit_size
from ..schemas import BoundMethod, BoundPayload, BoundResult, CodeFamily, ExactValue
from ..types.errors import DomainError
from ..types.instances import CsccInstance
from ..types.lp import ReducedLP
from ..types.profiles import OrbitIndexSet, ProfileKind, WeightProfile


def cscc_reduced_lp(inst: CsccInstance) -> ReducedLP:
    """Single-row program over P(m, L; w, t)."""
    cols = enumerate_cscc_profiles(inst.m, inst.L, inst.w, inst.t)
    center = WeightProfile.uniform(inst.m, inst.L, inst.w)
    rows = OrbitIndexSet((center,), ProfileKind.CSCC_BALL, w=inst.w, t=inst.t)
    row = tuple(constrained_ball_size(center, u, inst.t) for u in cols)
    objective = tuple(orbit_size(u) for u in cols)
    return ReducedLP(matrix=(row,), objective=objective, rows=rows, cols=cols)


def cscc_gsp_bound(inst: CsccInstance) -> Fraction:
    """Generalized sphere-packing bound on C(m, L, d, w)."""
    return min_ratio(cscc_reduced_lp(inst))


def _require_inner_weight(L: int, w: int, margin: int) -> None:
    if not margin <= w <= L - margin:
        raise DomainError(
            f"closed form needs {margin} <= w <= L-{margin}, got w={w}, L={L}"
        )


def cscc_closed_form_t1(m: int, L: int, w: int) -> Fraction:
    """Closed form of the reduced program for t = 1 (d in {3, 4})."""
    _require_inner_weight(L, w, 1)
    rest = binom(L, w) ** (m - 1)
    if 2 * w <= L:
        return Fraction(binom(L, w - 1) * rest, w)
    return Fraction(binom(L, w + 1) * rest, L - w)


def cscc_closed_form_t2(m: int, L: int, w: int) -> Fraction:
    """
    Closed form of the reduced program for t = 2 (d in {5, 6}).

    With a single subblock the two-step orbits [w+2] and [w-2] compete with
    the one-step ones, so m = 1 gets its own minimum.
    """
    _require_inner_weight(L, w, 2)
    full = binom(L, w)
    if m == 1:
        return Fraction(
            full,
            max(1 + w * (L - w), binom(w + 2, 2), binom(L - w + 2, 2)),
        )
    rest = binom(L, w) ** (m - 2)
    if w * (m + 1) <= L + 2:
        return Fraction(binom(L, w - 1) ** 2 * rest, w**2)
    if w * (m + 1) >= m * L - 2:
        return Fraction(binom(L, w + 1) ** 2 * rest, (L - w) ** 2)
    return Fraction(full**m, 1 + m * w * (L - w))


def cscc_gen_codesize_bound(m: int, L: int, w: int, d: int) -> Fraction:
    """
    Bound from the shifted space C(m, L, w+1).

    Each center sees at least binom(m, s)[binom(L-w, 2) w]^s (L-w)^(m-s) words
    of the shifted space within distance t, where s = floor((t - m) / 2).
    """
    if not 2 * m < d <= 6 * m:
        raise DomainError(f"needs 2m < d <= 6m, got m={m}, d={d}")
    if L < w + 2:
        raise DomainError(f"needs L >= w + 2, got L={L}, w={w}")
    CsccInstance(m, L, w, d)
    t = (d - 1) // 2
    s = (t - m) // 2
    ball = binom(m, s) * (binom(L - w, 2) * w) ** s * (L - w) ** (m - s)
    if ball == 0:
        raise DomainError(f"the shifted space gives an empty ball for w={w}")
    return Fraction(binom(L, w + 1) ** m, ball)


def cscc_closed_form(inst: CsccInstance) -> Fraction:
    """Dispatch to the t = 1 or t = 2 closed form."""
    if inst.t == 1:
        return cscc_closed_form_t1(inst.m, inst.L, inst.w)
    if inst.t == 2:
        return cscc_closed_form_t2(inst.m, inst.L, inst.w)
    raise DomainError(f"no CSCC closed form for t={inst.t} (only t in {{1, 2}})")


class CsccBoundHandler:
    """Computes CSCC bounds by the requested method and packages the result."""

    def __init__(
        self,
        config: Optional[BoundsConfig] = None,
        logger: Optional[BoundsLogger] = None,
        metrics: Optional[BoundsMetrics] = None,
    ):
        self.config = config or default_config
        self.logger = logger or BoundsLogger(
            verbose=self.config.verbose,
            use_rich=self.config.use_rich_logging,
            external_logger=self.config.logger,
        )
        self.metrics = metrics or BoundsMetrics()

    def lp_bound(self, inst: CsccInstance, full_solve: bool = False) -> Fraction:
        """
        Reduced-LP value, by the single-row minimum or by the simplex.

        Args:
            inst: The CSCC instance
            full_solve: Run the exact simplex instead of the ratio shortcut
        """
        start = start_timer()
        lp = cscc_reduced_lp(inst)
        self.logger.debug(
            "Built reduced CSCC program",
            category="cscc",
            auxiliary={"orbits": len(lp.cols), "t": inst.t},
        )
        if full_solve:
            value = solve_min(lp, self.logger, self.metrics).value
        else:
            value = min_ratio(lp)
            self.metrics.update(BoundsFunctionName.REDUCED_LP, get_elapsed_ms(start))
        return value

    def closed_bound(self, inst: CsccInstance) -> Fraction:
        start = start_timer()
        value = cscc_closed_form(inst)
        self.metrics.update(BoundsFunctionName.CLOSED_FORM, get_elapsed_ms(start))
        return value

    def compute(self, inst: CsccInstance, method: BoundMethod) -> BoundPayload:
        """Evaluate ``inst`` by ``method``; DomainError propagates to the caller."""
        places = self.config.decimal_places
        values: list[tuple[BoundMethod, Fraction]] = []
        if method in (BoundMethod.LP, BoundMethod.BOTH):
            values.append((BoundMethod.LP, self.lp_bound(inst)))
        if method in (BoundMethod.CLOSED, BoundMethod.BOTH):
            values.append((BoundMethod.CLOSED, self.closed_bound(inst)))
        if method is BoundMethod.GEN:
            start = start_timer()
            value = cscc_gen_codesize_bound(inst.m, inst.L, inst.w, inst.d)
            self.metrics.update(BoundsFunctionName.CLOSED_FORM, get_elapsed_ms(start))
            values.append((BoundMethod.GEN, value))

        agreement = None
        if method is BoundMethod.BOTH:
            agreement = values[0][1] == values[1][1]
            if not agreement:
                self.logger.error(
                    "LP and closed form disagree",
                    category="cscc",
                    auxiliary={"lp": str(values[0][1]), "closed": str(values[1][1])},
                )

        for name, value in values:
            self.logger.info(
                f"C({inst.m},{inst.L},{inst.d},{inst.w}) <= {value}",
                category="cscc",
                auxiliary={"method": name.value},
            )
        return BoundPayload(
            family=CodeFamily.CSCC,
            t=inst.t,
            results=[
                BoundResult(method=name, value=ExactValue.from_fraction(value, places))
                for name, value in values
            ],
            agreement=agreement,
        )
