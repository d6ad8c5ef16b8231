"""
Sphere-packing bounds for subblock energy-constrained codes (SECCs).

Every codeword has at least w ones in each subblock. Rows of the reduced
program are the profiles of the space itself, columns are every orbit within
distance t of some row.
"""

from collections.abc import Callable
from fractions import Fraction
from typing import Optional

from ..combinatorics import binom, binom_at_least
from ..config import BoundsConfig, default_config
from ..logging import BoundsLogger
from ..lp import dual_objective, primal_objective, solve_min, verify_certificate
from ..metrics import BoundsFunctionName, BoundsMetrics, get_elapsed_ms, start_timer
from ..orbits import (
    constrained_ball_size,
    enumerate_secc_cols,
    enumerate_secc_rows,
    orbit_size,
)
from ..schemas import (
    BoundMethod,
    BoundPayload,
    BoundResult,
    CertificatePayload,
    CodeFamily,
    ExactValue,
)
from ..types.errors import DomainError, InvalidParameterError
from ..types.instances import SeccInstance
from ..types.lp import Certificate, ReducedLP, Verdict
from ..types.profiles import WeightProfile


def build_secc_program(m: int, L: int, w: int, t: int) -> ReducedLP:
    """Program over P_row(m, L; w) x P_col(m, L; w, t) for any radius t."""
    rows = enumerate_secc_rows(m, L, w)
    cols = enumerate_secc_cols(m, L, w, t)
    matrix = tuple(
        tuple(
            constrained_ball_size(v, u, t) if v.distance(u) <= t else 0
            for u in cols
        )
        for v in rows
    )
    objective = tuple(orbit_size(u) for u in cols)
    return ReducedLP(matrix=matrix, objective=objective, rows=rows, cols=cols)


def secc_reduced_lp(inst: SeccInstance) -> ReducedLP:
    return build_secc_program(inst.m, inst.L, inst.w, inst.t)


def secc_gsp_bound(
    inst: SeccInstance,
    logger: Optional[BoundsLogger] = None,
    metrics: Optional[BoundsMetrics] = None,
) -> Fraction:
    """Generalized sphere-packing bound on S(m, L, d, w)."""
    return solve_min(secc_reduced_lp(inst), logger, metrics).value


def _residue_sum(n: int, cost: Callable[[int], int]) -> Fraction:
    """
    Shared closed-form sum over the chain of profiles 0..n.

    ``cost(k)`` is the orbit size of the profile k steps below the top.
    """
    q, r = divmod(n, 4)
    if r == 0:
        return 1 + sum(
            (Fraction(cost(4 * i + 2) + cost(4 * i + 3), 4 * i + 4) for i in range(q)),
            Fraction(0),
        )
    if r == 1:
        return 1 + sum(
            (Fraction(cost(4 * i + 3) + cost(4 * i + 4), 4 * i + 5) for i in range(q)),
            Fraction(0),
        )
    if r == 2:
        return sum(
            (Fraction(cost(4 * i) + cost(4 * i + 1), 4 * i + 2) for i in range(q + 1)),
            Fraction(0),
        )
    return sum(
        (Fraction(cost(4 * i + 1) + cost(4 * i + 2), 4 * i + 3) for i in range(q + 1)),
        Fraction(0),
    )


def _require_table1(m: int, L: int) -> None:
    if m < 1 or L < 1:
        raise InvalidParameterError(f"needs m >= 1 and L >= 1, got m={m}, L={L}")
    if 2 * L < m:
        raise DomainError(f"the w = L-1 closed form needs L >= m/2, got m={m}, L={L}")


def _require_table2(L: int, w: int) -> None:
    if L < 1 or not 0 <= w <= L:
        raise InvalidParameterError(f"needs L >= 1 and 0 <= w <= L, got L={L}, w={w}")
    if 2 * w < L - 1:
        raise DomainError(f"the m = 1 closed form needs 2w >= L-1, got L={L}, w={w}")


def secc_closed_form_wL1(m: int, L: int) -> Fraction:
    """
    Reduced-LP value for t = 1 and w = L-1.

    Exact when m = 1 or 2L >= m+2. For 2L in {m, m+1} it is still a valid
    bound (the cost of a feasible point) but lies above the LP optimum.
    """
    _require_table1(m, L)
    return _residue_sum(m, lambda k: binom(m, k) * L**k)


def secc_closed_form_m1(L: int, w: int) -> Fraction:
    """Reduced-LP value for t = 1 and a single subblock."""
    _require_table2(L, w)
    return _residue_sum(L - w, lambda k: binom(L, k))


def _chain_certificate(
    n: int, cost: Callable[[int], int], top_from_below: bool
) -> tuple[dict[int, Fraction], dict[int, Fraction]]:
    """
    Primal and dual values along the chain of profiles 0..n.

    Index k counts the steps below the top profile. Primal mass sits on
    consecutive pairs of the chain; each dual pair telescopes the two costs
    it covers.
    """
    q, r = divmod(n, 4)
    primal: dict[int, Fraction] = {}
    dual: dict[int, Fraction] = {}

    def pair(first: int, denominator: int) -> None:
        primal[first] = primal[first + 1] = Fraction(1, denominator)
        x_lo = Fraction(cost(first), first + 1)
        dual[first + 1] = x_lo
        dual[first + 2] = (cost(first + 1) - x_lo) / (first + 2)

    if r == 0:
        if n and top_from_below:
            primal[1] = Fraction(1, cost(1))
        else:
            primal[0] = Fraction(1)
        dual[0] = Fraction(1)
        for i in range(q):
            pair(4 * i + 2, 4 * i + 4)
    elif r == 1:
        primal[0] = Fraction(1)
        dual[0] = Fraction(1)
        for i in range(q):
            pair(4 * i + 3, 4 * i + 5)
    elif r == 2:
        for i in range(q + 1):
            pair(4 * i, 4 * i + 2)
    else:
        for i in range(q + 1):
            pair(4 * i + 1, 4 * i + 3)
    return primal, dual


def _table1_profile(m: int, L: int, k: int) -> WeightProfile:
    return WeightProfile((L,) * (m - k) + (L - 1,) * k, L)


def build_certificate_table1(m: int, L: int) -> Certificate:
    """Tabulated optimality certificate for t = 1, w = L-1."""
    _require_table1(m, L)
    primal, dual = _chain_certificate(
        m, lambda k: binom(m, k) * L**k, top_from_below=True
    )
    return Certificate(
        primal={_table1_profile(m, L, k): y for k, y in primal.items()},
        dual={_table1_profile(m, L, k): x for k, x in dual.items()},
    )


def build_certificate_table2(L: int, w: int) -> Certificate:
    """Tabulated optimality certificate for t = 1, m = 1."""
    _require_table2(L, w)
    primal, dual = _chain_certificate(L - w, lambda k: binom(L, k), top_from_below=False)
    return Certificate(
        primal={WeightProfile((L - k,), L): y for k, y in primal.items()},
        dual={WeightProfile((L - k,), L): x for k, x in dual.items()},
    )


def secc_m0_bound(m: int, L: int, w: int, d: int, m0: int) -> Fraction:
    """
    Bound from the space whose first m0 subblocks may drop to weight w-1.

    Each center sees at least sum_{t1+t2<=t} binom(m0,t1) binom(m-m0,t2)
    L^t1 (L-w)^t2 words of that space by single-bit changes.
    """
    if not 1 <= w <= L - 1:
        raise DomainError(f"needs 1 <= w <= L-1, got w={w}, L={L}")
    if not 0 <= m0 <= m:
        raise DomainError(f"needs 0 <= m0 <= m, got m0={m0}, m={m}")
    if d > 2 * m + 1:
        raise DomainError(f"needs d <= 2m+1, got d={d}, m={m}")
    SeccInstance(m, L, w, d)
    t = (d - 1) // 2
    size = binom_at_least(L, w - 1) ** m0 * binom_at_least(L, w) ** (m - m0)
    ball = sum(
        binom(m0, t1) * binom(m - m0, t2) * L**t1 * (L - w) ** t2
        for t1 in range(t + 1)
        for t2 in range(t + 1 - t1)
    )
    return Fraction(size, ball)


def secc_best_m0_bound(m: int, L: int, w: int, d: int) -> tuple[Fraction, int]:
    """Smallest secc_m0_bound over m0, ties going to the smallest m0."""
    best = None
    for m0 in range(m + 1):
        value = secc_m0_bound(m, L, w, d, m0)
        if best is None or value < best[0]:
            best = (value, m0)
    return best


def secc_closed_form(inst: SeccInstance) -> Fraction:
    """Dispatch to the w = L-1 or m = 1 closed form (t = 1 only)."""
    if inst.t == 1 and inst.w == inst.L - 1:
        return secc_closed_form_wL1(inst.m, inst.L)
    if inst.t == 1 and inst.m == 1:
        return secc_closed_form_m1(inst.L, inst.w)
    raise DomainError(
        f"no SECC closed form for m={inst.m}, L={inst.L}, w={inst.w}, t={inst.t} "
        "(needs t = 1 with w = L-1 or m = 1)"
    )


class SeccBoundHandler:
    """Computes SECC bounds and checks tabulated certificates."""

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

    def lp_bound(self, inst: SeccInstance) -> Fraction:
        lp = secc_reduced_lp(inst)
        self.logger.debug(
            "Built reduced SECC program",
            category="secc",
            auxiliary={"rows": len(lp.rows), "cols": len(lp.cols)},
        )
        return solve_min(lp, self.logger, self.metrics).value

    def compute(self, inst: SeccInstance, method: BoundMethod) -> BoundPayload:
        """Evaluate ``inst`` by ``method``; DomainError propagates to the caller."""
        places = self.config.decimal_places
        results: list[BoundResult] = []
        values: list[Fraction] = []

        def add(name: BoundMethod, value: Fraction, m0: Optional[int] = None) -> None:
            values.append(value)
            results.append(
                BoundResult(
                    method=name, value=ExactValue.from_fraction(value, places), m0=m0
                )
            )
            self.logger.info(
                f"S({inst.m},{inst.L},{inst.d},{inst.w}) <= {value}",
                category="secc",
                auxiliary={"method": name.value},
            )

        if method in (BoundMethod.LP, BoundMethod.BOTH):
            add(BoundMethod.LP, self.lp_bound(inst))
        if method in (BoundMethod.CLOSED, BoundMethod.BOTH):
            start = start_timer()
            value = secc_closed_form(inst)
            self.metrics.update(BoundsFunctionName.CLOSED_FORM, get_elapsed_ms(start))
            add(BoundMethod.CLOSED, value)
        if method is BoundMethod.GEN:
            start = start_timer()
            value, m0 = secc_best_m0_bound(inst.m, inst.L, inst.w, inst.d)
            self.metrics.update(BoundsFunctionName.CLOSED_FORM, get_elapsed_ms(start))
            add(BoundMethod.GEN, value, m0)

        agreement = None
        if method is BoundMethod.BOTH:
            agreement = values[0] == values[1]
            if not agreement:
                self.logger.error(
                    "LP and closed form disagree",
                    category="secc",
                    auxiliary={"lp": str(values[0]), "closed": str(values[1])},
                )
        return BoundPayload(
            family=CodeFamily.SECC, t=inst.t, results=results, agreement=agreement
        )

    def certify(
        self, table: int, m: int = 1, L: int = 1, w: Optional[int] = None
    ) -> CertificatePayload:
        """
        Build the tabulated certificate and verify it against the reduced program.

        Args:
            table: 1 for w = L-1 (uses m, L), 2 for m = 1 (uses L, w)
        """
        start = start_timer()
        if table == 1:
            cert = build_certificate_table1(m, L)
            closed = secc_closed_form_wL1(m, L)
            lp = build_secc_program(m, L, L - 1, 1)
        elif table == 2:
            if w is None:
                raise InvalidParameterError("table 2 needs w")
            m = 1
            cert = build_certificate_table2(L, w)
            closed = secc_closed_form_m1(L, w)
            lp = build_secc_program(1, L, w, 1)
        else:
            raise InvalidParameterError(f"table must be 1 or 2, got {table}")

        verdict = verify_certificate(lp, cert)
        lp_value = solve_min(lp, self.logger, self.metrics).value
        self.metrics.update(BoundsFunctionName.CERTIFICATE, get_elapsed_ms(start))

        places = self.config.decimal_places
        log = self.logger.info if verdict is Verdict.VALID else self.logger.error
        log(
            f"Table {table} certificate: {verdict.value}",
            category="certify",
            auxiliary={"m": m, "L": L},
        )
        return CertificatePayload(
            table=table,
            verdict=verdict.value,
            primal_value=ExactValue.from_fraction(primal_objective(lp, cert), places),
            dual_value=ExactValue.from_fraction(dual_objective(cert), places),
            closed_form=ExactValue.from_fraction(closed, places),
            lp_value=ExactValue.from_fraction(lp_value, places),
        )

