"""Optimality certificates, single-row minima and feasible-point bounds."""

from collections.abc import Iterable, Sequence
from fractions import Fraction
from typing import Optional, Union

from ..types.errors import CertificateIndexError, DomainError, InvalidParameterError
from ..types.lp import Certificate, CoveringProgram, ReducedLP, Verdict
from ..types.profiles import WeightProfile


def check_vectors(
    program: CoveringProgram,
    primal: Sequence[Fraction],
    dual: Sequence[Fraction],
) -> Verdict:
    """
    Check a dense primal/dual pair in exact arithmetic.

    Primal feasibility is checked first, then dual feasibility, then equality
    of the two objective values.
    """
    n_rows, n_cols = program.shape
    if len(primal) != n_cols or len(dual) != n_rows:
        raise CertificateIndexError(
            f"vectors of length {len(primal)}/{len(dual)} do not fit a "
            f"{n_rows}x{n_cols} program"
        )

    if any(y < 0 for y in primal):
        return Verdict.PRIMAL_INFEASIBLE
    support = [j for j, y in enumerate(primal) if y != 0]
    for row in program.matrix:
        if sum((row[j] * primal[j] for j in support), Fraction(0)) < 1:
            return Verdict.PRIMAL_INFEASIBLE

    if any(x < 0 for x in dual):
        return Verdict.DUAL_INFEASIBLE
    active = [i for i, x in enumerate(dual) if x != 0]
    for j, cost in enumerate(program.objective):
        load = sum((program.matrix[i][j] * dual[i] for i in active), Fraction(0))
        if load > cost:
            return Verdict.DUAL_INFEASIBLE

    primal_value = sum(
        (program.objective[j] * primal[j] for j in support), Fraction(0)
    )
    dual_value = sum((dual[i] for i in active), Fraction(0))
    return Verdict.VALID if primal_value == dual_value else Verdict.GAP


def _require_indexed(lp: ReducedLP, cert: Certificate) -> None:
    stray_primal = [u for u in cert.primal if u not in lp.cols]
    stray_dual = [v for v in cert.dual if v not in lp.rows]
    if stray_primal or stray_dual:
        names = ", ".join(str(u) for u in stray_primal + stray_dual)
        raise CertificateIndexError(f"certificate indexes unknown profiles: {names}")


def verify_certificate(lp: ReducedLP, cert: Certificate) -> Verdict:
    """
    Decide whether (Y~, X~) certifies the optimum of ``lp``.

    Raises:
        CertificateIndexError: the certificate names profiles outside the
            program; this is reported apart from mathematical failure.
    """
    _require_indexed(lp, cert)
    return check_vectors(
        lp, cert.primal_vector(lp.cols.profiles), cert.dual_vector(lp.rows.profiles)
    )


def primal_objective(lp: ReducedLP, cert: Certificate) -> Fraction:
    _require_indexed(lp, cert)
    return sum(
        (Fraction(y) * lp.objective[lp.cols.index(u)] for u, y in cert.primal.items()),
        Fraction(0),
    )


def dual_objective(cert: Certificate) -> Fraction:
    return sum((Fraction(x) for x in cert.dual.values()), Fraction(0))


def min_ratio(lp: ReducedLP, row: Optional[WeightProfile] = None) -> Fraction:
    """
    Minimum of |O_u| / M*_{w,u} over columns with a positive entry.

    Only defined for single-row programs, where every vertex carries a single
    non-zero coordinate.
    """
    if len(lp.matrix) != 1:
        raise InvalidParameterError(
            f"min_ratio needs a single-row program, got {len(lp.matrix)} rows"
        )
    if row is not None and row != lp.rows[0]:
        raise CertificateIndexError(f"program row is {lp.rows[0]}, not {row}")
    ratios = [
        Fraction(cost, entry)
        for cost, entry in zip(lp.objective, lp.matrix[0])
        if entry > 0
    ]
    if not ratios:
        raise DomainError("the single covering row has no positive entry")
    return min(ratios)


def feasible_point_bound(
    lp: ReducedLP, subspace: Iterable[Union[WeightProfile, int]]
) -> Fraction:
    """
    Sphere-packing bound from a chosen subspace of orbits.

    Spreading weight 1/V over the subspace, with V the smallest number of
    subspace words any center sees, is a feasible covering point; its cost is
    |subspace| / V.
    """
    columns = sorted(
        {lp.cols.index(u) if isinstance(u, WeightProfile) else int(u) for u in subspace}
    )
    if not columns:
        raise DomainError("the subspace is empty")
    if columns[0] < 0 or columns[-1] >= len(lp.objective):
        raise CertificateIndexError(f"column indices {columns} out of range")
    smallest_ball = min(sum(row[j] for j in columns) for row in lp.matrix)
    if smallest_ball == 0:
        raise DomainError("some center sees no word of the subspace")
    return Fraction(sum(lp.objective[j] for j in columns), smallest_ball)
