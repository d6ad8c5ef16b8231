"""
Upper bounds on asymptotic rates, in bits per channel use.

L and w stay fixed while the number of subblocks grows and the minimum
distance scales as floor(m L delta). Binomials come from
``scipy.special.binom`` and entropies from ``scipy.stats.entropy``.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

import numpy as np
from scipy import special, stats

from .combinatorics import binom_at_least
from .schemas import CodeFamily
from .types.errors import DomainError, InvalidParameterError
from .types.instances import RateBoundRow, RateParams

CSCC_COLUMNS = ("gamma_sp", "gamma_sp_acute")
SECC_COLUMNS = ("r1", "r1_minus_nu", "sigma_sp")

_SNAP = 1e-12

Real = Union[float, Fraction]


def binary_entropy(x: Real) -> float:
    """h(x) in bits, with h(0) = h(1) = 0."""
    x = float(x)
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"binary entropy needs 0 <= x <= 1, got {x}")
    return float(stats.entropy([x, 1.0 - x], base=2))


def delta_star(omega: Real) -> float:
    """Relative distance 2 omega (1 - omega) past which the CSCC rate is zero."""
    omega = float(omega)
    return 2.0 * omega * (1.0 - omega)


def log2_binom(n: int, k: int) -> float:
    if k < 0 or k > n:
        return -math.inf
    return float(np.log2(special.binom(n, k)))


def log2_binom_at_least(L: int, w: int) -> float:
    return math.log2(binom_at_least(L, w))


def _snap(x: float) -> float:
    nearest = round(x)
    return float(nearest) if abs(x - nearest) < _SNAP else x


def gamma_sp(L: int, w: int, delta: Real) -> float:
    """
    Sphere-packing bound on the CSCC rate from balls inside the code space.

    Uses u = delta L / 4 and interpolates between floor(u) and ceil(u).
    """
    params = RateParams(L, w, float(delta))
    if not 0.0 < params.delta < delta_star(params.omega):
        raise DomainError(
            f"gamma_sp needs 0 < delta < {delta_star(params.omega):.6g}, got {params.delta}"
        )
    u = _snap(params.delta * L / 4.0)
    hi = math.ceil(u)
    lo = math.floor(u)
    upper_weight = 1.0 + u - hi
    lower_weight = hi - u

    value = log2_binom(L, w)
    for weight, k in ((upper_weight, hi), (lower_weight, lo)):
        if weight:
            value -= weight * (log2_binom(w, k) + log2_binom(L - w, k))
    value -= binary_entropy(lower_weight)
    return value / L


def gamma_sp_acute(L: int, w: int, delta: Real) -> float:
    """CSCC rate bound from balls in the shifted space C(m, L, w+1)."""
    params = RateParams(L, w, float(delta))
    delta = params.delta
    if L < w + 2:
        raise DomainError(f"gamma_sp_acute needs L >= w + 2, got L={L}, w={w}")
    # 6/L <= delta*(w/L) rearranges to 3L <= w(L - w).
    if 3 * L > w * (L - w):
        raise DomainError(f"gamma_sp_acute needs 6/L <= delta*, fails for L={L}, w={w}")
    if not 2.0 / L < delta < 6.0 / L:
        raise DomainError(
            f"gamma_sp_acute needs 2/L < delta < 6/L, got delta={delta}, L={L}"
        )
    three_bit = log2_binom(L - w, 2) + math.log2(w)
    return (
        log2_binom(L, w + 1) / L
        - (delta / 4.0 - 1.0 / (2 * L)) * three_bit
        - binary_entropy(L * delta / 4.0 - 0.5) / L
        - (3.0 / (2 * L) - delta / 4.0) * math.log2(L - w)
    )


@dataclass(frozen=True)
class SeccRateBounds:
    """
    SECC rate bounds at one (L, w, delta).

    The first four fields are None when delta >= 2/L; sigma_sp is None when
    delta > 4/L.
    """

    r1: Optional[float]
    nu: Optional[float]
    alpha_hat: Optional[int]
    bound: Optional[float]
    sigma_sp: Optional[float]

    @property
    def r1_minus_nu(self) -> Optional[float]:
        if self.r1 is None or self.nu is None:
            return None
        return self.r1 - self.nu


def _require_inner_weight(L: int, w: int) -> None:
    if not 1 <= w <= L - 1:
        raise DomainError(f"needs 1 <= w <= L-1, got w={w}, L={L}")


def secc_rate_bounds(L: int, w: int, delta: Real) -> SeccRateBounds:
    params = RateParams(L, w, float(delta))
    _require_inner_weight(L, w)
    delta = params.delta
    top = log2_binom_at_least(L, w)

    r1 = nu = bound = None
    alpha_hat = None
    if delta < 2.0 / L:
        r1 = top / L - binary_entropy(delta * L / 2.0) / L - (delta / 2.0) * math.log2(
            L - w
        )
        nu = (delta / 2.0) * math.log2(L / (L - w)) - (
            log2_binom_at_least(L, w - 1) - top
        ) / L
        alpha_hat = 1 if nu > 0 else 0
        bound = min(r1, r1 - nu)

    sigma_sp = None
    if delta <= 4.0 / L:
        sigma_sp = (
            top / L
            - binary_entropy(delta * L / 4.0) / L
            - (delta / 4.0) * math.log2((L - w) * (w + 1))
        )
    return SeccRateBounds(r1, nu, alpha_hat, bound, sigma_sp)


def secc_crossover_delta(L: int, w: int) -> float:
    """Relative distance above which the lowered space beats the SECC space itself."""
    if not 0 < w < L:
        raise DomainError(f"crossover needs 0 < w < L, got w={w}, L={L}")
    ratio = log2_binom_at_least(L, w - 1) - log2_binom_at_least(L, w)
    return 2.0 * ratio / (L * math.log2(L / (L - w)))


def _cell(func, *args) -> Optional[float]:
    try:
        value = func(*args)
    except DomainError:
        return None
    if value is None or not np.isfinite(value):
        return None
    return float(value)


def rate_table(
    family: Union[CodeFamily, str],
    L: int,
    w_values: Sequence[int],
    deltas: Sequence[Real],
) -> list[RateBoundRow]:
    """
    Rows ordered by w, then delta; cells outside a formula's domain are None.
    """
    family = CodeFamily(family)
    if L < 1:
        raise InvalidParameterError(f"L must be >= 1, got {L}")
    rows: list[RateBoundRow] = []
    for w in w_values:
        if not 0 <= w <= L:
            raise InvalidParameterError(f"w must lie in [0, L={L}], got {w}")
        for delta in deltas:
            values: dict[str, Optional[float]]
            if family is CodeFamily.CSCC:
                values = {
                    "gamma_sp": _cell(gamma_sp, L, w, delta),
                    "gamma_sp_acute": _cell(gamma_sp_acute, L, w, delta),
                }
            else:
                try:
                    secc = secc_rate_bounds(L, w, delta)
                except DomainError:
                    secc = SeccRateBounds(None, None, None, None, None)
                values = {
                    "r1": _cell(lambda: secc.r1),
                    "r1_minus_nu": _cell(lambda: secc.r1_minus_nu),
                    "sigma_sp": _cell(lambda: secc.sigma_sp),
                }
            rows.append(RateBoundRow(w=w, delta=float(delta), values=values))
    return rows
