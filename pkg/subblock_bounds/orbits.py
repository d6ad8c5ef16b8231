"""Orbit enumeration, orbit sizes and constrained ball sizes."""

from collections import Counter
from collections.abc import Iterator, Sequence
from functools import lru_cache

from .combinatorics import binom, multinomial, phi_map, subblock_sphere_count
from .types.errors import InvalidParameterError
from .types.profiles import OrbitIndexSet, ProfileKind, WeightProfile


def _require_shape(m: int, L: int, w: int, t: int = 0) -> None:
    if m < 1:
        raise InvalidParameterError(f"m must be >= 1, got {m}")
    if L < 1:
        raise InvalidParameterError(f"L must be >= 1, got {L}")
    if not 0 <= w <= L:
        raise InvalidParameterError(f"w must lie in [0, L={L}], got {w}")
    if t < 0:
        raise InvalidParameterError(f"t must be >= 0, got {t}")


def _sorted_within(center: Sequence[int], L: int, t: int) -> Iterator[tuple[int, ...]]:
    """Non-increasing tuples u in [0, L]^m with sum |u_i - center_i| <= t."""
    m = len(center)

    def descend(i: int, cap: int, budget: int, prefix: tuple[int, ...]):
        if i == m:
            yield prefix
            return
        c = center[i]
        for x in range(min(cap, c + budget), max(0, c - budget) - 1, -1):
            yield from descend(i + 1, x, budget - abs(x - c), prefix + (x,))

    yield from descend(0, L, t, ())


def all_profiles(m: int, L: int) -> list[WeightProfile]:
    """Every profile in P(m, L), lexicographically descending."""
    _require_shape(m, L, 0)
    return [WeightProfile(u, L) for u in _sorted_within((L,) * m, L, m * L)]


def _cscc_order_key(u: WeightProfile, center: WeightProfile):
    pair = phi_map(u, center)
    return (
        pair.total,
        -pair.lambda1.total,
        tuple(-x for x in pair.lambda1.parts),
        pair.lambda2.parts,
    )


def enumerate_cscc_profiles(m: int, L: int, w: int, t: int) -> OrbitIndexSet:
    """
    P(m, L; w, t): orbits meeting the radius-t ball around a CSCC word.

    Profiles are ordered by distance from [w, ..., w], then by the weight they
    add (most first), then by the shape of the added and removed weight.
    """
    _require_shape(m, L, w, t)
    center = WeightProfile.uniform(m, L, w)
    profiles = [WeightProfile(u, L) for u in _sorted_within(center.weights, L, t)]
    profiles.sort(key=lambda u: _cscc_order_key(u, center))
    return OrbitIndexSet(tuple(profiles), ProfileKind.CSCC_BALL, w=w, t=t)


def enumerate_profile_ball(v: WeightProfile, t: int) -> OrbitIndexSet:
    """P(m, L; v, t) for an arbitrary center profile, lexicographically descending."""
    if t < 0:
        raise InvalidParameterError(f"t must be >= 0, got {t}")
    profiles = tuple(WeightProfile(u, v.L) for u in _sorted_within(v.weights, v.L, t))
    return OrbitIndexSet(
        profiles, ProfileKind.PROFILE_BALL, w=min(v), t=t, center=v
    )


def enumerate_secc_rows(m: int, L: int, w: int) -> OrbitIndexSet:
    """P_row(m, L; w): profiles whose every weight is at least w."""
    _require_shape(m, L, w)
    profiles = tuple(
        WeightProfile(u, L)
        for u in _sorted_within((L,) * m, L, m * (L - w))
        if min(u) >= w
    )
    return OrbitIndexSet(profiles, ProfileKind.SECC_ROWS, w=w)


def enumerate_secc_cols(m: int, L: int, w: int, t: int) -> OrbitIndexSet:
    """P_col(m, L; w, t): the rows first, then the remaining ball orbits."""
    _require_shape(m, L, w, t)
    rows = enumerate_secc_rows(m, L, w)
    extras: set[tuple[int, ...]] = set()
    for v in rows:
        for u in _sorted_within(v.weights, L, t):
            if min(u) < w:
                extras.add(u)
    profiles = rows.profiles + tuple(
        WeightProfile(u, L) for u in sorted(extras, reverse=True)
    )
    return OrbitIndexSet(profiles, ProfileKind.SECC_COLS, w=w, t=t)


def orbit_size(u: WeightProfile) -> int:
    """|O_u|: subblock arrangements times within-subblock arrangements."""
    arrangements = multinomial(u.m, list(Counter(u.weights).values()))
    size = arrangements
    for weight in u:
        size *= binom(u.L, weight)
    return size


def constrained_ball_size(v: WeightProfile, u: WeightProfile, t: int) -> int:
    """
    Count the words of O_u within distance t of a fixed word of O_v.

    Walks the subblocks of the representative (0^(L-v_i) 1^(v_i)) in order,
    assigning each one a weight from the remaining multiset of u and spending
    the distance budget on it.
    """
    v.require_compatible(u)
    if t < 0:
        return 0
    L = v.L
    values = tuple(sorted(set(u.weights), reverse=True))
    start = tuple(u.weights.count(x) for x in values)
    spheres = {
        (a, b): tuple(subblock_sphere_count(L, a, b, r) for r in range(t + 1))
        for a in set(v.weights)
        for b in values
    }

    @lru_cache(maxsize=None)
    def walk(i: int, counts: tuple[int, ...], budget: int) -> int:
        if i == v.m:
            return 1
        here = v[i]
        total = 0
        for j, count in enumerate(counts):
            if count == 0:
                continue
            target = values[j]
            low = abs(here - target)
            if low > budget:
                continue
            rest = counts[:j] + (count - 1,) + counts[j + 1 :]
            row = spheres[(here, target)]
            for r in range(low, budget + 1, 2):
                if row[r]:
                    total += row[r] * walk(i + 1, rest, budget - r)
        return total

    return walk(0, start, t)
