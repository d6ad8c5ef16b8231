"""
Exact combinatorial primitives.

Binomials and multinomials are plain Python integers (arbitrary precision).
Partition counts are memoised with ``functools.lru_cache``, which is safe to
share between threads.
"""

import math
from collections.abc import Iterator, Sequence
from functools import lru_cache
from typing import Optional

from .types.errors import InvalidParameterError, ProfileMismatchError
from .types.profiles import Partition, PartitionPair, WeightProfile


def binom(n: int, k: int) -> int:
    """n choose k, zero outside 0 <= k <= n."""
    if n < 0:
        raise InvalidParameterError(f"binom needs n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def binom_at_least(L: int, w: int) -> int:
    """Number of length-L words of weight at least w."""
    return sum(binom(L, j) for j in range(max(w, 0), L + 1))


def multinomial(m: int, mu: Sequence[int]) -> int:
    """m! / (mu_1! mu_2! ...), requiring sum(mu) == m."""
    if any(x < 0 for x in mu):
        raise InvalidParameterError(f"multinomial parts must be >= 0: {list(mu)}")
    if sum(mu) != m:
        raise InvalidParameterError(
            f"multinomial parts {list(mu)} sum to {sum(mu)}, expected {m}"
        )
    result = 1
    remaining = m
    for part in mu:
        result *= math.comb(remaining, part)
        remaining -= part
    return result


@lru_cache(maxsize=None)
def _partitions_bounded(n: int, max_part: int) -> int:
    if n == 0:
        return 1
    if max_part == 0:
        return 0
    if max_part > n:
        return _partitions_bounded(n, n)
    return _partitions_bounded(n - max_part, max_part) + _partitions_bounded(
        n, max_part - 1
    )


def partition_number(i: int) -> int:
    """p(i), the number of integer partitions of i; p(0) = 1."""
    if i < 0:
        raise InvalidParameterError(f"partition_number needs i >= 0, got {i}")
    return _partitions_bounded(i, i)


def enumerate_partitions(n: int, max_part: Optional[int] = None) -> Iterator[Partition]:
    """Yield the partitions of n with parts at most max_part, largest parts first."""
    if n < 0:
        raise InvalidParameterError(f"cannot partition {n}")
    bound = n if max_part is None else min(max_part, n)

    def descend(remaining: int, cap: int, prefix: tuple[int, ...]):
        if remaining == 0:
            yield Partition(prefix)
            return
        for part in range(min(cap, remaining), 0, -1):
            yield from descend(remaining - part, part, prefix + (part,))

    yield from descend(n, bound, ())


def count_partition_pairs(t: int) -> int:
    """Number of partitions of t into parts of two kinds."""
    if t < 0:
        raise InvalidParameterError(f"count_partition_pairs needs t >= 0, got {t}")
    return sum(partition_number(i) * partition_number(t - i) for i in range(t + 1))


def enumerate_partition_pairs(t: int) -> Iterator[PartitionPair]:
    for i in range(t, -1, -1):
        for first in enumerate_partitions(i):
            for second in enumerate_partitions(t - i):
                yield PartitionPair(first, second)


def orbit_count_bound(t: int) -> int:
    """N(t): the number of partition pairs of total at most t."""
    if t < 0:
        raise InvalidParameterError(f"orbit_count_bound needs t >= 0, got {t}")
    return sum(count_partition_pairs(r) for r in range(t + 1))


def phi_map(u: WeightProfile, v: WeightProfile) -> PartitionPair:
    """
    Split u - v into its positive and negative parts.

    lambda1 collects the positive entries, lambda2 the magnitudes of the
    negative entries; both come out non-increasing. For a constant v the
    difference is sign-sorted and ``unphi_map`` recovers u; for general v the
    positions of the entries are lost.
    """
    if len(u) != len(v):
        raise ProfileMismatchError(
            f"phi_map needs profiles of equal length, got {len(u)} and {len(v)}"
        )
    diff = [a - b for a, b in zip(u, v)]
    positive = sorted((x for x in diff if x > 0), reverse=True)
    negative = sorted((-x for x in diff if x < 0), reverse=True)
    return PartitionPair(Partition(tuple(positive)), Partition(tuple(negative)))


def phi_blocks(u: WeightProfile, v: WeightProfile) -> tuple[PartitionPair, ...]:
    """
    ``phi_map`` applied separately to each run of equal weights in v.

    Inside a run u - v is non-increasing, so the pair of that run fixes the
    entries of u there. The tuple of pairs therefore determines u for any v.
    """
    v.require_compatible(u)
    pairs = []
    start = 0
    while start < v.m:
        end = start
        while end < v.m and v[end] == v[start]:
            end += 1
        block = WeightProfile.uniform(end - start, v.L, v[start])
        part = WeightProfile(u.weights[start:end], u.L)
        pairs.append(phi_map(part, block))
        start = end
    return tuple(pairs)


def profile_ball_bound(v: WeightProfile, t: int) -> int:
    """
    Upper bound on |P(m, L; v, t)| for an arbitrary center v.

    Counts tuples of partition pairs, one per run of equal weights in v, of
    total size at most t. A constant v has one run and gives N(t).
    """
    if t < 0:
        raise InvalidParameterError(f"profile_ball_bound needs t >= 0, got {t}")
    runs = len(set(v.weights))
    pairs = [count_partition_pairs(r) for r in range(t + 1)]
    series = [1] + [0] * t
    for _ in range(runs):
        series = [
            sum(series[i] * pairs[r - i] for i in range(r + 1)) for r in range(t + 1)
        ]
    return sum(series)


def unphi_map(pair: PartitionPair, v: WeightProfile) -> WeightProfile:
    """Pad-and-subtract inverse of ``phi_map`` around a constant profile v."""
    used = len(pair.lambda1) + len(pair.lambda2)
    if used > v.m:
        raise InvalidParameterError(
            f"pair {pair} has {used} parts, more than the {v.m} subblocks of {v}"
        )
    diff = (
        list(pair.lambda1.parts)
        + [0] * (v.m - used)
        + [-x for x in reversed(pair.lambda2.parts)]
    )
    return WeightProfile.from_unsorted([a + b for a, b in zip(v, diff)], v.L)


def subblock_sphere_count(L: int, w_ref: int, u: int, r: int) -> int:
    """
    Count length-L words of weight u at distance exactly r from a weight-w_ref word.

    a ones are cleared and b zeros are set, with a + b = r and b - a = u - w_ref.
    """
    if r < 0 or not (0 <= w_ref <= L and 0 <= u <= L):
        return 0
    shift = u - w_ref
    if r < abs(shift) or (r - abs(shift)) % 2:
        return 0
    cleared = (r - shift) // 2
    set_ = (r + shift) // 2
    return binom(w_ref, cleared) * binom(L - w_ref, set_)
