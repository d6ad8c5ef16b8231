"""
Brute-force code spaces, balls and the full-space covering program.

Words are packed into Python integers: the first subblock sits in the most
significant bits, so numeric order is the order of the binary strings.
"""

import itertools
from collections.abc import Iterator
from dataclasses import dataclass
from typing import Optional, Union

from ..config import BoundsConfig, default_config
from ..schemas import CodeFamily
from ..types.errors import DeskCapExceededError, InvalidParameterError
from ..types.lp import CoveringProgram
from ..types.profiles import WeightProfile


def popcount(x: int) -> int:
    return bin(x).count("1")


@dataclass(frozen=True, order=True)
class Word:
    """A binary word of length mL viewed as m subblocks of length L."""

    bits: int
    m: int
    L: int

    def __post_init__(self):
        if not 0 <= self.bits < 1 << (self.m * self.L):
            raise InvalidParameterError(
                f"{self.bits} does not fit in {self.m * self.L} bits"
            )

    @property
    def length(self) -> int:
        return self.m * self.L

    def subblock(self, i: int) -> int:
        shift = self.L * (self.m - 1 - i)
        return (self.bits >> shift) & ((1 << self.L) - 1)

    def weights(self) -> tuple[int, ...]:
        return tuple(popcount(self.subblock(i)) for i in range(self.m))

    def profile(self) -> WeightProfile:
        return WeightProfile.from_unsorted(self.weights(), self.L)

    def distance(self, other: "Word") -> int:
        return popcount(self.bits ^ other.bits)

    def __str__(self) -> str:
        return format(self.bits, f"0{self.length}b") if self.length else ""


def representative_word(v: WeightProfile) -> Word:
    """The word whose i-th subblock is 0^(L - v_i) 1^(v_i)."""
    bits = 0
    for weight in v:
        bits = (bits << v.L) | ((1 << weight) - 1)
    return Word(bits, v.m, v.L)


def _require_cap(what: str, requested: int, cap: int) -> None:
    if requested > cap:
        raise DeskCapExceededError(what, requested, cap)


def _subblock_patterns(family: CodeFamily, L: int, w: int) -> list[int]:
    if family is CodeFamily.CSCC:
        return [p for p in range(1 << L) if popcount(p) == w]
    return [p for p in range(1 << L) if popcount(p) >= w]


def enumerate_space(
    family: Union[CodeFamily, str],
    m: int,
    L: int,
    w: int,
    config: Optional[BoundsConfig] = None,
) -> list[Word]:
    """Every word of C(m, L, w) or S(m, L, w), in numeric order."""
    config = config or default_config
    family = CodeFamily(family)
    if m < 1 or L < 1 or not 0 <= w <= L:
        raise InvalidParameterError(f"invalid space m={m}, L={L}, w={w}")
    _require_cap("word length mL", m * L, config.max_enumeration_length)

    patterns = _subblock_patterns(family, L, w)
    words = []
    for blocks in itertools.product(patterns, repeat=m):
        bits = 0
        for block in blocks:
            bits = (bits << L) | block
        words.append(Word(bits, m, L))
    return words


def ball_bits(center: int, n: int, t: int) -> Iterator[int]:
    """Every n-bit integer within Hamming distance t of ``center``."""
    for r in range(min(t, n) + 1):
        for flips in itertools.combinations(range(n), r):
            mask = 0
            for position in flips:
                mask |= 1 << position
            yield center ^ mask


def exhaustive_ball_size(
    x: Word, u: WeightProfile, t: int, config: Optional[BoundsConfig] = None
) -> int:
    """Direct count of the words of orbit O_u within distance t of x."""
    config = config or default_config
    if (u.m, u.L) != (x.m, x.L):
        raise InvalidParameterError(
            f"profile {u} does not live over the space of {x} (m={x.m}, L={x.L})"
        )
    _require_cap("word length mL", x.length, config.max_ball_length)
    target = tuple(u.weights)
    count = 0
    for bits in ball_bits(x.bits, x.length, t):
        if tuple(sorted(Word(bits, x.m, x.L).weights(), reverse=True)) == target:
            count += 1
    return count


@dataclass(frozen=True)
class FullLP(CoveringProgram):
    """Covering program over every word: rows are the space, columns its t-neighbourhood."""

    rows: tuple[Word, ...] = ()
    cols: tuple[Word, ...] = ()
    t: int = 0


def full_lp(
    family: Union[CodeFamily, str],
    m: int,
    L: int,
    w: int,
    t: int,
    config: Optional[BoundsConfig] = None,
) -> FullLP:
    """Incidence program d(x, y) <= t over S x T with T the union of the balls."""
    config = config or default_config
    if t < 0:
        raise InvalidParameterError(f"t must be >= 0, got {t}")
    _require_cap("full-LP word length mL", m * L, config.max_full_lp_length)
    space = enumerate_space(family, m, L, w, config)
    n = m * L

    neighbourhood: set[int] = set()
    for x in space:
        neighbourhood.update(ball_bits(x.bits, n, t))
    cols = tuple(Word(bits, m, L) for bits in sorted(neighbourhood))

    matrix = tuple(
        tuple(1 if popcount(x.bits ^ y.bits) <= t else 0 for y in cols) for x in space
    )
    return FullLP(
        matrix=matrix,
        objective=(1,) * len(cols),
        rows=tuple(space),
        cols=cols,
        t=t,
    )
