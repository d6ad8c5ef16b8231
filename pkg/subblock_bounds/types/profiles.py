"""Weight profiles, orbit index sets and partitions."""

from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Optional

from .errors import InvalidParameterError, ProfileMismatchError


@dataclass(frozen=True)
class Partition:
    """An integer partition stored as non-increasing positive parts."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p <= 0 for p in parts):
            raise InvalidParameterError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise InvalidParameterError(f"partition parts must not increase: {parts}")

    @property
    def total(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.parts)) + "}" if self.parts else "∅"


@dataclass(frozen=True)
class PartitionPair:
    """A partition of ``total`` into parts of two kinds."""

    lambda1: Partition = field(default_factory=Partition)
    lambda2: Partition = field(default_factory=Partition)

    @property
    def total(self) -> int:
        return self.lambda1.total + self.lambda2.total

    def __str__(self) -> str:
        return f"({self.lambda1},{self.lambda2})"


@dataclass(frozen=True)
class WeightProfile:
    """
    Sorted subblock weights indexing one orbit of {0,1}^(mL).

    Attributes:
        weights: non-increasing tuple of m weights, each in [0, L]
        L: subblock length
    """

    weights: tuple[int, ...]
    L: int

    def __post_init__(self):
        weights = tuple(int(x) for x in self.weights)
        object.__setattr__(self, "weights", weights)
        if not weights:
            raise InvalidParameterError("a weight profile needs at least one subblock")
        if self.L < 0:
            raise InvalidParameterError(f"subblock length must be >= 0, got {self.L}")
        if any(x < 0 or x > self.L for x in weights):
            raise InvalidParameterError(
                f"weights {list(weights)} must lie in [0, {self.L}]"
            )
        if any(a < b for a, b in zip(weights, weights[1:])):
            raise InvalidParameterError(f"weights {list(weights)} must not increase")

    @classmethod
    def uniform(cls, m: int, L: int, w: int) -> "WeightProfile":
        return cls((w,) * m, L)

    @classmethod
    def from_unsorted(cls, weights: Sequence[int], L: int) -> "WeightProfile":
        return cls(tuple(sorted(weights, reverse=True)), L)

    @property
    def m(self) -> int:
        return len(self.weights)

    def distance(self, other: "WeightProfile") -> int:
        """Smallest Hamming distance between words of the two orbits."""
        self.require_compatible(other)
        return sum(abs(a - b) for a, b in zip(self.weights, other.weights))

    def require_compatible(self, other: "WeightProfile") -> None:
        if self.m != other.m or self.L != other.L:
            raise ProfileMismatchError(
                f"profiles {self} (m={self.m}, L={self.L}) and {other} "
                f"(m={other.m}, L={other.L}) differ in shape"
            )

    def __iter__(self) -> Iterator[int]:
        return iter(self.weights)

    def __len__(self) -> int:
        return len(self.weights)

    def __getitem__(self, i: int) -> int:
        return self.weights[i]

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.weights)) + "]"


class ProfileKind(str, Enum):
    """Defining inequality of an orbit index set."""

    CSCC_BALL = "cscc-ball"
    PROFILE_BALL = "profile-ball"
    SECC_ROWS = "secc-rows"
    SECC_COLS = "secc-cols"


@dataclass(frozen=True)
class OrbitIndexSet:
    """
    An ordered, duplicate-free list of profiles sharing one defining inequality.

    ``w`` is the CSCC weight or the SECC threshold; ``center`` is only used by
    PROFILE_BALL sets.
    """

    profiles: tuple[WeightProfile, ...]
    kind: ProfileKind
    w: int
    t: int = 0
    center: Optional[WeightProfile] = None

    def __post_init__(self):
        profiles = tuple(self.profiles)
        object.__setattr__(self, "profiles", profiles)
        if len(set(profiles)) != len(profiles):
            raise InvalidParameterError("orbit index set contains duplicates")
        if self.kind is ProfileKind.PROFILE_BALL and self.center is None:
            raise InvalidParameterError("a profile ball needs a center")
        for u in profiles:
            if not self._admits(u):
                raise InvalidParameterError(
                    f"profile {u} violates the {self.kind.value} inequality "
                    f"(w={self.w}, t={self.t})"
                )

    def _admits(self, u: WeightProfile) -> bool:
        if self.kind is ProfileKind.CSCC_BALL:
            return sum(abs(x - self.w) for x in u) <= self.t
        if self.kind is ProfileKind.PROFILE_BALL:
            return self.center.distance(u) <= self.t
        if self.kind is ProfileKind.SECC_ROWS:
            return min(u) >= self.w
        # distance from u up to the nearest row profile
        return sum(max(0, self.w - x) for x in u) <= self.t

    @cached_property
    def positions(self) -> dict[WeightProfile, int]:
        return {u: i for i, u in enumerate(self.profiles)}

    def index(self, profile: WeightProfile) -> int:
        return self.positions[profile]

    def __contains__(self, profile: object) -> bool:
        return profile in self.positions

    def __iter__(self) -> Iterator[WeightProfile]:
        return iter(self.profiles)

    def __len__(self) -> int:
        return len(self.profiles)

    def __getitem__(self, i: int) -> WeightProfile:
        return self.profiles[i]
