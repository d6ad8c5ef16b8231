import time
from dataclasses import dataclass, field
from enum import Enum


class BoundsFunctionName(str, Enum):
    """Function names for tracking metrics."""

    REDUCED_LP = "reduced_lp"
    FULL_LP = "full_lp"
    CLOSED_FORM = "closed_form"
    CERTIFICATE = "certificate"
    CLIQUE = "clique"
    RATE_TABLE = "rate_table"


@dataclass
class BoundsMetrics:
    """Call counts and elapsed time per function, plus total simplex pivots."""

    calls: dict[str, int] = field(default_factory=dict)
    elapsed_ms: dict[str, int] = field(default_factory=dict)

    total_calls: int = 0
    total_elapsed_ms: int = 0
    total_pivots: int = 0

    def update(
        self, function_name: BoundsFunctionName, elapsed_ms: int, pivots: int = 0
    ) -> None:
        """
        Accumulate one call of ``function_name``.

        Args:
            function_name: The function that produced the measurement
            elapsed_ms: Wall time of the call in milliseconds
            pivots: Simplex pivots spent, when the call solved a program
        """
        key = BoundsFunctionName(function_name).value
        self.calls[key] = self.calls.get(key, 0) + 1
        self.elapsed_ms[key] = self.elapsed_ms.get(key, 0) + elapsed_ms
        self.total_calls += 1
        self.total_elapsed_ms += elapsed_ms
        self.total_pivots += pivots

    def summary(self) -> dict[str, int]:
        """Flat view suitable for a logger's auxiliary data."""
        flat = {f"{name}_calls": count for name, count in sorted(self.calls.items())}
        flat.update(
            {f"{name}_ms": ms for name, ms in sorted(self.elapsed_ms.items())}
        )
        flat["total_pivots"] = self.total_pivots
        flat["total_ms"] = self.total_elapsed_ms
        return flat


def start_timer() -> float:
    """Start timing a computation.

    Returns:
        The start time as a float timestamp.
    """
    return time.perf_counter()


def get_elapsed_ms(start_time: float) -> int:
    """Get elapsed time in milliseconds.

    Args:
        start_time: The timestamp when timing started.

    Returns:
        The elapsed time in milliseconds.
    """
    if start_time == 0:
        return 0
    return int((time.perf_counter() - start_time) * 1000)
