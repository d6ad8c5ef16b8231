"""Brute-force ground truth at desk scale."""

from .clique import MaxCliqueSearch, compatibility_graph, exhaustive_code_size, maximum_code
from .compare import OracleComparison, compare_with_oracle
from .space import (
    FullLP,
    Word,
    ball_bits,
    enumerate_space,
    exhaustive_ball_size,
    full_lp,
    representative_word,
)

__all__ = [
    "FullLP",
    "MaxCliqueSearch",
    "OracleComparison",
    "Word",
    "ball_bits",
    "compare_with_oracle",
    "compatibility_graph",
    "enumerate_space",
    "exhaustive_ball_size",
    "exhaustive_code_size",
    "full_lp",
    "maximum_code",
    "representative_word",
]
