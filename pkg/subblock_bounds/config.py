import os
from collections.abc import Mapping
from typing import Any, Callable, Optional

from pydantic import BaseModel, ConfigDict, Field

from .types.errors import InvalidParameterError

MAX_DESK_ENV = "SUBBLOCK_BOUNDS_MAX_DESK"


class BoundsConfig(BaseModel):
    """
    Configuration for bound computations and the command-line surface.

    Attributes:
        verbose (int): Verbosity level for logs (0=error, 1=info, 2=debug).
        logger (Optional[Callable[[Any], None]]): Custom logging function.
        use_rich_logging (bool): Whether to use Rich for colorized logging.
        decimal_places (int): Places kept when rendering exact values as decimals.
        max_full_lp_length (int): Largest mL for which the full-space LP is built.
        max_enumeration_length (int): Largest mL for which a code space is listed.
        max_ball_length (int): Largest mL for exhaustive ball counting.
        max_clique_vertices (int): Largest space handed to the clique search.
    """

    verbose: int = Field(
        1,
        description="Verbosity level for logs: 0=minimal (ERROR), 1=medium (INFO), 2=detailed (DEBUG)",
    )
    logger: Optional[Callable[[Any], None]] = Field(
        None, description="Custom logging function"
    )
    use_rich_logging: bool = Field(
        True,
        alias="useRichLogging",
        description="Whether to use Rich for colorized logging",
    )
    decimal_places: int = Field(
        3,
        ge=0,
        alias="decimalPlaces",
        description="Decimal places kept (by truncation) in decimal renderings",
    )
    max_full_lp_length: int = Field(
        10,
        ge=1,
        alias="maxFullLpLength",
        description="Desk-scale cap on mL for the full-space LP",
    )
    max_enumeration_length: int = Field(
        24,
        ge=1,
        alias="maxEnumerationLength",
        description="Desk-scale cap on mL for code-space enumeration",
    )
    max_ball_length: int = Field(
        20,
        ge=1,
        alias="maxBallLength",
        description="Desk-scale cap on mL for exhaustive ball counting",
    )
    max_clique_vertices: int = Field(
        16384,
        ge=1,
        alias="maxCliqueVertices",
        description="Desk-scale cap on the space size for maximum-code search",
    )

    model_config = ConfigDict(populate_by_name=True)

    def with_overrides(self, **overrides) -> "BoundsConfig":
        """
        Create a new config instance with the specified overrides.

        Args:
            **overrides: Key-value pairs to override in the config

        Returns:
            BoundsConfig: New config instance with overrides applied
        """
        config_dict = self.model_dump()
        config_dict.update(overrides)
        return BoundsConfig(**config_dict)

    @classmethod
    def from_env(
        cls, environ: Optional[Mapping[str, str]] = None, **overrides
    ) -> "BoundsConfig":
        """
        Build a config whose desk caps honour SUBBLOCK_BOUNDS_MAX_DESK.

        "N" raises the full-LP cap to N and the enumeration cap to max(N, 24);
        "N,M" sets them separately.
        """
        env = os.environ if environ is None else environ
        raw = env.get(MAX_DESK_ENV, "").strip()
        if raw:
            overrides = {**_parse_max_desk(raw), **overrides}
        return cls(**overrides)


def _parse_max_desk(raw: str) -> dict[str, int]:
    pieces = [p.strip() for p in raw.split(",")]
    if len(pieces) > 2:
        raise InvalidParameterError(f"{MAX_DESK_ENV}={raw!r}: expected 'N' or 'N,M'")
    try:
        values = [int(p) for p in pieces]
    except ValueError:
        raise InvalidParameterError(
            f"{MAX_DESK_ENV}={raw!r}: caps must be integers"
        ) from None
    if any(v < 1 for v in values):
        raise InvalidParameterError(f"{MAX_DESK_ENV}={raw!r}: caps must be positive")

    full_lp = values[0]
    enumeration = values[1] if len(values) == 2 else max(full_lp, 24)
    return {"max_full_lp_length": full_lp, "max_enumeration_length": enumeration}


# Default configuration instance
default_config = BoundsConfig()
