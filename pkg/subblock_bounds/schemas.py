from enum import Enum
from fractions import Fraction
from typing import Any, Optional, Union

from pydantic import BaseModel, ConfigDict, Field

from .utils import format_decimal, format_exact, snake_to_camel


class OutputFormat(str, Enum):
    JSON = "json"
    CSV = "csv"
    PLAIN = "plain"


class BoundMethod(str, Enum):
    LP = "lp"
    CLOSED = "closed"
    BOTH = "both"
    GEN = "gen"


class CodeFamily(str, Enum):
    CSCC = "cscc"
    SECC = "secc"


class BoundsBaseModel(BaseModel):
    """Base model for all output models with camelCase alias support"""

    model_config = ConfigDict(
        populate_by_name=True,
        alias_generator=snake_to_camel,
        extra="forbid",
    )


class ExactValue(BoundsBaseModel):
    """
    A bound value carried both exactly and as a display decimal.

    Attributes:
        exact (str): "p/q" (or "p" for integers), never a float.
        decimal (str): Truncated decimal rendering.
    """

    exact: str = Field(..., description="Exact rational as 'p/q'")
    decimal: str = Field(..., description="Truncated decimal rendering")

    @classmethod
    def from_fraction(
        cls, value: Union[Fraction, int], places: int = 3
    ) -> "ExactValue":
        return cls(exact=format_exact(value), decimal=format_decimal(value, places))

    def __str__(self) -> str:
        if self.exact == self.decimal:
            return self.exact
        return f"{self.exact} (≈{self.decimal})"


class BoundResult(BoundsBaseModel):
    """One bound value and the method that produced it."""

    method: BoundMethod
    value: ExactValue
    m0: Optional[int] = Field(
        None, description="Split point chosen by the SECC general bound"
    )


class BoundPayload(BoundsBaseModel):
    family: CodeFamily
    t: int
    results: list[BoundResult]
    agreement: Optional[bool] = Field(
        None, description="Whether LP and closed form agree (only with --method=both)"
    )


class CertificatePayload(BoundsBaseModel):
    """
    Outcome of building and checking a tabulated optimality certificate.

    Attributes:
        table (int): 1 for the w = L-1 family, 2 for the m = 1 family.
        verdict (str): valid, primal-infeasible, dual-infeasible or gap.
        primal_value (ExactValue): Objective value of the primal vector.
        dual_value (ExactValue): Objective value of the dual vector.
        closed_form (ExactValue): The closed form the certificate backs.
        lp_value (Optional[ExactValue]): Reduced-LP optimum, for cross-checking.
    """

    table: int
    verdict: str
    primal_value: ExactValue
    dual_value: ExactValue
    closed_form: ExactValue
    lp_value: Optional[ExactValue] = None


class OraclePayload(BoundsBaseModel):
    family: CodeFamily
    t: int
    reduced_value: ExactValue
    full_value: ExactValue
    code_size: int
    reduction_equal: bool
    bound_valid: bool


class RateTablePayload(BoundsBaseModel):
    family: CodeFamily
    columns: list[str]
    rows: list[dict[str, Optional[Union[int, float]]]]


class OutputEnvelope(BoundsBaseModel):
    """Everything a command writes to stdout."""

    command: str
    version: str
    parameters: dict[str, Any]
    payload: Union[BoundPayload, CertificatePayload, OraclePayload, RateTablePayload]
