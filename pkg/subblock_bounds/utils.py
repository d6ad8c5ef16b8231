from decimal import Decimal, InvalidOperation
from fractions import Fraction
from typing import Union

from .types.errors import InvalidParameterError


def snake_to_camel(snake_str: str) -> str:
    """
    Convert a snake_case string to camelCase.

    Args:
        snake_str: The snake_case string to convert

    Returns:
        The converted camelCase string
    """
    components = snake_str.split("_")
    return components[0] + "".join(x.title() for x in components[1:])


def format_exact(value: Union[Fraction, int]) -> str:
    """Render an exact value as "p/q", or "p" when the denominator is 1."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_decimal(value: Union[Fraction, int], places: int = 3) -> str:
    """
    Truncate an exact value toward zero at ``places`` decimals.

    Trailing zeros (and a bare trailing point) are dropped, so 4000752/19
    renders as "210565.894", 83/2 as "41.5" and 2 as "2".
    """
    if places < 0:
        raise InvalidParameterError(f"places must be >= 0, got {places}")
    value = Fraction(value)
    sign = "-" if value < 0 else ""
    scaled = abs(value) * 10**places
    digits = scaled.numerator // scaled.denominator
    whole, frac = divmod(digits, 10**places)
    if places == 0 or frac == 0:
        text = str(whole)
    else:
        text = f"{whole}.{str(frac).rjust(places, '0').rstrip('0')}"
    if text == "0":
        return "0"
    return sign + text


def parse_fraction(text: str) -> Fraction:
    """Parse "0.005", "1/40" or "3" exactly."""
    text = text.strip()
    try:
        if "/" in text:
            return Fraction(text)
        return Fraction(Decimal(text))
    except (ValueError, ZeroDivisionError, InvalidOperation):
        raise InvalidParameterError(f"not a number: {text!r}") from None


def parse_delta_range(spec: str) -> list[Fraction]:
    """
    Expand "start:stop:step" into an exact grid, stop included.

    A start past the stop yields an empty grid.
    """
    pieces = spec.split(":")
    if len(pieces) != 3:
        raise InvalidParameterError(
            f"delta range {spec!r} must look like start:stop:step"
        )
    start, stop, step = (parse_fraction(p) for p in pieces)
    if step <= 0:
        raise InvalidParameterError(f"delta step must be positive, got {pieces[2]}")
    grid = []
    value = start
    while value <= stop:
        grid.append(value)
        value += step
    return grid


def parse_int_list(spec: str) -> list[int]:
    """Parse "10,14" into [10, 14]."""
    try:
        values = [int(p) for p in spec.split(",") if p.strip()]
    except ValueError:
        raise InvalidParameterError(f"expected comma-separated integers, got {spec!r}") from None
    if not values:
        raise InvalidParameterError("expected at least one integer")
    return values
