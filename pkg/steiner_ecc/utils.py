from copy import deepcopy
from decimal import Decimal, ROUND_HALF_EVEN
from fractions import Fraction

import numpy as np


__all__ = (
    "merge",
    "as_fraction",
    "decimal_display",
    "fraction_display",
    "loglog_slope",
)

#: Decimal places kept when rendering an exact rational for display
DISPLAY_PLACES = Decimal("0.000001")


def merge(first, second):
    """
    Recursively merges two dictionaries.

    Second dictionary values will take precedence over those from the first one,
    except ``None`` values which never override.
    Nested dictionaries are merged too.

    :param dict first: The first dictionary
    :param dict second: The second dictionary
    :return: the resulting merged dictionary
    :rtype: dict
    """
    if not isinstance(second, dict):
        return second
    result = deepcopy(first)
    for key, value in second.items():
        if value is None:
            continue
        if key in result and isinstance(result[key], dict):
            result[key] = merge(result[key], value)
        else:
            result[key] = deepcopy(value)
    return result


def as_fraction(value):
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


def decimal_display(value):
    """
    Render an exact rational as a short decimal string.

    Rounded half-even to 6 places, trailing zeros stripped:
    ``Fraction(14, 5)`` gives ``"2.8"`` and ``Fraction(5)`` gives ``"5"``.
    """
    value = as_fraction(value)
    dec = (Decimal(value.numerator) / Decimal(value.denominator)).quantize(
        DISPLAY_PLACES, rounding=ROUND_HALF_EVEN
    )
    text = format(dec, "f")
    if "." in text:
        text = text.rstrip("0").rstrip(".")
    return text


def fraction_display(value):
    """Render ``14/5 (2.8)``; integral values render as ``5 (5)``"""
    value = as_fraction(value)
    return "{0} ({1})".format(value, decimal_display(value))


def loglog_slope(xs, ys):
    """
    Least squares slope of ``log(ys)`` against ``log(xs)``.

    :param list xs: Positive abscissae (input sizes)
    :param list ys: Positive ordinates (timings)
    :rtype: float
    :raises ValueError: with fewer than two points
    """
    if len(xs) != len(ys) or len(xs) < 2:
        raise ValueError("A log-log fit needs at least two (x, y) points")
    slope, _ = np.polyfit(np.log(np.asarray(xs, dtype=float)), np.log(np.asarray(ys, dtype=float)), 1)
    return float(slope)
