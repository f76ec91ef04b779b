"""Exact rational arithmetic for weights, averages, and contractibilities.

All numeric values in this package are ``fractions.Fraction`` instances:
arbitrary precision, always in lowest terms with a positive denominator,
and with exact comparisons. Weight text is parsed straight to a Fraction
(``"0.1"`` becomes 1/10), never through binary floating point, so the
strict comparisons the cut algorithm depends on are never off by an ulp.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import MalformedWeightError, NegativeWeightError

Rational = Fraction

ZERO = Fraction(0)


def parse_weight(text: str) -> Fraction:
    """Parse a weight literal exactly.

    Accepts integer, decimal (``2.50``), and ``p/q`` rational forms with a
    positive denominator. Raises MalformedWeightError for anything else and
    NegativeWeightError for values below zero.
    """
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise MalformedWeightError(f"not a decimal or p/q rational literal: {text!r}") from None
    if value < 0:
        raise NegativeWeightError(f"negative weight: {text!r}")
    return value


def format_rational(value: Fraction) -> str:
    """Render exactly, as an integer or ``p/q``; re-parses to the same value."""
    return str(value)


def decimal_approx(value: Fraction, digits: int = 12) -> str:
    """A ``digits``-significant-digit decimal rendering, for humans.

    The exact ``p/q`` text is the authoritative form; this is a convenience
    companion and is computed by correctly rounded decimal division.
    """
    import decimal

    with decimal.localcontext() as ctx:
        ctx.prec = digits
        return str(decimal.Decimal(value.numerator) / decimal.Decimal(value.denominator))
