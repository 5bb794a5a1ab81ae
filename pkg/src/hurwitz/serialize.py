"""Canonical serialization helpers: exact rationals as strings, deterministic JSON.

Reports and cache files never contain floats; decimal renderings are produced
with integer arithmetic only, and the JSON writer is byte-deterministic so
that emitted documents round-trip identically.
"""

from __future__ import annotations

import json
from fractions import Fraction


def fraction_to_str(value) -> str:
    """"-25" for integers, "9/2" otherwise."""
    f = Fraction(value)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def fraction_from_str(text: str) -> Fraction:
    return Fraction(text)


def canonical_json(obj) -> str:
    """Deterministic JSON: sorted keys, two-space indentation, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def decimal_string(value, digits: int = 12) -> str:
    """Exact scientific-notation rendering of a rational, no floating point.

    The mantissa is rounded half-up to `digits` significant digits.
    """
    f = Fraction(value)
    if f == 0:
        return "0"
    sign = "-" if f < 0 else ""
    num, den = abs(f.numerator), f.denominator

    def below_power(k: int) -> bool:
        # is |f| < 10**k ?
        if k >= 0:
            return num < den * 10**k
        return num * 10 ** (-k) < den

    exponent = len(str(num)) - len(str(den))
    while below_power(exponent):
        exponent -= 1
    while not below_power(exponent + 1):
        exponent += 1

    shift = digits - 1 - exponent
    if shift >= 0:
        scaled_num, scaled_den = num * 10**shift, den
    else:
        scaled_num, scaled_den = num, den * 10 ** (-shift)
    mantissa, remainder = divmod(scaled_num, scaled_den)
    if 2 * remainder >= scaled_den:
        mantissa += 1
    text = str(mantissa)
    if len(text) > digits:  # rounding carried into a new leading digit
        text = text[:digits]
        exponent += 1
    if digits > 1:
        return f"{sign}{text[0]}.{text[1:]}e{exponent:+d}"
    return f"{sign}{text}e{exponent:+d}"
