"""Exact mass values and their text forms.

A mass is either a nonnegative :class:`fractions.Fraction` or positive
infinity (``math.inf``).  Binary floats other than infinity are rejected
everywhere: they would silently launder exactness out of results whose
whole point is exact equality.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

from .errors import InvalidMass, MalformedMass

INFINITY = math.inf

#: What a mass may be after validation.
Mass = Fraction | float


def is_infinite(value: Mass) -> bool:
    return isinstance(value, float) and math.isinf(value)


def as_mass(value) -> Mass:
    """Validate and canonicalize a mass value.

    Accepts Fraction, int, or ``math.inf``.  Floats other than infinity
    are rejected rather than converted.
    """
    if isinstance(value, bool):
        raise InvalidMass(f"not a mass: {value!r}")
    if isinstance(value, float):
        if math.isinf(value) and value > 0:
            return INFINITY
        raise InvalidMass(
            f"binary float {value!r} is not an exact mass; use Fraction or a string"
        )
    if isinstance(value, int):
        value = Fraction(value)
    if isinstance(value, Fraction):
        if value < 0:
            raise InvalidMass(f"negative mass {value}")
        return value
    raise InvalidMass(f"not a mass: {value!r}")


# Grammar for finite mass strings: "p/q", a finite decimal, or either
# followed by '%'.  Signs are not part of the grammar (masses are >= 0).
_BODY = re.compile(r"(?P<num>\d+)\s*/\s*(?P<den>\d+)|(?P<dec>\d+\.\d*|\.\d+|\d+)")


def parse_mass(text: str) -> Fraction:
    """Parse a mass string to an exact nonnegative rational.

    Accepted forms: ``"3/8"``, ``"0.12"``, ``".5"``, ``"75%"``,
    ``"37.5%"``, ``"1/4%"``.  Everything converts exactly; anything else
    raises :class:`MalformedMass` with the position where parsing stopped.
    """
    if not isinstance(text, str):
        raise MalformedMass(repr(text), 0, "mass must be a string")
    body = text.strip()
    offset = len(text) - len(text.lstrip())
    percent = body.endswith("%")
    if percent:
        body = body[:-1].rstrip()
    if not body:
        raise MalformedMass(text, offset, "empty mass")
    match = _BODY.fullmatch(body)
    if match is None:
        probe = _BODY.match(body)
        stop = offset + (probe.end() if probe else 0)
        raise MalformedMass(text, stop)
    if match.group("den") is not None:
        den = int(match.group("den"))
        if den == 0:
            raise MalformedMass(text, offset + match.start("den"), "zero denominator")
        value = Fraction(int(match.group("num")), den)
    else:
        value = Fraction(match.group("dec"))
    if percent:
        value /= 100
    return value


def fraction_string(value: Mass) -> str:
    """Lowest-terms fraction form, e.g. ``"3/8"``, ``"1"``, ``"inf"``."""
    if is_infinite(value):
        return "inf"
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_mass(value: Mass) -> str:
    """Human-readable form: exact fraction plus an approximate percent."""
    if is_infinite(value):
        return "inf"
    return f"{fraction_string(value)} (~{float(value) * 100:.4g}%)"
