"""
Simple Pydantic wrapper classes around BaseModel for frozen domain objects, and the exact rational
field type shared by all documents
"""
import re
from fractions import Fraction
from typing import Annotated
from typing import Any

from pydantic import BaseModel
from pydantic import ConfigDict
from pydantic import PlainSerializer
from pydantic import PlainValidator

RATIONAL_PATTERN = re.compile(r'^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$')


class Frozen(BaseModel):
    """
    Frozen pydantic configuration, unknown keys rejected
    """
    model_config = ConfigDict(frozen=True, extra='forbid')


class CustomFrozen(Frozen):
    """
    Frozen pydantic configuration for custom types (Fraction, sympy polynomials...)
    """
    model_config = ConfigDict(arbitrary_types_allowed=True)


def parse_rational(value: Any) -> Fraction:
    """
    Strict conversion of an int, a Fraction or a 'num/den' / integer string into a Fraction.
    Floats and decimal strings are refused: every document value must be exact.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise ValueError(f'{value!r} is not an exact rational')
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str) and (match := RATIONAL_PATTERN.match(value)):
        numerator, denominator = match.groups()
        if denominator is not None and int(denominator) == 0:
            raise ValueError(f'{value!r} has a zero denominator')
        return Fraction(int(numerator), int(denominator or 1))
    raise ValueError(f'{value!r} is not an exact rational ("num/den" or integer string expected)')


def format_rational(value: Fraction) -> str:
    """
    Canonical string of a rational: '3', '-2/3'
    """
    value = Fraction(value)
    return str(value.numerator) if value.denominator == 1 else f'{value.numerator}/{value.denominator}'


Rational = Annotated[Fraction, PlainValidator(parse_rational),
                     PlainSerializer(format_rational, return_type=str)]
"""
Exact rational document field: validated with parse_rational, dumped with format_rational
"""
