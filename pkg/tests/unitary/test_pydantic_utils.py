"""
Module testing exact rational fields
"""
from fractions import Fraction

from pydantic import ValidationError

from redraw_core import CustomFrozen
from redraw_core import format_rational
from redraw_core import parse_rational
from redraw_core import SafeTestCase
from redraw_core.pydantic_utils import Rational


class Offset(CustomFrozen):
    """
    Model holding one exact rational
    """
    value: Rational


class PydanticUtilsTest(SafeTestCase):
    """
    Class testing exact rational fields
    """

    def test_parse_rational(self):
        """
        Integers, fractions and num/den strings are accepted, floats refused
        """
        self.assertEqual(parse_rational(3), Fraction(3))
        self.assertEqual(parse_rational('-2/6'), Fraction(-1, 3))
        self.assertEqual(parse_rational(' 7 '), Fraction(7))
        self.assertEqual(parse_rational(Fraction(1, 2)), Fraction(1, 2))
        for value in (0.5, '0.5', '1/0', True, 'a/b', None):
            with self.assertRaises(ValueError):
                parse_rational(value)

    def test_format_rational(self):
        """
        Canonical text of rationals
        """
        self.assertEqual(format_rational(Fraction(4, 2)), '2')
        self.assertEqual(format_rational(Fraction(-2, 3)), '-2/3')

    def test_rational_field(self):
        """
        Models validate and dump rationals exactly, and are frozen
        """
        offset = Offset(value='3/9')
        self.assertEqual(offset.value, Fraction(1, 3))
        self.assertEqual(offset.model_dump(mode='json'), {'value': '1/3'})
        with self.assertRaises(ValidationError):
            Offset(value=0.25)
        with self.assertRaises(ValidationError):
            offset.value = Fraction(1)
