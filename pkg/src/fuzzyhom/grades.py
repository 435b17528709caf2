"""Exact membership grades stored as scaled integers.

A grade with ``digits=d`` is the integer ``units`` standing for
``units / 10**d``.  Only min and max are ever applied to grades, so no
rounding can occur once a value has been parsed.
"""

from __future__ import annotations

import functools
import os
from decimal import Decimal, InvalidOperation

from .errors import GradeError, ScaleMismatch

#: Environment variable overriding the default number of decimal digits.
DIGITS_ENV = "FUZZYHOM_DIGITS"
MAX_DIGITS = 15  # keeps 10**digits inside int64


def _default_digits():
    raw = os.environ.get(DIGITS_ENV)
    if raw is None:
        return 6
    try:
        d = int(raw)
    except ValueError:
        raise GradeError(f"{DIGITS_ENV} must be an integer, got {raw!r}") from None
    check_digits(d)
    return d


def check_digits(digits):
    if not isinstance(digits, int) or isinstance(digits, bool) or not 0 <= digits <= MAX_DIGITS:
        raise GradeError(f"digits must be an integer in [0, {MAX_DIGITS}], got {digits!r}")
    return digits


DEFAULT_DIGITS = _default_digits()


def one_units(digits):
    return 10**digits


def parse_units(text, digits=None):
    """Parse a decimal string (or int) into integer units at ``digits`` precision.

    Raises GradeError for non-numeric input, values outside [0, 1] and
    values carrying more precision than the scale can hold exactly.
    """
    if digits is None:
        digits = DEFAULT_DIGITS
    if isinstance(text, bool) or isinstance(text, float):
        raise GradeError(f"grade must be a decimal string, got {type(text).__name__} {text!r}")
    if isinstance(text, int):
        value = Decimal(text)
    elif isinstance(text, str):
        try:
            value = Decimal(text.strip())
        except InvalidOperation:
            raise GradeError(f"not a decimal number: {text!r}") from None
    else:
        raise GradeError(f"grade must be a decimal string, got {type(text).__name__}")
    if not value.is_finite():
        raise GradeError(f"grade must be finite: {text!r}")
    if value < 0 or value > 1:
        raise GradeError(f"grade {text!r} lies outside [0, 1]")
    scaled = value.scaleb(digits)
    if scaled != scaled.to_integral_value():
        raise GradeError(f"grade {text!r} needs more than {digits} decimal digits")
    return int(scaled)


def format_units(units, digits=None):
    """Shortest decimal string for ``units / 10**digits`` ("1", "0.8", "0")."""
    if digits is None:
        digits = DEFAULT_DIGITS
    units = int(units)
    if digits == 0:
        return str(units)
    whole, frac = divmod(units, 10**digits)
    if frac == 0:
        return str(whole)
    return f"{whole}.{frac:0{digits}d}".rstrip("0")


@functools.total_ordering
class Grade:
    """A single exact membership value in [0, 1]."""

    __slots__ = ("units", "digits")

    def __init__(self, units, digits=None):
        if digits is None:
            digits = DEFAULT_DIGITS
        check_digits(digits)
        units = int(units)
        if not 0 <= units <= 10**digits:
            raise GradeError(f"grade units {units} outside [0, 10**{digits}]")
        object.__setattr__(self, "units", units)
        object.__setattr__(self, "digits", digits)

    def __setattr__(self, name, value):
        raise AttributeError("Grade is immutable")

    @classmethod
    def parse(cls, text, digits=None):
        if digits is None:
            digits = DEFAULT_DIGITS
        return cls(parse_units(text, digits), digits)

    @classmethod
    def zero(cls, digits=None):
        return cls(0, digits)

    @classmethod
    def one(cls, digits=None):
        d = DEFAULT_DIGITS if digits is None else digits
        return cls(10**d, d)

    def _check(self, other):
        if not isinstance(other, Grade):
            return NotImplemented
        if other.digits != self.digits:
            raise ScaleMismatch(f"cannot compare grades at scales {self.digits} and {other.digits}")
        return other

    def __eq__(self, other):
        if not isinstance(other, Grade):
            return NotImplemented
        return self.digits == other.digits and self.units == other.units

    def __lt__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return self.units < other.units

    def __hash__(self):
        return hash((self.units, self.digits))

    def __and__(self, other):
        """Meet (minimum)."""
        self._check(other)
        return self if self.units <= other.units else other

    def __or__(self, other):
        """Join (maximum)."""
        self._check(other)
        return self if self.units >= other.units else other

    def to_decimal(self):
        return Decimal(self.units).scaleb(-self.digits)

    def __float__(self):
        return self.units / 10**self.digits

    def __str__(self):
        return format_units(self.units, self.digits)

    def __repr__(self):
        return f"Grade('{self}')"
