# coding: utf-8
"""Exceptions raised by the `novikov` package.

All errors derive from `NovikovError`. Errors that also belong to a
builtin category (value errors, arithmetic errors, syntax errors) inherit
from it as well, so they can be caught either way:

    >>> issubclass(NotAUnit, ArithmeticError)
    True
    >>> issubclass(SchemaError, ValueError)
    True

"""

import typing


class NovikovError(Exception):
    """Base class for every error raised by `novikov`."""


# --- Lattice and degrees ----------------------------------------------------

class DimensionMismatch(NovikovError, ValueError):
    """A lattice point or degree vector has the wrong length."""


class OrderingUndecidable(NovikovError, ArithmeticError):
    """The sign of a degree difference could not be decided.

    Raised when every declared refinement of the basis enclosures still
    gives an interval straddling zero.
    """

    def __init__(self, difference, levels):
        self.difference = difference
        self.levels = levels
        super().__init__(
            "cannot decide the sign of {} after {} refinement level(s)".format(difference, levels)
        )


# --- Series arithmetic ------------------------------------------------------

class ZeroAmbiguity(NovikovError, ArithmeticError):
    """A series has no stored term below a finite cutoff.

    Such a series may be nonzero above its cutoff, so its valuation and
    leading data are unknown.
    """


AmbiguousZero = ZeroAmbiguity


class ExactZero(NovikovError, ArithmeticError):
    """The exact zero series has no leading data."""


class NotAUnit(NovikovError, ArithmeticError):
    """The leading coefficient of a series is not invertible."""

    def __init__(self, leading):
        self.leading = leading
        super().__init__("leading coefficient {} is not a unit".format(leading))


class NotDivisible(NovikovError, ArithmeticError):
    """A step of the division algorithm failed integer divisibility."""

    def __init__(self, step, exponent, coefficient, divisor):
        self.step = step
        self.exponent = exponent
        self.coefficient = coefficient
        self.divisor = divisor
        super().__init__(
            "step {}: coefficient {} of t^{} is not divisible by {}".format(
                step, coefficient, _exponent_text(exponent), divisor
            )
        )


class PrecisionExhausted(NovikovError, ArithmeticError):
    """The operand cutoffs cannot support the requested degree window."""


# --- Cones ------------------------------------------------------------------

class NotConical(NovikovError, ValueError):
    """A support does not fit in any translate of the given cone."""

    def __init__(self, witness, shifts):
        self.witness = witness
        self.shifts = shifts
        super().__init__(
            "t^{} lies outside shift + C(e) for every tested shift ({} tried)".format(
                _exponent_text(witness), len(shifts)
            )
        )


# --- Morse data and complexes -----------------------------------------------

class IndexMismatch(NovikovError, ValueError):
    """A flow line connects critical points whose indices do not differ by 1."""


class DegreeMismatch(NovikovError, ValueError):
    """Two chains do not have complementary degrees."""


class NoSolution(NovikovError, ArithmeticError):
    """No multiple of a cycle is a boundary: the class is not torsion."""


class NotTorsion(NoSolution):
    """A class used in a linking number is not a torsion class."""


# --- Input formats ----------------------------------------------------------

class SchemaError(NovikovError, ValueError):
    """A JSON document does not follow the expected schema.

    Attributes:
        path (str): the path of the offending field, such as
            ``$.flow_lines[3].deck``.

    """

    def __init__(self, path, message):
        self.path = path
        self.message = message
        super().__init__("{}: {}".format(path, message))


class SeriesSyntaxError(NovikovError, SyntaxError):
    """A series literal or expression could not be parsed."""

    def __init__(self, message, text="", offset=0):
        super().__init__(message, ("<expression>", 1, offset + 1, text))
        self.position = offset


def _exponent_text(exponent: typing.Sequence[int]) -> str:
    if len(exponent) == 1:
        return str(exponent[0])
    return "({})".format(",".join(map(str, exponent)))
