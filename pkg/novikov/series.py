# coding: utf-8
"""Truncated elements of the Novikov ring and the Novikov field.

A `Series` stores finitely many monomials of a formal Laurent series
together with a *cutoff* degree: every monomial of degree below the cutoff
is represented exactly, nothing is asserted at or above it. A cutoff of
`None` marks an exact series (a Laurent polynomial seen inside the ring).

    >>> chi = DegreeForm.rational(1)
    >>> t = Series.monomial(chi, (1,))
    >>> one = Series.one(chi)
    >>> print((one - t) * (one + t))
    1 - t^2
    >>> print(invert(one - t, 4))
    1 + t + t^2 + t^3 + O(deg 4)

"""

import enum
import fractions
import functools
import heapq
import logging
import math
import typing
from dataclasses import dataclass

from .degree import (
    DegreeForm,
    DegreeValue,
    LatticePoint,
    as_fraction,
    as_lattice_point,
    min_cutoff,
)
from .errors import (
    DimensionMismatch,
    ExactZero,
    NotAUnit,
    NotDivisible,
    PrecisionExhausted,
    ZeroAmbiguity,
)

__all__ = [
    "CoefficientDomain",
    "Series",
    "LeadingData",
    "add",
    "mul",
    "degs",
    "leading",
    "is_unit",
    "invert",
    "divide",
    "euclid_step",
    "reduce",
    "normalize",
    "gcd",
    "lcm",
    "is_laurent_unit",
]

logger = logging.getLogger(__name__)

Coefficient = typing.Union[int, fractions.Fraction]
Window = typing.Union[DegreeValue, int, str, fractions.Fraction]


class CoefficientDomain(enum.Enum):
    """The coefficient ring of a series."""

    INTEGERS = "int"
    RATIONALS = "rat"

    def join(self, other: "CoefficientDomain") -> "CoefficientDomain":
        if CoefficientDomain.RATIONALS in (self, other):
            return CoefficientDomain.RATIONALS
        return CoefficientDomain.INTEGERS


@dataclass(frozen=True)
class LeadingData:
    """The minimal-degree monomial of a nonzero series."""

    exponent: LatticePoint
    coefficient: Coefficient
    valuation: DegreeValue


def _add_exponents(a: LatticePoint, b: LatticePoint) -> LatticePoint:
    return tuple(x + y for x, y in zip(a, b))


def _sub_exponents(a: LatticePoint, b: LatticePoint) -> LatticePoint:
    return tuple(x - y for x, y in zip(a, b))


# --- Series -----------------------------------------------------------------

class Series(object):
    """A truncated formal Laurent series with compact/forward support.

    Arguments:
        form (`~novikov.degree.DegreeForm`): the degree form of the ring.
        terms (`dict` or iterable of pairs): a mapping from exponents
            (tuples of ``q`` integers) to exact coefficients.
        cutoff (`~novikov.degree.DegreeValue`, rational or `None`): the
            degree up to which the series is exactly known, or `None` for
            an exact series.
        domain (`CoefficientDomain`): integer or rational coefficients.

    Raises:
        `TypeError`: when a coefficient is not an exact number.
        `ValueError`: when a stored term is not below the cutoff, or a
            rational coefficient is given to an integer series.

    """

    __slots__ = ("form", "domain", "_terms", "cutoff", "_order")

    def __init__(self, form, terms=(), cutoff=None, domain=CoefficientDomain.INTEGERS):
        if not isinstance(form, DegreeForm):
            raise TypeError("expected DegreeForm, found {}".format(type(form).__name__))
        if not isinstance(domain, CoefficientDomain):
            domain = CoefficientDomain(domain)
        if cutoff is not None:
            cutoff = form.level(cutoff)
        items = terms.items() if isinstance(terms, typing.Mapping) else terms
        stored = {}
        for exponent, coefficient in items:
            exponent = as_lattice_point(exponent, form.q)
            value = as_fraction(coefficient)
            if domain is CoefficientDomain.INTEGERS:
                if value.denominator != 1:
                    raise ValueError("coefficient {} is not an integer".format(value))
                value = value.numerator
            if cutoff is not None and not form.degree_of(exponent) < cutoff:
                raise ValueError("t^{} is not below the cutoff {}".format(exponent, cutoff))
            value += stored.get(exponent, 0)
            if value:
                stored[exponent] = value
            else:
                stored.pop(exponent, None)
        self.form = form
        self.domain = domain
        self._terms = stored
        self.cutoff = cutoff
        self._order = None

    @classmethod
    def _raw(cls, form, domain, terms, cutoff):
        series = cls.__new__(cls)
        series.form = form
        series.domain = domain
        series._terms = terms
        series.cutoff = cutoff
        series._order = None
        return series

    # -- Constructors --------------------------------------------------------

    @classmethod
    def zero(cls, form, domain=CoefficientDomain.INTEGERS, cutoff=None) -> "Series":
        """The zero series, exact unless a cutoff is given."""
        return cls(form, (), cutoff, domain)

    @classmethod
    def one(cls, form, domain=CoefficientDomain.INTEGERS) -> "Series":
        return cls._raw(form, domain, {form.origin(): 1}, None)

    @classmethod
    def monomial(cls, form, exponent, coefficient=1, domain=CoefficientDomain.INTEGERS) -> "Series":
        """The exact monomial ``coefficient * t^exponent``."""
        return cls(form, {tuple(exponent): coefficient}, None, domain)

    @classmethod
    def constant(cls, form, value, domain=CoefficientDomain.INTEGERS) -> "Series":
        return cls(form, {form.origin(): value}, None, domain)

    @classmethod
    def from_terms(cls, form, terms, cutoff=None, domain=CoefficientDomain.INTEGERS) -> "Series":
        """Build a series from ``(exponent, coefficient)`` pairs."""
        return cls(form, list(terms), cutoff, domain)

    # -- Accessors -----------------------------------------------------------

    @property
    def terms(self) -> typing.Dict[LatticePoint, Coefficient]:
        """`dict`: a copy of the stored monomials."""
        return dict(self._terms)

    def exponents(self) -> typing.Tuple[LatticePoint, ...]:
        """Return the stored exponents sorted by increasing degree."""
        if self._order is None:
            self._order = tuple(sorted(self._terms, key=self.form.degree_of))
        return self._order

    def items(self) -> typing.Iterator[typing.Tuple[LatticePoint, Coefficient]]:
        """Iterate over ``(exponent, coefficient)`` pairs by increasing degree."""
        return ((e, self._terms[e]) for e in self.exponents())

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(self.exponents())

    def __contains__(self, exponent):
        return tuple(exponent) in self._terms

    def is_exact(self) -> bool:
        """Whether the series is known in every degree."""
        return self.cutoff is None

    def is_zero(self) -> bool:
        """Whether the series is the exact zero."""
        return not self._terms and self.cutoff is None

    def is_ambiguous_zero(self) -> bool:
        """Whether no term is stored although the series is truncated."""
        return not self._terms and self.cutoff is not None

    def is_zero_through(self, window: Window) -> bool:
        """Whether the series certifiably vanishes in every degree below ``window``."""
        window = self.form.level(window)
        if self.cutoff is not None and self.cutoff < window:
            return False
        return all(not self.form.degree_of(e) < window for e in self._terms)

    def coefficient(self, exponent) -> Coefficient:
        """Return the coefficient of ``t^exponent``.

        Raises:
            `~novikov.errors.PrecisionExhausted`: when the monomial is not
                below the cutoff.

        """
        exponent = as_lattice_point(exponent, self.form.q)
        if self.cutoff is not None and not self.form.degree_of(exponent) < self.cutoff:
            raise PrecisionExhausted(
                "t^{} is not below the cutoff {}".format(exponent, self.cutoff)
            )
        return self._terms.get(exponent, 0)

    def leading(self) -> LeadingData:
        return leading(self)

    def valuation(self) -> DegreeValue:
        """Return the degree of the leading monomial."""
        return leading(self).valuation

    def degs(self) -> typing.List[DegreeValue]:
        return degs(self)

    # -- Conversions ---------------------------------------------------------

    def to_rationals(self) -> "Series":
        """Return the same series seen inside the Novikov field."""
        if self.domain is CoefficientDomain.RATIONALS:
            return self
        terms = {e: fractions.Fraction(c) for e, c in self._terms.items()}
        return Series._raw(self.form, CoefficientDomain.RATIONALS, terms, self.cutoff)

    def to_integers(self) -> "Series":
        """Return the same series with integer coefficients.

        Raises:
            `ValueError`: when a coefficient is not an integer.

        """
        if self.domain is CoefficientDomain.INTEGERS:
            return self
        terms = {}
        for e, c in self._terms.items():
            if c.denominator != 1:
                raise ValueError("coefficient {} of t^{} is not an integer".format(c, e))
            terms[e] = c.numerator
        return Series._raw(self.form, CoefficientDomain.INTEGERS, terms, self.cutoff)

    def with_domain(self, domain: CoefficientDomain) -> "Series":
        if domain is CoefficientDomain.RATIONALS:
            return self.to_rationals()
        return self.to_integers()

    def truncate(self, window: Window) -> "Series":
        """Forget every monomial of degree at least ``window``."""
        window = self.form.level(window)
        cutoff = min_cutoff(self.cutoff, window)
        terms = {e: c for e, c in self._terms.items() if self.form.degree_of(e) < cutoff}
        return Series._raw(self.form, self.domain, terms, cutoff)

    restrict_to_window = truncate

    def shift(self, exponent) -> "Series":
        """Multiply by the monomial ``t^exponent``."""
        exponent = as_lattice_point(exponent, self.form.q)
        terms = {_add_exponents(e, exponent): c for e, c in self._terms.items()}
        cutoff = None if self.cutoff is None else self.cutoff + self.form.degree_of(exponent)
        return Series._raw(self.form, self.domain, terms, cutoff)

    def scale(self, factor: Coefficient) -> "Series":
        """Multiply every coefficient by an exact scalar."""
        factor = as_fraction(factor)
        domain = self.domain
        if factor.denominator != 1:
            domain = CoefficientDomain.RATIONALS
        if not factor:
            return Series._raw(self.form, domain, {}, self.cutoff)
        if domain is CoefficientDomain.INTEGERS:
            factor = factor.numerator
        terms = {e: c * factor for e, c in self._terms.items()}
        return Series._raw(self.form, domain, terms, self.cutoff)

    def map_coefficients(self, function: typing.Callable[[Coefficient], Coefficient]) -> "Series":
        """Apply ``function`` to every coefficient, dropping zeros."""
        terms = {}
        for e, c in self._terms.items():
            value = function(c)
            if value:
                terms[e] = value
        return Series._raw(self.form, self.domain, terms, self.cutoff)

    def equal_through(self, other: "Series", window: Window) -> bool:
        """Whether both series agree on every monomial of degree below ``window``."""
        return (self - other).is_zero_through(window)

    # -- Operators -----------------------------------------------------------

    def _coerce(self, other) -> "Series":
        if isinstance(other, Series):
            return other
        if isinstance(other, (int, fractions.Fraction)) and not isinstance(other, bool):
            domain = self.domain
            if fractions.Fraction(other).denominator != 1:
                domain = CoefficientDomain.RATIONALS
            return Series.constant(self.form, other, domain)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return self.map_coefficients(lambda c: -c)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return add(self, -other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return add(other, -self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return mul(self, other)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Series):
            other = self._coerce(other)
            if other is NotImplemented:
                return NotImplemented
        return (
            self.form == other.form
            and self.cutoff == other.cutoff
            and self._terms == other._terms
        )

    def __hash__(self):
        return hash((self.form, self.cutoff, frozenset(self._terms.items())))

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        return "Series({!r})".format(str(self))

    def __str__(self):
        from .io import format_series
        return format_series(self)


# --- Ring operations --------------------------------------------------------

def _check_compatible(alpha: Series, beta: Series) -> CoefficientDomain:
    if alpha.form != beta.form:
        raise DimensionMismatch("series are defined over different degree forms")
    return alpha.domain.join(beta.domain)


def add(alpha: Series, beta: Series) -> Series:
    """Add two series; the cutoff of the sum is the smaller cutoff.

    Example:
        >>> chi = DegreeForm.rational(1)
        >>> a = Series(chi, {(0,): 1, (1,): 1}, cutoff=3)
        >>> b = Series(chi, {(1,): 1}, cutoff=2)
        >>> print(add(a, b))
        1 + 2*t + O(deg 2)

    """
    domain = _check_compatible(alpha, beta)
    alpha, beta = alpha.with_domain(domain), beta.with_domain(domain)
    cutoff = min_cutoff(alpha.cutoff, beta.cutoff)
    terms = dict(alpha._terms)
    for e, c in beta._terms.items():
        value = terms.get(e, 0) + c
        if value:
            terms[e] = value
        else:
            del terms[e]
    if cutoff is not None and (alpha.cutoff != cutoff or beta.cutoff != cutoff):
        degree_of = alpha.form.degree_of
        terms = {e: c for e, c in terms.items() if degree_of(e) < cutoff}
    return Series._raw(alpha.form, domain, terms, cutoff)


def _valuation_or_raise(series: Series) -> DegreeValue:
    if series.is_ambiguous_zero():
        raise ZeroAmbiguity(
            "series has no term below its cutoff {}: its valuation is unknown".format(series.cutoff)
        )
    return leading(series).valuation


def mul(alpha: Series, beta: Series) -> Series:
    """Multiply two series with the Cauchy product.

    The product is certified below
    ``min(cutoff(alpha) + val(beta), cutoff(beta) + val(alpha))``.

    Raises:
        `~novikov.errors.ZeroAmbiguity`: when a factor has no stored term
            but a finite cutoff, and the other factor is not exactly zero.

    Example:
        >>> chi = DegreeForm.rational(1)
        >>> g = Series(chi, {(k,): 1 for k in range(5)}, cutoff=5)
        >>> print(mul(g, Series(chi, {(0,): 1, (1,): -1})))
        1 + O(deg 5)

    """
    domain = _check_compatible(alpha, beta)
    form = alpha.form
    if alpha.is_zero() or beta.is_zero():
        return Series._raw(form, domain, {}, None)
    val_a = _valuation_or_raise(alpha)
    val_b = _valuation_or_raise(beta)
    cutoff = min_cutoff(
        None if alpha.cutoff is None else alpha.cutoff + val_b,
        None if beta.cutoff is None else beta.cutoff + val_a,
    )
    degree_of = form.degree_of
    terms: typing.Dict[LatticePoint, Coefficient] = {}
    right = [(e, c, degree_of(e)) for e, c in beta.items()]
    for ea, ca in alpha.items():
        da = degree_of(ea)
        if cutoff is not None and not da + val_b < cutoff:
            break
        for eb, cb, db in right:
            if cutoff is not None and not da + db < cutoff:
                break
            e = _add_exponents(ea, eb)
            value = terms.get(e, 0) + ca * cb
            if value:
                terms[e] = value
            else:
                del terms[e]
    if domain is CoefficientDomain.RATIONALS:
        terms = {e: fractions.Fraction(c) for e, c in terms.items()}
    return Series._raw(form, domain, terms, cutoff)


def degs(alpha: Series) -> typing.List[DegreeValue]:
    """Return the degrees of the stored monomials, strictly increasing.

    Example:
        >>> chi = DegreeForm.rational(1)
        >>> [str(d) for d in degs(Series(chi, {(-1,): 2, (0,): 3, (1,): 1}))]
        ['-1', '0', '1']

    """
    return [alpha.form.degree_of(e) for e in alpha.exponents()]


def leading(alpha: Series) -> LeadingData:
    """Return the minimal-degree stored monomial of ``alpha``.

    Raises:
        `~novikov.errors.ExactZero`: when ``alpha`` is the exact zero.
        `~novikov.errors.ZeroAmbiguity`: when no term is stored below a
            finite cutoff.

    """
    if not alpha._terms:
        if alpha.cutoff is None:
            raise ExactZero("the zero series has no leading monomial")
        raise ZeroAmbiguity(
            "series has no term below its cutoff {}: its leading monomial is unknown".format(alpha.cutoff)
        )
    exponent = alpha.exponents()[0]
    return LeadingData(exponent, alpha._terms[exponent], alpha.form.degree_of(exponent))


def _norm(alpha: Series) -> Coefficient:
    """The Euclidean norm: ``|l(alpha)|`` over Z, 1 over Q, 0 for zero."""
    if alpha.is_zero():
        return 0
    if alpha.domain is CoefficientDomain.RATIONALS:
        return 1
    return abs(leading(alpha).coefficient)


def is_unit(alpha: Series) -> bool:
    """Whether ``alpha`` is invertible, i.e. its leading coefficient is.

    Example:
        >>> chi = DegreeForm.rational(1)
        >>> is_unit(Series(chi, {(0,): 1, (1,): -1}))
        True
        >>> is_unit(Series(chi, {(0,): 2, (1,): 1}))
        False
        >>> is_unit(Series(chi, {(0,): 2, (1,): 1}).to_rationals())
        True

    """
    if alpha.is_zero():
        return False
    coefficient = leading(alpha).coefficient
    if alpha.domain is CoefficientDomain.RATIONALS:
        return coefficient != 0
    return abs(coefficient) == 1


def invert(alpha: Series, window: Window) -> Series:
    """Invert a unit with the geometric series.

    Writes ``alpha = a t^A (1 - beta)`` with ``deg beta > 0`` and sums the
    powers of ``beta`` until they vanish below the window, so that
    ``alpha * invert(alpha, M)`` equals 1 in every degree below ``M``.

    Raises:
        `~novikov.errors.NotAUnit`: when the leading coefficient is not
            invertible.
        `~novikov.errors.PrecisionExhausted`: when ``alpha`` is not known
            far enough to fill the requested window.

    """
    form = alpha.form
    window = form.level(window)
    if not is_unit(alpha):
        raise NotAUnit(leading(alpha).coefficient if alpha else 0)
    lead = leading(alpha)
    domain = alpha.domain
    if domain is CoefficientDomain.RATIONALS:
        inverse_coefficient = 1 / fractions.Fraction(lead.coefficient)
    else:
        inverse_coefficient = lead.coefficient
    negated = tuple(-x for x in lead.exponent)
    if len(alpha) == 1 and alpha.cutoff is None:
        return Series._raw(form, domain, {negated: inverse_coefficient}, None)
    if alpha.cutoff is not None and alpha.cutoff - lead.valuation < window:
        raise PrecisionExhausted(
            "series known below {} cannot be inverted through degree {}".format(alpha.cutoff, window)
        )
    # alpha = a t^A (1 - beta)
    beta = alpha.shift(negated).scale(inverse_coefficient)
    beta = (Series.one(form, domain) - beta).truncate(window)
    total = Series.one(form, domain).truncate(window)
    power = total
    steps = 0
    # beta vanishing below the window leaves the leading monomial alone
    while power and beta:
        power = mul(power, beta).truncate(window)
        total = add(total, power)
        steps += 1
    logger.debug("geometric series for %s converged after %d step(s)", alpha, steps)
    return total.scale(inverse_coefficient).shift(negated)


def divide(gamma: Series, alpha: Series, window: Window) -> Series:
    """Divide ``gamma`` by ``alpha`` by cancelling leading monomials.

    Each step takes the leading term of the current error
    ``gamma_k = gamma - (beta_0 + ... + beta_{k-1}) alpha`` and divides it
    by the leading term of ``alpha``. The quotient satisfies
    ``divide(gamma, alpha, M) * alpha == gamma`` below degree ``M``; it is
    exact when both operands are exact and the iteration terminates.

    Raises:
        `ZeroDivisionError`: when ``alpha`` is the exact zero.
        `~novikov.errors.NotDivisible`: over Z, when a step's leading
            coefficient is not divisible by ``l(alpha)``.
        `~novikov.errors.PrecisionExhausted`: when the operands are not
            known far enough to fill the window.

    Example:
        >>> chi = DegreeForm.rational(1)
        >>> one, t = Series.one(chi), Series.monomial(chi, (1,))
        >>> print(divide(one - t * t, one - t, 10))
        1 + t
        >>> print(divide(one, one - t, 4))
        1 + t + t^2 + t^3 + O(deg 4)

    """
    domain = _check_compatible(gamma, alpha)
    gamma, alpha = gamma.with_domain(domain), alpha.with_domain(domain)
    form = alpha.form
    window = form.level(window)
    if alpha.is_zero():
        raise ZeroDivisionError("division by the zero series")
    lead = leading(alpha)
    quotient_window = window - lead.valuation

    if gamma.is_zero():
        return Series._raw(form, domain, {}, None)
    if gamma.cutoff is not None and gamma.cutoff < window:
        raise PrecisionExhausted(
            "dividend known below {} cannot be divided through degree {}".format(gamma.cutoff, window)
        )
    if gamma.is_ambiguous_zero():
        return Series._raw(form, domain, {}, quotient_window)
    if alpha.cutoff is not None and alpha.cutoff + leading(gamma).valuation - lead.valuation < window:
        raise PrecisionExhausted(
            "divisor known below {} cannot be used through degree {}".format(alpha.cutoff, window)
        )

    exact = gamma.cutoff is None and alpha.cutoff is None
    degree_of = form.degree_of
    divisor = list(alpha.items())
    remainder = {e: c for e, c in gamma._terms.items() if exact or degree_of(e) < window}
    heap = [(degree_of(e), e) for e in remainder]
    heapq.heapify(heap)
    quotient: typing.Dict[LatticePoint, Coefficient] = {}

    step = 0
    while heap:
        degree, exponent = heap[0]
        if not degree < window:
            break
        heapq.heappop(heap)
        coefficient = remainder.get(exponent)
        if coefficient is None:
            continue
        if domain is CoefficientDomain.INTEGERS:
            b, r = divmod(coefficient, lead.coefficient)
            if r:
                raise NotDivisible(step, exponent, coefficient, lead.coefficient)
        else:
            b = coefficient / lead.coefficient
        shift = _sub_exponents(exponent, lead.exponent)
        quotient[shift] = b
        for e, a in divisor:
            n = _add_exponents(shift, e)
            value = remainder.get(n, 0) - b * a
            if value:
                if n not in remainder:
                    d = degree_of(n)
                    if not exact and not d < window:
                        continue
                    heapq.heappush(heap, (d, n))
                remainder[n] = value
            else:
                remainder.pop(n, None)
        step += 1

    logger.debug("division finished after %d step(s), %d term(s) left", step, len(remainder))
    if exact and not remainder:
        return Series._raw(form, domain, quotient, None)
    return Series._raw(form, domain, quotient, quotient_window)


def euclid_step(gamma: Series, alpha: Series) -> typing.Tuple[Series, Series]:
    """Perform one step of Euclidean division by ``alpha``.

    The leading coefficient of ``gamma`` is divided by the one of
    ``alpha`` with remainder, ``l(gamma) = b l(alpha) + r`` with
    ``|r| < |l(alpha)|``, and the quotient monomial ``b t^B`` aligns the
    leading exponents. The remainder ``gamma - b t^B alpha`` either
    vanishes, has a smaller norm, or has a larger degree.

    Example:
        >>> chi = DegreeForm.rational(1)
        >>> one, t = Series.one(chi), Series.monomial(chi, (1,))
        >>> q, r = euclid_step(3 + t, Series.constant(chi, 2))
        >>> print(q, r, sep=", ")
        1, 1 + t
        >>> q, r = euclid_step(t, one - t)
        >>> print(q, r, sep=", ")
        t, t^2

    """
    domain = _check_compatible(gamma, alpha)
    gamma, alpha = gamma.with_domain(domain), alpha.with_domain(domain)
    lg, la = leading(gamma), leading(alpha)
    if domain is CoefficientDomain.INTEGERS:
        b = lg.coefficient // la.coefficient
        if abs(lg.coefficient - b * la.coefficient) >= abs(la.coefficient):
            b += 1 if la.coefficient > 0 else -1
    else:
        b = lg.coefficient / la.coefficient
    if not b:
        return Series._raw(gamma.form, domain, {}, None), gamma
    quotient = Series._raw(gamma.form, domain, {_sub_exponents(lg.exponent, la.exponent): b}, None)
    return quotient, add(gamma, -mul(quotient, alpha))


def reduce(gamma: Series, alpha: Series, window: Window) -> typing.Tuple[Series, Series]:
    """Divide with remainder by iterating `euclid_step`.

    Stops as soon as the remainder vanishes below ``window`` or has a
    norm smaller than ``|l(alpha)|``.

    Returns:
        `tuple`: the quotient and the remainder, with
        ``gamma == quotient * alpha + remainder``.

    """
    form = gamma.form
    window = form.level(window)
    norm = _norm(alpha)
    quotient = Series.zero(form, gamma.domain.join(alpha.domain))
    remainder = gamma
    steps = 0
    while not remainder.is_zero() and not remainder.is_zero_through(window):
        if _norm(remainder) < norm:
            break
        step, remainder = euclid_step(remainder, alpha)
        quotient = add(quotient, step)
        steps += 1
    if not remainder.is_zero() and remainder.is_zero_through(window):
        remainder = remainder.truncate(window)
    logger.debug("euclidean reduction took %d step(s)", steps)
    return quotient, remainder


def normalize(alpha: Series, window: Window) -> Series:
    """Return the canonical generator of the ideal spanned by ``alpha``.

    Units normalize to exactly 1, and over the integers a series of the
    form ``c * unit`` normalizes to exactly ``|c|``. Otherwise the leading
    exponent is moved to the origin, the leading coefficient ``l`` is made
    positive, and every further coefficient is brought into ``[0, l)`` by
    multiplying with units ``1 - k t^e``, through ``window``.

    Example:
        >>> chi = DegreeForm.rational(1)
        >>> t = Series.monomial(chi, (1,))
        >>> print(normalize(2 - 2 * t, 10))
        2
        >>> print(normalize(-t * (2 + t), 10))
        2 + t
        >>> print(normalize(1 - t, 10))
        1

    """
    form = alpha.form
    window = form.level(window)
    domain = alpha.domain
    if alpha.is_zero():
        return alpha
    lead = leading(alpha)
    if is_unit(alpha):
        return Series.one(form, domain)
    sign = 1 if lead.coefficient > 0 else -1
    negated = tuple(-x for x in lead.exponent)
    beta = alpha.shift(negated).scale(sign)
    l = abs(lead.coefficient)
    if beta.is_exact():
        content = functools.reduce(math.gcd, beta._terms.values(), 0)
        if content == l:
            return Series.constant(form, l, domain)
    cutoff = min_cutoff(beta.cutoff, window)
    exact = beta.cutoff is None
    degree_of = form.degree_of
    origin = form.origin()
    terms = dict(beta._terms)
    heap = [(degree_of(e), e) for e in terms if e != origin]
    heapq.heapify(heap)
    while heap:
        degree, exponent = heap[0]
        if not degree < cutoff:
            break
        heapq.heappop(heap)
        coefficient = terms.get(exponent)
        if coefficient is None:
            continue
        k = coefficient // l
        if not k:
            continue
        for e, c in list(terms.items()):
            n = _add_exponents(e, exponent)
            value = terms.get(n, 0) - k * c
            if value:
                if n not in terms:
                    d = degree_of(n)
                    if not exact and not d < cutoff:
                        continue
                    heapq.heappush(heap, (d, n))
                terms[n] = value
            else:
                terms.pop(n, None)
    if exact and all(0 <= c < l for e, c in terms.items() if e != origin):
        return Series._raw(form, domain, terms, None)
    return Series._raw(form, domain, terms, None).truncate(cutoff)


def gcd(alpha: Series, beta: Series, window: Window) -> Series:
    """Compute a normalized greatest common divisor with Euclid's algorithm.

    Raises:
        `ValueError`: when both series are exactly zero.

    Example:
        >>> chi = DegreeForm.rational(1)
        >>> t = Series.monomial(chi, (1,))
        >>> print(gcd(2 - 2 * t, Series.constant(chi, 4), 10))
        2

    """
    _check_compatible(alpha, beta)
    window = alpha.form.level(window)
    if alpha.is_zero() and beta.is_zero():
        raise ValueError("gcd of two zero series is undefined")
    if any(x and is_unit(x) for x in (alpha, beta)):
        return Series.one(alpha.form, alpha.domain.join(beta.domain))
    a, b = alpha, beta
    while not (b.is_zero() or b.is_zero_through(window)):
        if a.is_zero() or a.is_zero_through(window):
            a, b = b, a
            continue
        _, r = reduce(a, b, window)
        a, b = b, r
    return normalize(a, window)


def lcm(alpha: Series, beta: Series, window: Window) -> Series:
    """Compute a normalized least common multiple of two nonzero series."""
    window = alpha.form.level(window)
    g = gcd(alpha, beta, window)
    return normalize(mul(divide(alpha, g, window), beta), window)


def is_laurent_unit(alpha: Series) -> bool:
    """Whether ``alpha`` is a unit of the Laurent polynomial ring.

    Those are the exact monomials with invertible coefficient; ``1 - t``
    is a unit of the Novikov ring but not of the Laurent polynomials.
    """
    if not alpha.is_exact() or len(alpha) != 1:
        return False
    (coefficient,) = alpha._terms.values()
    if alpha.domain is CoefficientDomain.RATIONALS:
        return True
    return abs(coefficient) == 1
