# coding: utf-8
"""Exact degrees for the period homomorphism of a closed 1-form.

Real periods are written as rational vectors over a `FormalRealBasis`,
a family of reals ``1, b_1, ..., b_r`` assumed linearly independent over
the rationals. Each ``b_k`` comes with a rational enclosure and a list of
refinements, which are used to decide the ordering of degrees without
ever rounding:

    >>> xi = FormalRealBasis(["xi"], [[("1.414213", "1.414214")]])
    >>> chi = DegreeForm(xi, [xi.unit(), xi.symbol("xi")])
    >>> d = chi.degree_of((1, 1))
    >>> str(d)
    '1 + xi'
    >>> compare(d, xi.rational(2))
    <Ordering.GREATER: 1>

"""

import enum
import fractions
import functools
import logging
import math
import typing
from dataclasses import dataclass, field

import sympy

from .errors import DimensionMismatch, OrderingUndecidable

__all__ = [
    "FormalRealBasis",
    "DegreeValue",
    "DegreeForm",
    "LatticePoint",
    "SupportSet",
    "SupportClass",
    "Ordering",
    "compare",
    "min_cutoff",
    "classify_support",
    "as_lattice_point",
    "as_fraction",
]

logger = logging.getLogger(__name__)

LatticePoint = typing.Tuple[int, ...]
Interval = typing.Tuple[fractions.Fraction, fractions.Fraction]


def as_fraction(value: typing.Union[int, str, fractions.Fraction]) -> fractions.Fraction:
    """Convert an exact literal to a `~fractions.Fraction`.

    Floats are rejected, since they cannot be represented exactly:

        >>> as_fraction("5/2")
        Fraction(5, 2)
        >>> as_fraction(0.5)
        Traceback (most recent call last):
        ...
        TypeError: expected an exact rational, found float

    """
    if isinstance(value, bool):
        raise TypeError("expected an exact rational, found bool")
    if isinstance(value, (int, fractions.Fraction)):
        return fractions.Fraction(value)
    if isinstance(value, str):
        return fractions.Fraction(value.strip())
    raise TypeError("expected an exact rational, found {}".format(type(value).__name__))


def as_lattice_point(value: typing.Iterable[int], q: int) -> LatticePoint:
    """Validate ``value`` as a point of the lattice Z^q."""
    if isinstance(value, int) and not isinstance(value, bool):
        value = (value,)
    try:
        point = tuple(value)
    except TypeError:
        raise TypeError("expected a sequence of integers, found {}".format(type(value).__name__)) from None
    if not all(isinstance(x, int) and not isinstance(x, bool) for x in point):
        raise TypeError("lattice coordinates must be integers: {!r}".format(point))
    if len(point) != q:
        raise DimensionMismatch("expected a point of Z^{}, found {} coordinate(s)".format(q, len(point)))
    return point


# --- Ordering ---------------------------------------------------------------

class Ordering(enum.IntEnum):
    """The result of `compare`."""

    LESS = -1
    EQUAL = 0
    GREATER = 1


# --- FormalRealBasis --------------------------------------------------------

@dataclass(frozen=True)
class FormalRealBasis:
    """A family of reals ``1, b_1, ..., b_r`` independent over Q.

    Arguments:
        symbols (`list` of `str`): the names of ``b_1, ..., b_r``.
        enclosures (`list` of `list` of intervals): for each symbol, a
            non-empty list of rational intervals ``(lo, hi)`` with
            ``0 < lo <= hi``, each contained in the previous one.

    Independence is trusted; a violation shows up as an
    `~novikov.errors.OrderingUndecidable` error when two equal reals
    written differently are compared.
    """

    symbols: typing.Tuple[str, ...] = ()
    enclosures: typing.Tuple[typing.Tuple[Interval, ...], ...] = ()

    def __init__(self, symbols=(), enclosures=()):
        symbols = tuple(symbols)
        if not all(isinstance(s, str) and s for s in symbols):
            raise TypeError("basis symbols must be non-empty strings")
        if len(set(symbols)) != len(symbols) or "1" in symbols:
            raise ValueError("basis symbols must be distinct and differ from '1'")
        enclosures = tuple(
            tuple((as_fraction(lo), as_fraction(hi)) for lo, hi in refinements)
            for refinements in enclosures
        )
        if len(enclosures) != len(symbols):
            raise DimensionMismatch(
                "{} symbol(s) but {} enclosure list(s)".format(len(symbols), len(enclosures))
            )
        for name, refinements in zip(symbols, enclosures):
            if not refinements:
                raise ValueError("no enclosure declared for {!r}".format(name))
            previous = None
            for lo, hi in refinements:
                if not 0 < lo <= hi:
                    raise ValueError("invalid enclosure [{}, {}] for {!r}".format(lo, hi, name))
                if previous is not None and not (previous[0] <= lo and hi <= previous[1]):
                    raise ValueError("refinement [{}, {}] of {!r} is not nested".format(lo, hi, name))
                previous = (lo, hi)
        object.__setattr__(self, "symbols", symbols)
        object.__setattr__(self, "enclosures", enclosures)
        object.__setattr__(self, "_hash", hash((symbols, enclosures)))

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "FormalRealBasis({!r}, {!r})".format(
            list(self.symbols),
            [[(str(lo), str(hi)) for lo, hi in r] for r in self.enclosures],
        )

    @property
    def rank(self) -> int:
        """`int`: the number ``r`` of irrational basis elements."""
        return len(self.symbols)

    @property
    def depth(self) -> int:
        """`int`: the number of refinement levels available to `compare`."""
        return max((len(r) for r in self.enclosures), default=1)

    def interval(self, k: int, level: int) -> Interval:
        """Return the enclosure of ``b_k`` at the given refinement level."""
        if k == 0:
            return (fractions.Fraction(1), fractions.Fraction(1))
        refinements = self.enclosures[k - 1]
        return refinements[min(level, len(refinements) - 1)]

    def rational(self, value) -> "DegreeValue":
        """Return the rational number ``value`` as a degree."""
        return DegreeValue(self, (as_fraction(value),) + (fractions.Fraction(0),) * self.rank)

    def unit(self) -> "DegreeValue":
        """Return the basis element ``b_0 = 1``."""
        return self.rational(1)

    def zero(self) -> "DegreeValue":
        return self.rational(0)

    def symbol(self, name: str) -> "DegreeValue":
        """Return the basis element named ``name``."""
        try:
            k = self.symbols.index(name)
        except ValueError:
            raise KeyError(name) from None
        coeffs = [fractions.Fraction(0)] * (self.rank + 1)
        coeffs[k + 1] = fractions.Fraction(1)
        return DegreeValue(self, tuple(coeffs))

    def value(self, coeffs: typing.Sequence) -> "DegreeValue":
        """Build a degree from its coordinates ``(c_0, c_1, ..., c_r)``."""
        coeffs = tuple(as_fraction(c) for c in coeffs)
        if len(coeffs) != self.rank + 1:
            raise DimensionMismatch(
                "expected {} coordinate(s), found {}".format(self.rank + 1, len(coeffs))
            )
        return DegreeValue(self, coeffs)


# --- DegreeValue ------------------------------------------------------------

@functools.total_ordering
@dataclass(frozen=True)
class DegreeValue:
    """A real number ``c_0 + c_1 b_1 + ... + c_r b_r`` with rational ``c_k``.

    Equality is exact (componentwise); ordering goes through `compare`.
    """

    basis: FormalRealBasis
    coeffs: typing.Tuple[fractions.Fraction, ...]

    def _check(self, other: "DegreeValue"):
        if not isinstance(other, DegreeValue):
            return NotImplemented
        if other.basis != self.basis:
            raise DimensionMismatch("cannot combine degrees over different bases")
        return None

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return DegreeValue(self.basis, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return DegreeValue(self.basis, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return DegreeValue(self.basis, tuple(-a for a in self.coeffs))

    def __mul__(self, scalar):
        if isinstance(scalar, bool) or not isinstance(scalar, (int, fractions.Fraction)):
            return NotImplemented
        return DegreeValue(self.basis, tuple(a * scalar for a in self.coeffs))

    __rmul__ = __mul__

    def __lt__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return compare(self, other) is Ordering.LESS

    def __str__(self):
        names = ("1",) + self.basis.symbols
        parts = []
        for name, c in zip(names, self.coeffs):
            if c == 0:
                continue
            if name == "1":
                text = str(c)
            elif c == 1:
                text = name
            elif c == -1:
                text = "-" + name
            else:
                text = "{}*{}".format(c if c.denominator == 1 else "({})".format(c), name)
            parts.append(text)
        if not parts:
            return "0"
        out = parts[0]
        for part in parts[1:]:
            out += " - " + part[1:] if part.startswith("-") else " + " + part
        return out

    def __repr__(self):
        return "DegreeValue({!r})".format(str(self))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def interval(self, level: int = 0) -> Interval:
        """Return a rational enclosure of this degree at a refinement level."""
        return _interval(self, level)


@functools.lru_cache(maxsize=1 << 16)
def _interval(value: DegreeValue, level: int) -> Interval:
    lo = hi = value.coeffs[0]
    for k, c in enumerate(value.coeffs[1:], start=1):
        if c == 0:
            continue
        a, b = value.basis.interval(k, level)
        if c > 0:
            lo += c * a
            hi += c * b
        else:
            lo += c * b
            hi += c * a
    return lo, hi


def compare(a: DegreeValue, b: DegreeValue) -> Ordering:
    """Compare two degrees exactly.

    Equality is decided componentwise. Otherwise the sign of ``a - b`` is
    read from interval enclosures, refining through the declared levels.

    Raises:
        `~novikov.errors.OrderingUndecidable`: when every refinement level
            still gives an interval containing zero.

    Example:
        >>> basis = FormalRealBasis(["xi"], [[("1.414213", "1.414214")]])
        >>> compare(basis.zero(), basis.symbol("xi"))
        <Ordering.LESS: -1>
        >>> compare(basis.rational("5/2"), basis.rational("5/2"))
        <Ordering.EQUAL: 0>

    """
    if a.basis != b.basis:
        raise DimensionMismatch("cannot compare degrees over different bases")
    if not a.basis.symbols:
        x, y = a.coeffs[0], b.coeffs[0]
        return Ordering.EQUAL if x == y else Ordering.LESS if x < y else Ordering.GREATER
    if a.coeffs == b.coeffs:
        return Ordering.EQUAL
    diff = a - b
    if diff.is_rational():
        return Ordering.GREATER if diff.coeffs[0] > 0 else Ordering.LESS
    depth = a.basis.depth
    for level in range(depth):
        lo, hi = diff.interval(level)
        if lo > 0:
            return Ordering.GREATER
        if hi < 0:
            return Ordering.LESS
        logger.debug("refining enclosure of %s past level %d", diff, level)
    raise OrderingUndecidable(diff, depth)


def min_cutoff(*cutoffs: typing.Optional[DegreeValue]) -> typing.Optional[DegreeValue]:
    """Return the smallest of several cutoffs, `None` standing for +infinity."""
    finite = [c for c in cutoffs if c is not None]
    return min(finite) if finite else None


# --- DegreeForm -------------------------------------------------------------

@dataclass(frozen=True)
class DegreeForm:
    """An injective homomorphism ``chi: Z^q -> R`` given by its periods.

    Periods must be strictly positive and linearly independent over Q,
    which is checked with exact rational linear algebra. ``q = 0`` is
    allowed and stands for the compact Morse case, where the Novikov ring
    is just Z.

    Example:
        >>> chi = DegreeForm.rational(1)
        >>> chi.q
        1
        >>> str(chi.degree_of((3,)))
        '3'
        >>> DegreeForm.rational(1, 2)
        Traceback (most recent call last):
        ...
        ValueError: periods are not linearly independent over Q: chi is not injective

    """

    basis: FormalRealBasis
    periods: typing.Tuple[DegreeValue, ...] = field(default=())

    def __post_init__(self):
        periods = tuple(self.periods)
        object.__setattr__(self, "periods", periods)
        for p in periods:
            if not isinstance(p, DegreeValue):
                raise TypeError("periods must be DegreeValue instances")
            if p.basis != self.basis:
                raise DimensionMismatch("period {} is not written over the form basis".format(p))
            if compare(p, self.basis.zero()) is not Ordering.GREATER:
                raise ValueError("period {} is not strictly positive".format(p))
        if periods:
            rank = sympy.Matrix([[sympy.Rational(c.numerator, c.denominator) for c in p.coeffs] for p in periods]).rank()
            if rank != len(periods):
                raise ValueError("periods are not linearly independent over Q: chi is not injective")
        object.__setattr__(self, "_hash", hash((self.basis, periods)))

    def __hash__(self):
        return self._hash

    @classmethod
    def rational(cls, *periods) -> "DegreeForm":
        """Build a form with rational periods over the trivial basis."""
        basis = FormalRealBasis()
        return cls(basis, tuple(basis.rational(p) for p in periods))

    @classmethod
    def standard(cls, q: int) -> "DegreeForm":
        """Build the form with periods ``1, sqrt2, sqrt3, sqrt5, ...``.

        Square roots of the first primes are independent over Q, and
        their decimal enclosures are nested, so every degree of this form
        can be ordered exactly.

        Example:
            >>> chi = DegreeForm.standard(2)
            >>> chi
            DegreeForm(1, sqrt2)
            >>> compare(chi.degree_of((-1, 1)), chi.zero())
            <Ordering.GREATER: 1>

        """
        names, enclosures = [], []
        for k in range(1, q):
            p = int(sympy.prime(k))
            names.append("sqrt{}".format(p))
            enclosures.append([
                (fractions.Fraction(math.isqrt(p * 10 ** (2 * d)), 10 ** d),
                 fractions.Fraction(math.isqrt(p * 10 ** (2 * d)) + 1, 10 ** d))
                for d in (6, 12, 24, 48)
            ])
        basis = FormalRealBasis(names, enclosures)
        periods = [basis.unit()] + [basis.symbol(name) for name in names]
        return cls(basis, tuple(periods[:q]))

    def __repr__(self):
        return "DegreeForm({})".format(", ".join(str(p) for p in self.periods))

    @property
    def q(self) -> int:
        """`int`: the rank of the lattice."""
        return len(self.periods)

    def zero(self) -> DegreeValue:
        return self.basis.zero()

    def origin(self) -> LatticePoint:
        return (0,) * self.q

    def degree_of(self, n: typing.Sequence[int]) -> DegreeValue:
        """Return ``chi(n)`` exactly.

        Raises:
            `~novikov.errors.DimensionMismatch`: when ``n`` is not in Z^q.

        """
        if len(n) != self.q:
            raise DimensionMismatch("expected a point of Z^{}, found {} coordinate(s)".format(self.q, len(n)))
        return _degree_of(self, tuple(n))

    def level(self, value) -> DegreeValue:
        """Coerce a rational literal or a degree to a degree of this form."""
        if isinstance(value, DegreeValue):
            if value.basis != self.basis:
                raise DimensionMismatch("degree {} is not written over the form basis".format(value))
            return value
        return self.basis.rational(value)


@functools.lru_cache(maxsize=1 << 16)
def _degree_of(form: DegreeForm, n: LatticePoint) -> DegreeValue:
    coeffs = [fractions.Fraction(0)] * (form.basis.rank + 1)
    for ni, period in zip(n, form.periods):
        if ni:
            for k, c in enumerate(period.coeffs):
                coeffs[k] += ni * c
    return DegreeValue(form.basis, tuple(coeffs))


# --- Supports ---------------------------------------------------------------

@dataclass(frozen=True)
class SupportSet:
    """A finite window onto a subset of the lattice.

    Attributes:
        points (`frozenset` of `tuple`): the stored lattice points.
        cutoff (`DegreeValue` or `None`): points of degree at least the
            cutoff are unknown; `None` means nothing is missing above.
        floor (`DegreeValue` or `None`): points of degree below the floor
            are unknown; `None` means nothing is missing below.

    """

    points: typing.FrozenSet[LatticePoint] = frozenset()
    cutoff: typing.Optional[DegreeValue] = None
    floor: typing.Optional[DegreeValue] = None

    def __post_init__(self):
        object.__setattr__(self, "points", frozenset(tuple(p) for p in self.points))

    def validate(self, form: DegreeForm) -> None:
        """Check that every stored point lies inside the window."""
        for p in self.points:
            d = form.degree_of(p)
            if self.cutoff is not None and not d < self.cutoff:
                raise ValueError("t^{} has degree {} >= cutoff {}".format(p, d, self.cutoff))
            if self.floor is not None and d < self.floor:
                raise ValueError("t^{} has degree {} < floor {}".format(p, d, self.floor))


@dataclass(frozen=True)
class SupportClass:
    """The support predicates certified for a `SupportSet`."""

    slab_compact: bool
    forward: bool
    compact_forward: bool
    backward: bool
    compact_backward: bool
    low: typing.Optional[DegreeValue]
    high: typing.Optional[DegreeValue]

    @property
    def window(self) -> typing.Tuple[typing.Optional[DegreeValue], typing.Optional[DegreeValue]]:
        """`tuple`: the certified degree window ``[low, high)``."""
        return (self.low, self.high)


def classify_support(support: SupportSet, form: DegreeForm) -> SupportClass:
    """Decide which support families a windowed set certifiably belongs to.

    A stored set is finite, hence slab compact inside its window. It is
    certified forward when nothing is missing below it, and backward when
    nothing is missing above it.

    Example:
        >>> chi = DegreeForm.rational(1)
        >>> c = classify_support(SupportSet({(0,), (1,), (2,)}), chi)
        >>> c.slab_compact, c.forward, c.compact_forward
        (True, True, True)
        >>> str(c.low), c.high
        ('0', None)

    """
    support.validate(form)
    degrees = sorted(form.degree_of(p) for p in support.points)
    forward = support.floor is None
    backward = support.cutoff is None
    if support.floor is not None:
        low = support.floor
    else:
        low = degrees[0] if degrees else None
    return SupportClass(
        slab_compact=True,
        forward=forward,
        compact_forward=forward,
        backward=backward,
        compact_backward=backward,
        low=low,
        high=support.cutoff,
    )
