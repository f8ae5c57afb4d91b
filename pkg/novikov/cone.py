# coding: utf-8
"""Lattice cones and the conical subring of the Novikov ring.

A series is *conical* when its support fits inside a translate of a
finitely generated cone ``C(e)`` on which the degree form is positive.
Membership is decided exactly, by rational linear feasibility:

    >>> e = ConeSpec.standard((1, 0), (1, 2))
    >>> cone_contains(e, (2, 3))
    True
    >>> cone_contains(e, (0, 1))
    False

"""

import fractions
import itertools
import logging
import typing
from dataclasses import dataclass

import sympy

from .degree import (
    DegreeForm,
    LatticePoint,
    Ordering,
    as_lattice_point,
    compare,
)
from .errors import DimensionMismatch, NotAUnit, NotConical
from .series import Series, divide, is_unit

__all__ = [
    "ConeSpec",
    "ConicalCertificate",
    "cone_contains",
    "in_fundamental_domain",
    "fundamental_lattice_points",
    "certify_conical",
    "certify_product",
    "check_conical_quotient",
]

logger = logging.getLogger(__name__)

Fraction = fractions.Fraction


# --- Exact feasibility ------------------------------------------------------

def _pivot(tableau, basis, row, column):
    pivot = tableau[row][column]
    tableau[row] = [v / pivot for v in tableau[row]]
    for i, other in enumerate(tableau):
        if i != row and other[column]:
            factor = other[column]
            tableau[i] = [a - factor * b for a, b in zip(other, tableau[row])]
    basis[row] = column


def _feasible(
    rows: typing.Sequence[typing.Sequence[Fraction]],
    rhs: typing.Sequence[Fraction],
) -> typing.Optional[typing.List[Fraction]]:
    """Find ``x >= 0`` with ``rows . x == rhs``, or return `None`.

    Phase one of the simplex method over exact fractions, with one
    artificial variable per equation and Bland's rule against cycling.
    """
    m = len(rows)
    n = len(rows[0]) if rows else 0
    if m == 0:
        return [Fraction(0)] * n
    tableau = []
    for i, (row, b) in enumerate(zip(rows, rhs)):
        sign = -1 if b < 0 else 1
        artificial = [Fraction(0)] * m
        artificial[i] = Fraction(1)
        tableau.append([sign * Fraction(v) for v in row] + artificial + [sign * Fraction(b)])
    # minimize the sum of artificials: reduced costs are minus the column sums
    objective = [-sum(r[j] for r in tableau) for j in range(n)] + [Fraction(0)] * m
    objective.append(-sum(r[-1] for r in tableau))
    tableau.append(objective)
    basis = [n + i for i in range(m)]

    while True:
        cost = tableau[-1]
        entering = next((j for j in range(n + m) if cost[j] < 0), None)
        if entering is None:
            break
        ratios = [
            (tableau[i][-1] / tableau[i][entering], basis[i], i)
            for i in range(m)
            if tableau[i][entering] > 0
        ]
        if not ratios:
            break
        _, _, leaving = min(ratios)
        _pivot(tableau, basis, leaving, entering)

    if tableau[-1][-1] != 0:
        return None
    solution = [Fraction(0)] * n
    for i, var in enumerate(basis):
        if var < n:
            solution[var] = tableau[i][-1]
    return solution


# --- Cones ------------------------------------------------------------------

@dataclass(frozen=True)
class ConeSpec:
    """A finitely generated lattice cone with generators of positive degree.

    Arguments:
        form (`~novikov.degree.DegreeForm`): the degree form of the lattice.
        generators (`tuple` of `tuple`): the lattice vectors ``e_k``; they
            need not be a basis of the lattice.

    Raises:
        `ValueError`: when some ``chi(e_k)`` is not strictly positive.
        `~novikov.errors.DimensionMismatch`: when a generator is not in Z^q.

    """

    form: DegreeForm
    generators: typing.Tuple[LatticePoint, ...]

    def __post_init__(self):
        generators = tuple(as_lattice_point(e, self.form.q) for e in self.generators)
        object.__setattr__(self, "generators", generators)
        zero = self.form.zero()
        for e in generators:
            if compare(self.form.degree_of(e), zero) is not Ordering.GREATER:
                raise ValueError("generator {} does not have a positive degree".format(e))

    @classmethod
    def standard(cls, *generators) -> "ConeSpec":
        """Build a cone over `DegreeForm.standard` of the generators rank."""
        q = len(generators[0]) if generators else 0
        return cls(DegreeForm.standard(q), tuple(generators))

    @property
    def q(self) -> int:
        return self.form.q

    def is_simplicial(self) -> bool:
        """Whether the generators form a basis of Q^q."""
        if len(self.generators) != self.q:
            return False
        if not self.q:
            return True
        return sympy.Matrix(self.generators).rank() == self.q

    def _rows(self) -> typing.List[typing.List[Fraction]]:
        return [[Fraction(e[i]) for e in self.generators] for i in range(self.q)]


@dataclass(frozen=True)
class ConicalCertificate:
    """A proof that a stored support lies in ``shift + C(e)``."""

    cone: ConeSpec
    shift: LatticePoint

    def check(self, alpha: Series) -> bool:
        """Re-check the certificate against the stored support of ``alpha``."""
        return _first_outside(self.cone, self.shift, alpha.exponents()) is None


def cone_contains(e: ConeSpec, n: typing.Sequence[int]) -> bool:
    """Decide whether ``n`` is a nonnegative real combination of the generators.

    Example:
        >>> e = ConeSpec.standard((1, 0), (0, 1))
        >>> cone_contains(e, (0, 0))
        True
        >>> cone_contains(e, (-1, 2))
        False

    """
    n = as_lattice_point(n, e.q)
    if not any(n):
        return True
    if not e.generators:
        return False
    return _feasible(e._rows(), [Fraction(x) for x in n]) is not None


def in_fundamental_domain(e: ConeSpec, n: typing.Sequence[int]) -> bool:
    """Decide whether ``n = sum x_k e_k`` with every ``0 <= x_k <= 1``."""
    n = as_lattice_point(n, e.q)
    m = len(e.generators)
    # x_k + s_k = 1 for the upper bounds
    rows = [row + [Fraction(0)] * m for row in e._rows()]
    for k in range(m):
        bound = [Fraction(0)] * (2 * m)
        bound[k] = bound[m + k] = Fraction(1)
        rows.append(bound)
    rhs = [Fraction(x) for x in n] + [Fraction(1)] * m
    return _feasible(rows, rhs) is not None


def fundamental_lattice_points(e: ConeSpec) -> typing.FrozenSet[LatticePoint]:
    """Enumerate the lattice points of the fundamental parallelepiped.

    Every point of the parallelepiped lies in the box spanned by the
    negative and positive parts of the generator coordinates; each integer
    point of that box is tested with `in_fundamental_domain`.

    Example:
        >>> sorted(fundamental_lattice_points(ConeSpec.standard((1, 0), (0, 1))))
        [(0, 0), (0, 1), (1, 0), (1, 1)]

    """
    low = [sum(min(g[i], 0) for g in e.generators) for i in range(e.q)]
    high = [sum(max(g[i], 0) for g in e.generators) for i in range(e.q)]
    ranges = [range(lo, hi + 1) for lo, hi in zip(low, high)]
    points = frozenset(p for p in itertools.product(*ranges) if in_fundamental_domain(e, p))
    logger.debug("fundamental domain of %d generator(s) has %d lattice point(s)", len(e.generators), len(points))
    return points


def _first_outside(e, shift, exponents):
    for n in exponents:
        if not cone_contains(e, tuple(a - b for a, b in zip(n, shift))):
            return n
    return None


def certify_conical(
    alpha: Series,
    e: ConeSpec,
    shifts: typing.Iterable[typing.Sequence[int]] = (),
) -> ConicalCertificate:
    """Find a shift placing the stored support of ``alpha`` inside the cone.

    Candidate shifts are the given ones, then the componentwise minimum of
    the support, then each support point.

    Raises:
        `~novikov.errors.NotConical`: with the first exponent found outside
            the cone translated by the componentwise minimum.

    Example:
        >>> e = ConeSpec.standard((1,))
        >>> chi = e.form
        >>> alpha = Series(chi, {(-2,): 1, (0,): 1})
        >>> certify_conical(alpha, e).shift
        (-2,)

    """
    if alpha.form != e.form:
        raise DimensionMismatch("series and cone use different degree forms")
    exponents = alpha.exponents()
    if not exponents:
        return ConicalCertificate(e, e.form.origin())
    minimum = tuple(min(c) for c in zip(*exponents))
    candidates = [as_lattice_point(s, e.q) for s in shifts]
    candidates.append(minimum)
    candidates.extend(exponents)
    tried = []
    witness = None
    for shift in candidates:
        if shift in tried:
            continue
        tried.append(shift)
        outside = _first_outside(e, shift, exponents)
        if outside is None:
            return ConicalCertificate(e, shift)
        if shift == minimum:
            witness = outside
    raise NotConical(witness, tried)


def certify_product(
    alpha: Series,
    cert_alpha: ConicalCertificate,
    beta: Series,
    cert_beta: ConicalCertificate,
) -> typing.Tuple[Series, ConicalCertificate]:
    """Multiply two conical series and certify the product.

    The product lies in the sum of the shifts plus the cone generated by
    both generator families.

    Returns:
        `tuple`: the product and its certificate.

    Raises:
        `~novikov.errors.NotConical`: when a certificate does not hold.

    """
    for series, cert in ((alpha, cert_alpha), (beta, cert_beta)):
        outside = _first_outside(cert.cone, cert.shift, series.exponents())
        if outside is not None:
            raise NotConical(outside, [cert.shift])
    generators = tuple(dict.fromkeys(cert_alpha.cone.generators + cert_beta.cone.generators))
    cone = ConeSpec(alpha.form, generators)
    shift = tuple(a + b for a, b in zip(cert_alpha.shift, cert_beta.shift))
    product = alpha * beta
    outside = _first_outside(cone, shift, product.exponents())
    if outside is not None:
        raise NotConical(outside, [shift])
    return product, ConicalCertificate(cone, shift)


def check_conical_quotient(
    gamma: Series,
    alpha: Series,
    e: ConeSpec,
    window,
) -> typing.Tuple[Series, ConicalCertificate]:
    """Divide a conical series by a unit-leading conical series.

    The quotient is computed with `~novikov.series.divide` through
    ``window`` and certified conical for the same cone.

    Raises:
        `~novikov.errors.NotAUnit`: when ``alpha`` is not unit-leading.
        `~novikov.errors.NotConical`: when an operand or the quotient
            fails certification.

    """
    if not is_unit(alpha):
        raise NotAUnit(alpha.leading().coefficient if alpha else 0)
    cert_gamma = certify_conical(gamma, e)
    cert_alpha = certify_conical(alpha, e, [alpha.leading().exponent])
    quotient = divide(gamma, alpha, window)
    expected = tuple(a - b for a, b in zip(cert_gamma.shift, cert_alpha.shift))
    return quotient, certify_conical(quotient, e, [expected])
