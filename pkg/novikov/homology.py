# coding: utf-8
"""Free complexes over the Novikov ring and their homology.

Complexes are graded cohomologically: ``boundaries[k]`` maps the
generators of degree ``k`` to those of degree ``k + 1``, and is stored as
a matrix with one row per degree ``k + 1`` generator and one column per
degree ``k`` generator.

Ranks and torsion are read off a Smith normal form over the Euclidean
ring of integer Novikov series:

    >>> chi = DegreeForm.rational(1)
    >>> t = Series.monomial(chi, (1,))
    >>> snf = smith_normal_form([[2 - 2 * t]], 10)
    >>> [str(d) for d in snf.diagonal]
    ['2']

"""

import logging
import typing
from dataclasses import dataclass, field, replace

from .degree import DegreeForm, DegreeValue, min_cutoff
from .errors import (
    AmbiguousZero,
    DimensionMismatch,
    NotDivisible,
    PrecisionExhausted,
)
from .series import (
    CoefficientDomain,
    Series,
    add,
    divide,
    is_laurent_unit,
    is_unit,
    mul,
    normalize,
    reduce,
)

__all__ = [
    "Matrix",
    "bounded_mul",
    "zero_matrix",
    "identity_matrix",
    "matmul",
    "transpose",
    "determinant",
    "FreeComplex",
    "LaurentComplex",
    "ComplexReport",
    "SNFResult",
    "HomologyDegree",
    "HomologySummary",
    "InequalityReport",
    "verify_complex",
    "smith_normal_form",
    "rank_over_field",
    "homology",
    "cycle_basis",
    "check_inequalities",
    "extend_scalars",
]

logger = logging.getLogger(__name__)

Matrix = typing.List[typing.List[Series]]


# --- Matrices ---------------------------------------------------------------

def bounded_mul(a: Series, b: Series) -> Series:
    """Multiply, bounding products with a zero-up-to-precision factor.

    A factor without stored terms has valuation at least its cutoff, so
    the product is known to vanish below ``cutoff(a) + val(b)`` or the
    symmetric bound.
    """
    if a.is_zero() or b.is_zero():
        return Series.zero(a.form, a.domain.join(b.domain))
    if a.is_ambiguous_zero() or b.is_ambiguous_zero():
        low_a = a.cutoff if not a else a.valuation()
        low_b = b.cutoff if not b else b.valuation()
        cutoff = min_cutoff(
            None if a.cutoff is None else a.cutoff + low_b,
            None if b.cutoff is None else b.cutoff + low_a,
        )
        return Series.zero(a.form, a.domain.join(b.domain), cutoff)
    return mul(a, b)


def zero_matrix(form: DegreeForm, rows: int, columns: int, domain=CoefficientDomain.INTEGERS) -> Matrix:
    """Return the ``rows x columns`` matrix of exact zeros."""
    return [[Series.zero(form, domain) for _ in range(columns)] for _ in range(rows)]


def identity_matrix(form: DegreeForm, size: int, domain=CoefficientDomain.INTEGERS) -> Matrix:
    """Return the ``size x size`` identity matrix."""
    matrix = zero_matrix(form, size, size, domain)
    for i in range(size):
        matrix[i][i] = Series.one(form, domain)
    return matrix


def shape(matrix: Matrix, columns: typing.Optional[int] = None) -> typing.Tuple[int, int]:
    """Return the shape of a matrix, given its column count when it has no rows."""
    if not matrix:
        return (0, columns or 0)
    return (len(matrix), len(matrix[0]))


def transpose(matrix: Matrix, columns: int = 0) -> Matrix:
    """Return the transpose, ``columns`` being used when there are no rows."""
    if not matrix:
        return [[] for _ in range(columns)]
    return [list(col) for col in zip(*matrix)]


def matmul(a: Matrix, b: Matrix, form: DegreeForm, inner: typing.Optional[int] = None) -> Matrix:
    """Multiply two matrices of series.

    ``inner`` gives the shared dimension when ``b`` has no rows.
    """
    rows = len(a)
    inner = len(b) if b else (inner or 0)
    columns = len(b[0]) if b else 0
    out = zero_matrix(form, rows, columns)
    for i in range(rows):
        for j in range(columns):
            total = out[i][j]
            for k in range(inner):
                x, y = a[i][k], b[k][j]
                if x.is_zero() or y.is_zero():
                    continue
                total = add(total, bounded_mul(x, y))
            out[i][j] = total
    return out


def determinant(matrix: Matrix, form: DegreeForm) -> Series:
    """Compute the determinant of a square matrix by expansion over column subsets."""
    n = len(matrix)
    domain = CoefficientDomain.INTEGERS
    for row in matrix:
        for entry in row:
            domain = domain.join(entry.domain)
    partial = {0: Series.one(form, domain)}
    for i in range(n):
        extended: typing.Dict[int, Series] = {}
        for mask, value in partial.items():
            for j in range(n):
                if mask & (1 << j) or matrix[i][j].is_zero():
                    continue
                term = bounded_mul(value, matrix[i][j])
                if bin(mask >> (j + 1)).count("1") % 2:
                    term = -term
                key = mask | (1 << j)
                extended[key] = add(extended[key], term) if key in extended else term
        partial = extended
    return partial.get((1 << n) - 1, Series.zero(form, domain))


def _check_matrix(matrix: Matrix) -> typing.Tuple[DegreeForm, CoefficientDomain]:
    form, domain = None, CoefficientDomain.INTEGERS
    width = None
    for row in matrix:
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise DimensionMismatch("matrix rows have different lengths")
        for entry in row:
            if not isinstance(entry, Series):
                raise TypeError("expected Series, found {}".format(type(entry).__name__))
            if form is None:
                form = entry.form
            elif entry.form != form:
                raise DimensionMismatch("matrix entries use different degree forms")
            domain = domain.join(entry.domain)
    return form, domain


# --- Complexes --------------------------------------------------------------

@dataclass(frozen=True)
class ComplexReport:
    """The outcome of `verify_complex`.

    Attributes:
        violations (`list` of `tuple`): ``(k, row, column, witness)`` for
            every entry of ``boundaries[k + 1] * boundaries[k]`` that does
            not vanish, where ``witness`` is its lowest nonvanishing
            ``(exponent, coefficient)`` pair.
        window (`DegreeValue` or `None`): the degree through which the
            check was made, `None` meaning as far as every entry is known.

    """

    violations: typing.Tuple[typing.Tuple[int, int, int, typing.Any], ...] = ()
    window: typing.Optional[DegreeValue] = None

    @property
    def ok(self) -> bool:
        return not self.violations


@dataclass(frozen=True)
class FreeComplex:
    """A finitely generated free cochain complex over the Novikov ring.

    Arguments:
        form (`~novikov.degree.DegreeForm`): the degree form of the ring.
        generators (`dict`): degree ``k`` to the ordered generator labels.
        boundaries (`dict`): degree ``k`` to the matrix of the boundary
            from degree ``k`` to degree ``k + 1``. Missing degrees are zero.
        report (`ComplexReport`, optional): the last verification report.

    Raises:
        `~novikov.errors.DimensionMismatch`: when a matrix shape does not
            match the generator counts.

    """

    form: DegreeForm
    generators: typing.Mapping[int, typing.Tuple[str, ...]]
    boundaries: typing.Mapping[int, Matrix] = field(default_factory=dict)
    report: typing.Optional[ComplexReport] = field(default=None, compare=False)

    def __post_init__(self):
        generators = {int(k): tuple(v) for k, v in self.generators.items()}
        object.__setattr__(self, "generators", generators)
        boundaries = {int(k): [list(row) for row in m] for k, m in self.boundaries.items()}
        object.__setattr__(self, "boundaries", boundaries)
        for k, matrix in boundaries.items():
            rows, columns = len(generators.get(k + 1, ())), len(generators.get(k, ()))
            if len(matrix) != rows or any(len(row) != columns for row in matrix):
                raise DimensionMismatch(
                    "boundary {} should be a {}x{} matrix".format(k, rows, columns)
                )
            for row in matrix:
                for entry in row:
                    if entry.form != self.form:
                        raise DimensionMismatch("boundary {} uses another degree form".format(k))

    @classmethod
    def from_matrices(cls, form: DegreeForm, boundaries: typing.Mapping[int, Matrix], start: int = 0) -> "FreeComplex":
        """Build a complex from its boundary matrices, labelling generators ``e{k}_{i}``.

        Example:
            >>> chi = DegreeForm.rational(1)
            >>> c = FreeComplex.from_matrices(chi, {0: [[Series.constant(chi, 2)]]})
            >>> c.rank(0), c.rank(1)
            (1, 1)

        """
        counts: typing.Dict[int, int] = {}
        for k, matrix in boundaries.items():
            rows, columns = len(matrix), len(matrix[0]) if matrix else 0
            for degree, count in ((k, columns), (k + 1, rows)):
                if counts.setdefault(degree, count) != count:
                    raise DimensionMismatch("boundaries disagree on the rank of degree {}".format(degree))
        counts.setdefault(start, 0)
        generators = {
            k: tuple("e{}_{}".format(k, i) for i in range(n)) for k, n in counts.items()
        }
        return cls(form, generators, boundaries)

    @property
    def degrees(self) -> typing.List[int]:
        """`list`: every degree from the lowest to the highest generator degree."""
        keys = set(self.generators) | set(self.boundaries) | {k + 1 for k in self.boundaries}
        if not keys:
            return []
        return list(range(min(keys), max(keys) + 1))

    @property
    def domain(self) -> CoefficientDomain:
        domain = CoefficientDomain.INTEGERS
        for matrix in self.boundaries.values():
            domain = domain.join(_check_matrix(matrix)[1])
        return domain

    def rank(self, k: int) -> int:
        """Return the number of generators in degree ``k``."""
        return len(self.generators.get(k, ()))

    def boundary(self, k: int) -> Matrix:
        """Return the matrix of the boundary from degree ``k`` to ``k + 1``."""
        if k in self.boundaries:
            return self.boundaries[k]
        return zero_matrix(self.form, self.rank(k + 1), self.rank(k))

    def apply(self, k: int, vector: typing.Sequence[Series]) -> typing.List[Series]:
        """Apply the boundary of degree ``k`` to a coordinate vector."""
        if len(vector) != self.rank(k):
            raise DimensionMismatch("expected {} coordinate(s), found {}".format(self.rank(k), len(vector)))
        column = [[v] for v in vector]
        return [row[0] for row in matmul(self.boundary(k), column, self.form, len(vector))]

    def relabel(self, labels: typing.Mapping[int, typing.Sequence[str]]) -> "FreeComplex":
        """Return the same complex with new generator labels."""
        generators = dict(self.generators)
        for k, names in labels.items():
            if len(names) != self.rank(k):
                raise DimensionMismatch("degree {} has {} generator(s)".format(k, self.rank(k)))
            generators[k] = tuple(names)
        return replace(self, generators=generators)

    def shift(self, n: int) -> "FreeComplex":
        """Return the complex with every degree raised by ``n``."""
        return FreeComplex(
            self.form,
            {k + n: v for k, v in self.generators.items()},
            {k + n: m for k, m in self.boundaries.items()},
        )


def verify_complex(C: FreeComplex, window=None) -> ComplexReport:
    """Check that consecutive boundaries compose to zero.

    With a ``window``, every entry of each composition must vanish below
    that degree. Without one, every entry must vanish as far as it is
    known.

    Raises:
        `~novikov.errors.PrecisionExhausted`: when an entry is not known
            up to the requested window.

    Example:
        >>> chi = DegreeForm.rational(1)
        >>> one = Series.one(chi)
        >>> c = FreeComplex.from_matrices(chi, {1: [[one]], 2: [[one]]})
        >>> verify_complex(c, 10).violations
        ((1, 0, 0, ((0,), 1)),)

    """
    if window is not None:
        window = C.form.level(window)
    violations = []
    for k in C.degrees:
        if C.rank(k + 2) == 0 or C.rank(k) == 0:
            continue
        product = matmul(C.boundary(k + 1), C.boundary(k), C.form, C.rank(k + 1))
        for i, row in enumerate(product):
            for j, entry in enumerate(row):
                if window is None:
                    nonzero = bool(entry)
                else:
                    if entry.is_zero_through(window):
                        continue
                    nonzero = bool(entry) and entry.valuation() < window
                    if not nonzero:
                        raise PrecisionExhausted(
                            "entry ({}, {}) of the composition at degree {} is known below {} only".format(
                                i, j, k, entry.cutoff
                            )
                        )
                if nonzero:
                    lead = entry.leading()
                    violations.append((k, i, j, (lead.exponent, lead.coefficient)))
    report = ComplexReport(tuple(violations), window)
    if violations:
        logger.warning("boundary does not square to zero: %d violating entr(ies)", len(violations))
    return report


@dataclass(frozen=True)
class LaurentComplex:
    """A complex of exact Laurent polynomial matrices.

    Entries are the exact series of the Novikov ring; this is the input of
    `extend_scalars`, which reads the same matrices over the Novikov ring.
    """

    form: DegreeForm
    generators: typing.Mapping[int, typing.Tuple[str, ...]]
    boundaries: typing.Mapping[int, Matrix] = field(default_factory=dict)

    def __post_init__(self):
        for k, matrix in self.boundaries.items():
            for i, row in enumerate(matrix):
                for j, entry in enumerate(row):
                    if not entry.is_exact():
                        raise ValueError(
                            "entry ({}, {}) of boundary {} is not a Laurent polynomial".format(i, j, k)
                        )

    @classmethod
    def from_matrices(cls, form: DegreeForm, boundaries: typing.Mapping[int, Matrix]) -> "LaurentComplex":
        free = FreeComplex.from_matrices(form, boundaries)
        return cls(form, free.generators, free.boundaries)

    def unit_entries(self) -> typing.List[typing.Tuple[int, int, int, bool, bool]]:
        """List ``(k, row, column, unit over L, unit over Lambda)`` for nonzero entries."""
        found = []
        for k, matrix in sorted(self.boundaries.items()):
            for i, row in enumerate(matrix):
                for j, entry in enumerate(row):
                    if not entry.is_zero():
                        found.append((k, i, j, is_laurent_unit(entry), is_unit(entry)))
        return found


def extend_scalars(C: LaurentComplex) -> FreeComplex:
    """Read a Laurent polynomial complex over the Novikov ring.

    Entries are unchanged and stay exact; only the ring they are read in
    changes, so that ``1 - t`` becomes invertible.

    Example:
        >>> chi = DegreeForm.rational(1)
        >>> t = Series.monomial(chi, (1,))
        >>> L = LaurentComplex.from_matrices(chi, {0: [[1 - t]]})
        >>> L.unit_entries()
        [(0, 0, 0, False, True)]
        >>> homology(extend_scalars(L), 10).betti
        (0, 0)

    """
    return FreeComplex(C.form, C.generators, C.boundaries)


# --- Smith normal form ------------------------------------------------------

@dataclass(frozen=True)
class SNFResult:
    """A certified Smith normal form ``U * M * V = D``.

    Attributes:
        U (`list` of `list`): the row transformation.
        V (`list` of `list`): the column transformation.
        diagonal (`tuple` of `Series`): the nonzero diagonal entries of
            ``D``, unit-normalized, each dividing the next.
        shape (`tuple`): the shape of ``M`` and ``D``.
        precision (`DegreeValue`): the degree through which the relation
            is certified.

    """

    U: Matrix
    V: Matrix
    diagonal: typing.Tuple[Series, ...]
    shape: typing.Tuple[int, int]
    precision: DegreeValue
    form: DegreeForm

    @property
    def rank(self) -> int:
        """`int`: the number of nonzero diagonal entries."""
        return len(self.diagonal)

    @property
    def D(self) -> Matrix:
        rows, columns = self.shape
        matrix = zero_matrix(self.form, rows, columns)
        for i, d in enumerate(self.diagonal):
            matrix[i][i] = d
        return matrix

    def torsion(self) -> typing.List[Series]:
        """Return the non-unit diagonal entries."""
        return [d for d in self.diagonal if not is_unit(d)]

    def defects(self, M: Matrix, precision=None, determinants: bool = True) -> typing.List[str]:
        """List every way in which the certificate fails for ``M``."""
        precision = self.precision if precision is None else self.form.level(precision)
        rows, columns = self.shape
        found = []
        product = matmul(matmul(self.U, M, self.form, rows), self.V, self.form, columns)
        expected = self.D
        for i in range(rows):
            for j in range(columns):
                difference = add(product[i][j], -expected[i][j])
                if not difference.is_zero_through(precision):
                    found.append("(U M V - D)[{}][{}] = {}".format(i, j, difference))
        for a, b in zip(self.diagonal, self.diagonal[1:]):
            if not _divides(a, b, precision):
                found.append("{} does not divide {}".format(a, b))
        if determinants:
            for name, matrix in (("U", self.U), ("V", self.V)):
                if not matrix:
                    continue
                det = determinant(matrix, self.form)
                try:
                    unit = is_unit(det)
                except ArithmeticError:
                    unit = False
                if not unit:
                    found.append("det({}) = {} is not a unit".format(name, det))
        return found

    def verify(self, M: Matrix, precision=None, determinants: bool = True) -> bool:
        """Re-check the certificate against ``M``."""
        return not self.defects(M, precision, determinants)


def _settle(entry: Series, window: DegreeValue, position) -> Series:
    """Resolve an entry as zero or nonzero below ``window``."""
    if entry.is_zero() or entry:
        return entry
    if entry.cutoff is not None and not entry.cutoff < window:
        logger.warning("entry %s has no term below %s: treated as zero", position, entry.cutoff)
        return Series.zero(entry.form, entry.domain)
    raise AmbiguousZero(
        "entry {} has no term below its cutoff {}, which is below the working window {}".format(
            position, entry.cutoff, window
        )
    )


def _norm(entry: Series):
    if entry.domain is CoefficientDomain.RATIONALS:
        return 1
    return abs(entry.leading().coefficient)


def _divides(p: Series, a: Series, window: DegreeValue) -> bool:
    """Whether ``a`` is a multiple of ``p`` through ``window``."""
    if a.is_zero() or (p and is_unit(p)):
        return True
    if not a:
        return True
    bound = window
    if a.cutoff is not None:
        bound = min_cutoff(bound, a.cutoff)
    if p.cutoff is not None:
        bound = min_cutoff(bound, p.cutoff + a.valuation() - p.valuation())
    try:
        divide(a, p, bound)
    except NotDivisible:
        return False
    return True


def _swap_rows(matrix: Matrix, i: int, j: int):
    matrix[i], matrix[j] = matrix[j], matrix[i]


def _swap_columns(matrix: Matrix, i: int, j: int):
    for row in matrix:
        row[i], row[j] = row[j], row[i]


def _cross_rows(matrix: Matrix, i: int, t: int, p: Series, a: Series):
    """``row_i <- p * row_i - a * row_t``."""
    matrix[i] = [add(bounded_mul(p, x), -bounded_mul(a, y)) for x, y in zip(matrix[i], matrix[t])]


def _cross_columns(matrix: Matrix, j: int, t: int, p: Series, a: Series):
    """``col_j <- p * col_j - a * col_t``."""
    for row in matrix:
        row[j] = add(bounded_mul(p, row[j]), -bounded_mul(a, row[t]))


def _subtract_row(matrix: Matrix, i: int, t: int, q: Series):
    """``row_i <- row_i - q * row_t``."""
    matrix[i] = [add(x, -bounded_mul(q, y)) for x, y in zip(matrix[i], matrix[t])]


def _subtract_column(matrix: Matrix, j: int, t: int, q: Series):
    """``col_j <- col_j - q * col_t``."""
    for row in matrix:
        row[j] = add(row[j], -bounded_mul(q, row[t]))


def _add_row(matrix: Matrix, t: int, i: int):
    """``row_t <- row_t + row_i``."""
    matrix[t] = [add(x, y) for x, y in zip(matrix[t], matrix[i])]


def _choose_pivot(A: Matrix, t: int, window: DegreeValue):
    best = None
    for i in range(t, len(A)):
        for j in range(t, len(A[i])):
            A[i][j] = entry = _settle(A[i][j], window, (i, j))
            if entry.is_zero():
                continue
            key = (_norm(entry), entry.valuation())
            if best is None or key[0] < best[0][0] or (key[0] == best[0][0] and key[1] < best[0][1]):
                best = (key, i, j)
    if best is None:
        return None
    return best[1], best[2]


def _snf(M: Matrix, form: DegreeForm, domain: CoefficientDomain, precision: DegreeValue, window: DegreeValue) -> SNFResult:
    rows, columns = len(M), len(M[0]) if M else 0
    A = [list(row) for row in M]
    U = identity_matrix(form, rows, domain)
    V = identity_matrix(form, columns, domain)
    zero = Series.zero(form, domain)
    diagonal = []

    for t in range(min(rows, columns)):
        found = _choose_pivot(A, t, window)
        if found is None:
            break
        i, j = found
        logger.debug("pivot %d: entry (%d, %d) = %s", t, i, j, A[i][j])
        _swap_rows(A, t, i)
        _swap_rows(U, t, i)
        _swap_columns(A, t, j)
        _swap_columns(V, t, j)

        while True:
            restart = False
            p = A[t][t]
            for i in range(t + 1, rows):
                a = A[i][t] = _settle(A[i][t], window, (i, t))
                if a.is_zero():
                    continue
                if is_unit(p):
                    _cross_rows(A, i, t, p, a)
                    _cross_rows(U, i, t, p, a)
                    A[i][t] = zero
                    continue
                q, remainder = reduce(a, p, window)
                _subtract_row(A, i, t, q)
                _subtract_row(U, i, t, q)
                if remainder.is_zero() or remainder.is_zero_through(window):
                    A[i][t] = zero
                else:
                    A[i][t] = remainder
                    logger.debug("row %d leaves remainder %s of smaller norm", i, remainder)
                    _swap_rows(A, t, i)
                    _swap_rows(U, t, i)
                    restart = True
                    break
            if restart:
                continue
            for j in range(t + 1, columns):
                a = A[t][j] = _settle(A[t][j], window, (t, j))
                if a.is_zero():
                    continue
                if is_unit(p):
                    _cross_columns(A, j, t, p, a)
                    _cross_columns(V, j, t, p, a)
                    A[t][j] = zero
                    continue
                q, remainder = reduce(a, p, window)
                _subtract_column(A, j, t, q)
                _subtract_column(V, j, t, q)
                if remainder.is_zero() or remainder.is_zero_through(window):
                    A[t][j] = zero
                else:
                    A[t][j] = remainder
                    logger.debug("column %d leaves remainder %s of smaller norm", j, remainder)
                    _swap_columns(A, t, j)
                    _swap_columns(V, t, j)
                    restart = True
                    break
            if restart:
                continue
            if not is_unit(p):
                culprit = None
                for i in range(t + 1, rows):
                    for j in range(t + 1, columns):
                        A[i][j] = a = _settle(A[i][j], window, (i, j))
                        if not _divides(p, a, window):
                            culprit = i
                            break
                    if culprit is not None:
                        break
                if culprit is not None:
                    logger.debug("pivot %s does not divide row %d: adding it to the pivot row", p, culprit)
                    _add_row(A, t, culprit)
                    _add_row(U, t, culprit)
                    continue
            break
        diagonal.append(A[t][t])

    # the unit c = n / d has valuation -val(d): work through the wide window
    normalized = []
    for t, d in enumerate(diagonal):
        n = normalize(d, window)
        if n != d:
            reach = window if d.cutoff is None else min_cutoff(window, d.cutoff - d.valuation())
            c = divide(n, d, reach)
            U[t] = [bounded_mul(c, u) for u in U[t]]
        normalized.append(n if n.is_exact() else n.truncate(precision))
    return SNFResult(U, V, tuple(normalized), (rows, columns), precision, form)


def _spread(M: Matrix, form: DegreeForm) -> DegreeValue:
    """Sum of the degree spans of the stored terms of every entry."""
    total = form.zero()
    for row in M:
        for entry in row:
            if entry:
                degrees = [form.degree_of(e) for e in entry.exponents()]
                total = total + (degrees[-1] - degrees[0])
    return total


def smith_normal_form(M: Matrix, precision, columns: int = 0, form: typing.Optional[DegreeForm] = None) -> SNFResult:
    """Compute a certified Smith normal form ``U * M * V = D``.

    Pivots have minimal leading coefficient in absolute value, then
    minimal valuation, then come first in row-major order. Unit pivots
    clear their row and column by cross-multiplication; other pivots use
    Euclidean division with remainder. The certificate is checked before
    returning, and recomputed with wider working windows when the first
    attempt cannot support the requested precision. The windows grow by
    the larger of the precision and the summed degree spans of the entries.

    Arguments:
        M (`list` of `list` of `Series`): the matrix.
        precision: the degree through which ``U * M * V = D`` must hold.
        columns (`int`): the column count, used when ``M`` has no rows.
        form (`~novikov.degree.DegreeForm`): the degree form, required
            when ``M`` has no entries.

    Raises:
        `~novikov.errors.AmbiguousZero`: when an entry has no stored term
            below a cutoff smaller than the working window.
        `~novikov.errors.PrecisionExhausted`: when no working window
            yields a certificate.

    Example:
        >>> chi = DegreeForm.rational(1)
        >>> t = Series.monomial(chi, (1,))
        >>> two = Series.constant(chi, 2)
        >>> snf = smith_normal_form([[two, 1 - t], [Series.zero(chi), two]], 10)
        >>> [str(d) for d in snf.diagonal]
        ['1', '4']

    """
    found, domain = _check_matrix(M)
    form = form or found
    if form is None:
        raise ValueError("cannot infer the degree form of a matrix without entries")
    rows = len(M)
    precision = form.level(precision)
    width = len(M[0]) if M else columns
    if not rows or not width:
        return SNFResult(
            identity_matrix(form, rows), identity_matrix(form, width), (), (rows, width), precision, form
        )
    step = max(precision, _spread(M, form))
    if not step > form.zero():
        step = form.basis.unit()
    last = None
    for widening in (0, 1, 2, 4):
        window = precision + step * widening
        try:
            result = _snf(M, form, domain, precision, window)
        except PrecisionExhausted as err:
            last = err
            logger.debug("working window %s is too narrow: %s", window, err)
            continue
        defects = result.defects(M, precision, determinants=max(result.shape) <= 6)
        if not defects:
            return result
        last = PrecisionExhausted("; ".join(defects))
        logger.debug("certificate failed with working window %s: %s", window, defects[0])
    raise last


def rank_over_field(M: Matrix, precision) -> int:
    """Compute the rank of a matrix over the Novikov field.

    Every nonzero series is invertible over the rationals, so elimination
    multiplies rows by pivots instead of dividing by them and stays exact.

    Raises:
        `~novikov.errors.AmbiguousZero`: when an entry has no stored term
            below a cutoff smaller than ``precision``.

    Example:
        >>> chi = DegreeForm.rational(1)
        >>> one, t = Series.one(chi), Series.monomial(chi, (1,))
        >>> rank_over_field([[one, t], [t, t * t]], 10)
        1

    """
    form, _ = _check_matrix(M)
    if form is None:
        return 0
    precision = form.level(precision)
    A = [[entry.to_rationals() for entry in row] for row in M]
    rows, columns = len(A), len(A[0])
    zero = Series.zero(form, CoefficientDomain.RATIONALS)
    rank = 0
    for j in range(columns):
        pivot = None
        for i in range(rank, rows):
            A[i][j] = entry = _settle(A[i][j], precision, (i, j))
            if entry.is_zero():
                continue
            if pivot is None or entry.valuation() < A[pivot][j].valuation():
                pivot = i
        if pivot is None:
            continue
        _swap_rows(A, rank, pivot)
        p = A[rank][j]
        for i in range(rank + 1, rows):
            a = A[i][j]
            if a.is_zero():
                continue
            _cross_rows(A, i, rank, p, a)
            A[i][j] = zero
        rank += 1
        if rank == rows:
            break
    return rank


# --- Homology ---------------------------------------------------------------

@dataclass(frozen=True)
class HomologyDegree:
    """The cohomology of a complex in one degree."""

    degree: int
    generators: int
    betti: int
    torsion: typing.Tuple[Series, ...] = ()


@dataclass(frozen=True)
class HomologySummary:
    """Novikov numbers of a complex: ranks and torsion divisors per degree."""

    degrees: typing.Tuple[HomologyDegree, ...]
    precision: typing.Optional[DegreeValue] = None

    @property
    def betti(self) -> typing.Tuple[int, ...]:
        return tuple(d.betti for d in self.degrees)

    @property
    def torsion(self) -> typing.Tuple[typing.Tuple[Series, ...], ...]:
        return tuple(d.torsion for d in self.degrees)

    @property
    def generator_counts(self) -> typing.Tuple[int, ...]:
        return tuple(d.generators for d in self.degrees)

    def __getitem__(self, k: int) -> HomologyDegree:
        for d in self.degrees:
            if d.degree == k:
                return d
        return HomologyDegree(k, 0, 0, ())

    def rows(self) -> typing.List[typing.Tuple[int, int, int, typing.List[str]]]:
        """Return ``(k, N_k, b_k, torsion divisors)`` for every degree."""
        return [(d.degree, d.generators, d.betti, [str(t) for t in d.torsion]) for d in self.degrees]

    def to_table(self) -> str:
        """Render the summary as an aligned text table."""
        header = ("degree", "N_k", "b_k", "torsion")
        body = [
            (str(k), str(n), str(b), ", ".join(t) if t else "-")
            for k, n, b, t in self.rows()
        ]
        widths = [max(len(r[i]) for r in [header] + body) for i in range(3)]
        lines = []
        for r in [header] + body:
            cells = [r[i].rjust(widths[i]) for i in range(3)]
            lines.append("  ".join(cells + [r[3]]))
        return "\n".join(lines)

    def to_dict(self) -> typing.Dict[str, typing.Any]:
        return {
            "precision": None if self.precision is None else str(self.precision),
            "degrees": [
                {"degree": k, "generators": n, "betti": b, "torsion": t}
                for k, n, b, t in self.rows()
            ],
        }


def homology(C: FreeComplex, precision) -> HomologySummary:
    """Compute ranks and torsion of the cohomology of ``C``.

    In degree ``k`` the rank is ``N_k - rank(d^k) - rank(d^(k-1))`` and the
    torsion divisors are the non-unit diagonal entries of the Smith normal
    form of ``d^(k-1)``.

    Example:
        >>> chi = DegreeForm.rational(1)
        >>> c = FreeComplex.from_matrices(chi, {0: [[Series.constant(chi, 2)]]})
        >>> h = homology(c, 10)
        >>> h.betti
        (0, 0)
        >>> [str(t) for t in h[1].torsion]
        ['2']

    """
    precision = C.form.level(precision)
    forms = {
        k: smith_normal_form(C.boundary(k), precision, C.rank(k), C.form)
        for k in C.degrees
    }
    degrees = []
    for k in C.degrees:
        below = forms.get(k - 1)
        rank_below = below.rank if below is not None else 0
        torsion = tuple(below.torsion()) if below is not None else ()
        betti = C.rank(k) - forms[k].rank - rank_below
        degrees.append(HomologyDegree(k, C.rank(k), betti, torsion))
    summary = HomologySummary(tuple(degrees), precision)
    logger.debug("homology: betti %s, torsion %s", summary.betti, [len(t) for t in summary.torsion])
    return summary


def cycle_basis(C: FreeComplex, k: int, precision) -> typing.List[typing.List[Series]]:
    """Return coordinate vectors spanning the cycles of degree ``k``.

    These are the columns of ``V`` beyond the rank in the Smith normal
    form of the boundary leaving degree ``k``.
    """
    snf = smith_normal_form(C.boundary(k), precision, C.rank(k), C.form)
    return [[row[j] for row in snf.V] for j in range(snf.rank, C.rank(k))]


# --- Inequalities -----------------------------------------------------------

@dataclass(frozen=True)
class Inequality:
    """One inequality ``lhs >= rhs`` at a given degree."""

    degree: int
    lhs: int
    rhs: int

    @property
    def slack(self) -> int:
        return self.lhs - self.rhs

    @property
    def holds(self) -> bool:
        return self.lhs >= self.rhs


@dataclass(frozen=True)
class InequalityReport:
    """Morse-type inequalities between generator counts and Novikov numbers.

    Attributes:
        weak (`tuple` of `Inequality`): ``N_k >= b_k + q_k + q_(k+1)``.
        strong (`tuple` of `Inequality`): the alternating partial sums
            ``sum (-1)^(k-j) N_j >= sum (-1)^(k-j) b_j + q_(k+1)``.
        euler (`tuple`): both sides of ``sum (-1)^k N_k = sum (-1)^k b_k``.

    """

    weak: typing.Tuple[Inequality, ...]
    strong: typing.Tuple[Inequality, ...]
    euler: typing.Tuple[int, int]

    @property
    def ok(self) -> bool:
        return (
            all(i.holds for i in self.weak)
            and all(i.holds for i in self.strong)
            and self.euler[0] == self.euler[1]
        )


def check_inequalities(H: HomologySummary) -> InequalityReport:
    """Check the Morse-type inequalities and the Euler identity.

    A failure is reported, not raised: it means the input data is
    inconsistent.

    Example:
        >>> chi = DegreeForm.rational(1)
        >>> c = FreeComplex.from_matrices(chi, {0: [[Series.constant(chi, 2)]]})
        >>> report = check_inequalities(homology(c, 10))
        >>> [(i.lhs, i.rhs) for i in report.weak]
        [(1, 1), (1, 1)]
        >>> report.euler
        (0, 0)

    """
    q = {d.degree: len(d.torsion) for d in H.degrees}
    weak, strong = [], []
    alternating_n = alternating_b = 0
    for d in H.degrees:
        k = d.degree
        weak.append(Inequality(k, d.generators, d.betti + q.get(k, 0) + q.get(k + 1, 0)))
        alternating_n = d.generators - alternating_n
        alternating_b = d.betti - alternating_b
        strong.append(Inequality(k, alternating_n, alternating_b + q.get(k + 1, 0)))
    euler = (
        sum((1 - 2 * (d.degree % 2)) * d.generators for d in H.degrees),
        sum((1 - 2 * (d.degree % 2)) * d.betti for d in H.degrees),
    )
    report = InequalityReport(tuple(weak), tuple(strong), euler)
    if not report.ok:
        logger.warning("Morse-type inequalities fail: the complex is inconsistent")
    return report
