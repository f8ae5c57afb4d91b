# coding: utf-8
"""Morse–Novikov complexes assembled from flow-line data.

Critical points of a circle-valued (or closed one-form) Morse function are
given together with their Morse index; each point is also the chosen lift
of itself in the covering space, and every flow line is recorded with the
deck transformation ``t^n`` taking the lift of its target to the actual
end of the line. Counting the lines with orientation gives the boundary
coefficients of the Novikov complex:

    >>> chi = DegreeForm.rational(1)
    >>> data = MorseData(1, chi, [CriticalPoint("a", 0), CriticalPoint("b", 1)], [
    ...     FlowLineRecord("a", "b", (0,), True),
    ...     FlowLineRecord("a", "b", (1,), False),
    ... ])
    >>> C = assemble_novikov_complex(data)
    >>> str(C.boundary(0)[0][0])
    '1 - t'

Stable chains live in the complex above, unstable chains in its adjoint,
and the two are paired with values in the Novikov ring:

    >>> u = LambdaChain.basis(ChainKind.UNSTABLE, "a", data)
    >>> s = LambdaChain.basis(ChainKind.STABLE, "a", data)
    >>> str(lambda_pairing(u, s))
    '1'

"""

import enum
import fractions
import logging
import typing
from dataclasses import dataclass, field, replace

from .degree import (
    DegreeForm,
    DegreeValue,
    LatticePoint,
    as_lattice_point,
)
from .errors import (
    DegreeMismatch,
    DimensionMismatch,
    IndexMismatch,
    NoSolution,
    NotTorsion,
)
from .homology import (
    FreeComplex,
    Matrix,
    bounded_mul,
    matmul,
    smith_normal_form,
    transpose,
    verify_complex,
)
from .series import (
    CoefficientDomain,
    Series,
    add,
    divide,
    gcd,
    invert,
    is_unit,
    lcm,
    normalize,
)

__all__ = [
    "ChainKind",
    "CriticalPoint",
    "FlowLineRecord",
    "MorseData",
    "LambdaChain",
    "UnstableComplex",
    "flow_line_sign",
    "boundary_coefficient",
    "assemble_novikov_complex",
    "lambda_pairing",
    "coefficient_of",
    "adjoint_boundary",
    "adjointness_defects",
    "stable_chain_vector",
    "unstable_chain_vector",
    "solve_in_complex",
    "is_torsion_class",
    "linking_number",
    "linking_from_certificate",
    "pairing_matrix",
]

logger = logging.getLogger(__name__)


# --- Flow data --------------------------------------------------------------

class ChainKind(enum.Enum):
    """The two families of chains paired against each other."""

    #: chains of stable manifolds, acted on by pushforward.
    STABLE = "stable"
    #: chains of unstable manifolds, acted on by pullback.
    UNSTABLE = "unstable"


@dataclass(frozen=True)
class CriticalPoint:
    """A critical point with its Morse index.

    The point stands for its chosen lift in the covering space.
    """

    id: str
    index: int

    def __post_init__(self):
        if not isinstance(self.id, str):
            raise TypeError("expected str, found {}".format(type(self.id).__name__))
        if isinstance(self.index, bool) or not isinstance(self.index, int):
            raise TypeError("expected int, found {}".format(type(self.index).__name__))


@dataclass(frozen=True)
class FlowLineRecord:
    """A flow line from the lift of ``source`` to ``t^deck`` times the lift of ``target``.

    Attributes:
        source (str): the id of the critical point ``x`` the line leaves.
        target (str): the id of the critical point ``y`` the line reaches.
        deck (tuple of int): the deck transformation exponent.
        orientation_agrees (bool): whether the orientation of the line
            agrees with the orientation of ``U_y`` intersected with ``S_x``.

    """

    source: str
    target: str
    deck: LatticePoint
    orientation_agrees: bool = True

    def __post_init__(self):
        object.__setattr__(self, "deck", tuple(self.deck))
        if not isinstance(self.orientation_agrees, bool):
            raise TypeError("expected bool, found {}".format(type(self.orientation_agrees).__name__))


@dataclass(frozen=True)
class MorseData:
    """Combinatorial flow data on a closed manifold of dimension ``n``.

    Arguments:
        dimension (int): the dimension ``n`` of the manifold.
        form (`~novikov.degree.DegreeForm`): the degree form of the deck
            group; ``q = 0`` is the compact case.
        points (iterable of `CriticalPoint`): the critical points.
        records (iterable of `FlowLineRecord`): the flow lines.
        window (optional): the degree below which the record list is
            complete. `None` means the list is complete in every degree.
        name (str): a name used in reports.

    Raises:
        `~novikov.errors.DimensionMismatch`: when a deck label is not a
            point of ``Z^q``.

    """

    dimension: int
    form: DegreeForm
    points: typing.Tuple[CriticalPoint, ...] = ()
    records: typing.Tuple[FlowLineRecord, ...] = ()
    window: typing.Optional[DegreeValue] = None
    name: str = ""
    _by_id: typing.Dict[str, CriticalPoint] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.form, DegreeForm):
            raise TypeError("expected DegreeForm, found {}".format(type(self.form).__name__))
        if isinstance(self.dimension, bool) or not isinstance(self.dimension, int):
            raise TypeError("expected int, found {}".format(type(self.dimension).__name__))
        if self.dimension < 0:
            raise ValueError("dimension must be nonnegative, found {}".format(self.dimension))
        object.__setattr__(self, "points", tuple(self.points))
        records = tuple(
            replace(r, deck=as_lattice_point(r.deck, self.form.q)) for r in self.records
        )
        object.__setattr__(self, "records", records)
        if self.window is not None:
            object.__setattr__(self, "window", self.form.level(self.window))
        object.__setattr__(self, "_by_id", {p.id: p for p in self.points})

    def validate(self) -> "MorseData":
        """Check ids, indices and flow-line records.

        Returns:
            `MorseData`: the data itself, so calls can be chained.

        Raises:
            `ValueError`: when two critical points share an id.
            `~novikov.errors.IndexMismatch`: when an index lies outside
                ``[0, n]``, a record names an unknown point, or a record
                does not raise the index by exactly one.

        """
        if len(self._by_id) != len(self.points):
            seen = set()
            for p in self.points:
                if p.id in seen:
                    raise ValueError("duplicate critical point id {!r}".format(p.id))
                seen.add(p.id)
        for p in self.points:
            if not 0 <= p.index <= self.dimension:
                raise IndexMismatch(
                    "point {!r} has index {} outside [0, {}]".format(p.id, p.index, self.dimension)
                )
        for i, r in enumerate(self.records):
            for end in (r.source, r.target):
                if end not in self._by_id:
                    raise IndexMismatch("flow line {} names unknown point {!r}".format(i, end))
            x, y = self._by_id[r.source], self._by_id[r.target]
            if y.index != x.index + 1:
                raise IndexMismatch(
                    "flow line {} joins {!r} (index {}) to {!r} (index {})".format(
                        i, x.id, x.index, y.id, y.index
                    )
                )
        return self

    def point(self, id: str) -> CriticalPoint:
        """Return the critical point with the given id.

        Raises:
            `KeyError`: when no such point exists.

        """
        return self._by_id[id]

    def points_of_index(self, k: int) -> typing.Tuple[CriticalPoint, ...]:
        """Return the critical points of index ``k``, in declaration order."""
        return tuple(p for p in self.points if p.index == k)

    def relift(self, shifts: typing.Mapping[str, typing.Sequence[int]]) -> "MorseData":
        """Replace the chosen lift of each point ``x`` by ``t^(shifts[x])`` times it.

        A line from ``x`` to ``t^n y`` then has deck ``n + m_x - m_y``. The
        completeness window is lowered by the spread of the shift degrees,
        so that the new records are still complete below it.
        """
        shifts = {k: as_lattice_point(v, self.form.q) for k, v in shifts.items()}
        origin = self.form.origin()
        records = []
        for r in self.records:
            m_x, m_y = shifts.get(r.source, origin), shifts.get(r.target, origin)
            deck = tuple(n + a - b for n, a, b in zip(r.deck, m_x, m_y))
            records.append(replace(r, deck=deck))
        window = self.window
        if window is not None and shifts:
            degrees = [self.form.zero()] + [self.form.degree_of(m) for m in shifts.values()]
            window = window + min(degrees) - max(degrees)
        return replace(self, records=tuple(records), window=window)


def flow_line_sign(orientation_agrees: bool, index_x: int) -> int:
    """Return the sign with which a flow line leaving an index ``index_x`` point counts.

    Example:
        >>> flow_line_sign(True, 0), flow_line_sign(False, 1), flow_line_sign(True, 1)
        (1, 1, -1)

    """
    return 1 if orientation_agrees == (index_x % 2 == 0) else -1


def boundary_coefficient(
    x: CriticalPoint,
    y: CriticalPoint,
    records: typing.Iterable[FlowLineRecord],
    window: typing.Optional[DegreeValue],
    form: DegreeForm,
) -> Series:
    """Count the flow lines from ``x`` to the translates of ``y``.

    Records not joining ``x`` to ``y`` are ignored, and so are records
    whose deck degree is at least ``window``: the result is only known
    below it.

    Raises:
        `~novikov.errors.IndexMismatch`: when ``index(y) != index(x) + 1``.

    Example:
        >>> chi = DegreeForm.rational(1)
        >>> a, b = CriticalPoint("a", 0), CriticalPoint("b", 1)
        >>> lines = [FlowLineRecord("a", "b", (0,), True), FlowLineRecord("a", "b", (0,), False)]
        >>> boundary_coefficient(a, b, lines, None, chi).is_zero()
        True

    """
    if y.index != x.index + 1:
        raise IndexMismatch(
            "no boundary coefficient from index {} to index {}".format(x.index, y.index)
        )
    window = None if window is None else form.level(window)
    terms: typing.Dict[LatticePoint, int] = {}
    dropped = 0
    for r in records:
        if r.source != x.id or r.target != y.id:
            continue
        deck = as_lattice_point(r.deck, form.q)
        if window is not None and not form.degree_of(deck) < window:
            dropped += 1
            continue
        terms[deck] = terms.get(deck, 0) + flow_line_sign(r.orientation_agrees, x.index)
    if dropped:
        logger.debug("ignored %d flow line(s) from %s to %s beyond degree %s", dropped, x.id, y.id, window)
    return Series(form, {e: c for e, c in terms.items() if c}, window)


def assemble_novikov_complex(data: MorseData) -> FreeComplex:
    """Assemble the Novikov complex of stable chains.

    Degree ``k`` is generated by the critical points of index ``k``, and
    ``boundaries[k][j][i]`` is the coefficient from the ``i``-th point of
    index ``k`` to the ``j``-th point of index ``k + 1``. The complex is
    verified as far as its entries are known, and the report attached.

    Raises:
        `~novikov.errors.IndexMismatch`: when the data is not valid.

    """
    data.validate()
    grouped: typing.Dict[typing.Tuple[str, str], typing.List[FlowLineRecord]] = {}
    for r in data.records:
        grouped.setdefault((r.source, r.target), []).append(r)
    generators = {
        k: tuple(p.id for p in data.points_of_index(k)) for k in range(data.dimension + 1)
    }
    boundaries = {}
    for k in range(data.dimension):
        boundaries[k] = [
            [
                boundary_coefficient(x, y, grouped.get((x.id, y.id), ()), data.window, data.form)
                for x in data.points_of_index(k)
            ]
            for y in data.points_of_index(k + 1)
        ]
    C = FreeComplex(data.form, generators, boundaries)
    logger.info(
        "assembled complex %s with generator counts %s",
        data.name or "<unnamed>",
        [C.rank(k) for k in C.degrees],
    )
    return replace(C, report=verify_complex(C))


# --- Chains -----------------------------------------------------------------

@dataclass(frozen=True)
class LambdaChain:
    """A finite combination of stable or unstable chains.

    Coefficients are read against the chosen lifts: the coefficient of
    ``x`` is the series ``lambda`` such that the chain restricted to the
    orbit of ``x`` is ``lambda`` times the chain of the chosen lift.

    Attributes:
        kind (`ChainKind`): whether the chain is stable or unstable.
        form (`~novikov.degree.DegreeForm`): the degree form of the ring.
        degree (int): the degree of the chain, ``index(x)`` for stable
            chains and ``n - index(x)`` for unstable ones.
        dimension (int): the dimension ``n`` of the manifold.
        coefficients (dict): critical point ids to nonzero `Series`.

    """

    kind: ChainKind
    form: DegreeForm
    degree: int
    dimension: int
    coefficients: typing.Mapping[str, Series] = field(default_factory=dict)

    def __post_init__(self):
        if not isinstance(self.kind, ChainKind):
            raise TypeError("expected ChainKind, found {}".format(type(self.kind).__name__))
        coefficients = {}
        for key, value in dict(self.coefficients).items():
            if not isinstance(value, Series):
                raise TypeError("expected Series, found {}".format(type(value).__name__))
            if value.form != self.form:
                raise DimensionMismatch("coefficient of {!r} uses another degree form".format(key))
            if not value.is_zero():
                coefficients[key] = value
        object.__setattr__(self, "coefficients", coefficients)

    @classmethod
    def basis(cls, kind: ChainKind, point: typing.Union[str, CriticalPoint], data: MorseData) -> "LambdaChain":
        """Return the chain of the chosen lift of ``point``."""
        if isinstance(point, str):
            point = data.point(point)
        degree = point.index if kind is ChainKind.STABLE else data.dimension - point.index
        return cls(kind, data.form, degree, data.dimension, {point.id: Series.one(data.form)})

    @classmethod
    def zero(cls, kind: ChainKind, form: DegreeForm, degree: int, dimension: int) -> "LambdaChain":
        return cls(kind, form, degree, dimension, {})

    @classmethod
    def from_vector(
        cls,
        kind: ChainKind,
        form: DegreeForm,
        degree: int,
        dimension: int,
        labels: typing.Sequence[str],
        vector: typing.Sequence[Series],
    ) -> "LambdaChain":
        """Build a chain from its coordinates against ``labels``."""
        if len(labels) != len(vector):
            raise DimensionMismatch("expected {} coordinate(s), found {}".format(len(labels), len(vector)))
        return cls(kind, form, degree, dimension, dict(zip(labels, vector)))

    @property
    def domain(self) -> CoefficientDomain:
        domain = CoefficientDomain.INTEGERS
        for value in self.coefficients.values():
            domain = domain.join(value.domain)
        return domain

    def is_zero(self) -> bool:
        return not self.coefficients

    def coefficient(self, id: str) -> Series:
        """Return the coefficient of ``id``, zero when it is absent."""
        return self.coefficients.get(id, Series.zero(self.form, self.domain))

    def relift(self, shifts: typing.Mapping[str, typing.Sequence[int]]) -> "LambdaChain":
        """Rewrite the coefficients after replacing each lift ``x`` by ``t^(shifts[x]) x``.

        Stable coordinates are multiplied by ``t^-m`` and unstable ones by
        ``t^m``, so pairings are unchanged.

        Example:
            >>> chi = DegreeForm.rational(1)
            >>> s = LambdaChain(ChainKind.STABLE, chi, 0, 1, {"a": Series.one(chi)})
            >>> str(s.relift({"a": (2,)}).coefficient("a"))
            't^-2'

        """
        sign = -1 if self.kind is ChainKind.STABLE else 1
        coefficients = {}
        for key, value in self.coefficients.items():
            m = as_lattice_point(shifts.get(key, self.form.origin()), self.form.q)
            coefficients[key] = value.shift(tuple(sign * c for c in m))
        return replace(self, coefficients=coefficients)

    def _check(self, other: "LambdaChain"):
        if not isinstance(other, LambdaChain):
            raise TypeError("expected LambdaChain, found {}".format(type(other).__name__))
        if other.kind is not self.kind:
            raise TypeError("cannot combine {} and {} chains".format(self.kind.value, other.kind.value))
        if other.form != self.form:
            raise DimensionMismatch("chains use different degree forms")
        if (other.degree, other.dimension) != (self.degree, self.dimension):
            raise DegreeMismatch(
                "cannot add chains of degree {} and {}".format(self.degree, other.degree)
            )

    def __add__(self, other):
        if not isinstance(other, LambdaChain):
            return NotImplemented
        self._check(other)
        coefficients = dict(self.coefficients)
        for key, value in other.coefficients.items():
            coefficients[key] = add(coefficients[key], value) if key in coefficients else value
        return replace(self, coefficients=coefficients)

    def __neg__(self):
        return replace(self, coefficients={k: -v for k, v in self.coefficients.items()})

    def __sub__(self, other):
        if not isinstance(other, LambdaChain):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar):
        if isinstance(scalar, Series) and scalar.form != self.form:
            raise DimensionMismatch("scalar uses another degree form")
        if not isinstance(scalar, (Series, int, fractions.Fraction)):
            return NotImplemented
        return replace(self, coefficients={k: v * scalar for k, v in self.coefficients.items()})

    __rmul__ = __mul__


def _coordinates(chain: LambdaChain, labels: typing.Sequence[str]) -> typing.List[Series]:
    unknown = set(chain.coefficients).difference(labels)
    if unknown:
        raise DegreeMismatch(
            "point(s) {} do not carry {} chains of degree {}".format(
                ", ".join(sorted(map(repr, unknown))), chain.kind.value, chain.degree
            )
        )
    return [chain.coefficient(label) for label in labels]


def lambda_pairing(U: LambdaChain, S: LambdaChain) -> Series:
    """Pair an unstable chain with a stable chain of complementary degree.

    The value is the sum of ``lambda_x * mu_x`` over the points present in
    both chains.

    Raises:
        `TypeError`: when the chains are not of kinds unstable and stable.
        `~novikov.errors.DegreeMismatch`: when ``deg U != n - deg S``.

    Example:
        >>> chi = DegreeForm.rational(1)
        >>> t = Series.monomial(chi, (1,))
        >>> U = LambdaChain(ChainKind.UNSTABLE, chi, 1, 1, {"a": Series.monomial(chi, (-1,))})
        >>> S = LambdaChain(ChainKind.STABLE, chi, 0, 1, {"a": t})
        >>> str(lambda_pairing(U, S))
        '1'

    """
    if U.kind is not ChainKind.UNSTABLE or S.kind is not ChainKind.STABLE:
        raise TypeError("expected an unstable chain and a stable chain")
    if U.form != S.form:
        raise DimensionMismatch("chains use different degree forms")
    if U.dimension != S.dimension or U.degree != U.dimension - S.degree:
        raise DegreeMismatch(
            "cannot pair an unstable chain of degree {} with a stable chain of degree {} in dimension {}".format(
                U.degree, S.degree, U.dimension
            )
        )
    value = Series.zero(U.form, U.domain.join(S.domain))
    for key, mu in U.coefficients.items():
        if key in S.coefficients:
            value = add(value, bounded_mul(S.coefficients[key], mu))
    return value


def coefficient_of(value: Series, i: typing.Sequence[int]):
    """Read the coefficient of ``t^i`` in a pairing value.

    Raises:
        `~novikov.errors.PrecisionExhausted`: when ``t^i`` lies at or
            beyond the cutoff of ``value``.

    """
    return value.coefficient(i)


def pairing_matrix(
    unstable: typing.Sequence[LambdaChain],
    stable: typing.Sequence[LambdaChain],
) -> Matrix:
    """Return the matrix of pairings, one row per unstable chain."""
    return [[lambda_pairing(u, s) for s in stable] for u in unstable]


# --- Unstable complex -------------------------------------------------------

@dataclass(frozen=True)
class UnstableComplex:
    """The complex of unstable chains, adjoint to a complex of stable chains.

    ``U^j`` is generated by the points of index ``n - j``. The boundary
    ``boundaries[j]`` from ``U^j`` to ``U^(j+1)`` is the plain transpose of
    the stable boundary from degree ``n - j - 1`` to ``n - j``, so that
    pairings satisfy ``<bU, S> = <U, dS>``. The differential used to
    compute cohomology carries the sign ``(-1)^(j+1)``.
    """

    form: DegreeForm
    dimension: int
    generators: typing.Mapping[int, typing.Tuple[str, ...]]
    boundaries: typing.Mapping[int, Matrix]

    def rank(self, j: int) -> int:
        return len(self.generators.get(j, ()))

    def boundary(self, j: int) -> Matrix:
        """Return the unsigned boundary from ``U^j`` to ``U^(j+1)``."""
        if j in self.boundaries:
            return self.boundaries[j]
        return [[Series.zero(self.form) for _ in range(self.rank(j))] for _ in range(self.rank(j + 1))]

    def differential(self, j: int) -> Matrix:
        """Return the signed differential ``(-1)^(j+1)`` times the boundary."""
        matrix = self.boundary(j)
        if j % 2:
            return [list(row) for row in matrix]
        return [[-entry for entry in row] for row in matrix]

    def as_free_complex(self, signed: bool = True) -> FreeComplex:
        """Return the complex with the signed differential or the plain boundary."""
        get = self.differential if signed else self.boundary
        return FreeComplex(self.form, dict(self.generators), {j: get(j) for j in self.boundaries})

    def apply(self, chain: LambdaChain) -> LambdaChain:
        """Apply the unsigned boundary to an unstable chain."""
        vector = unstable_chain_vector(chain, self)
        column = [[v] for v in vector]
        image = matmul(self.boundary(chain.degree), column, self.form, len(vector))
        return LambdaChain.from_vector(
            ChainKind.UNSTABLE,
            self.form,
            chain.degree + 1,
            self.dimension,
            self.generators.get(chain.degree + 1, ()),
            [row[0] for row in image],
        )


def adjoint_boundary(C: FreeComplex, dimension: typing.Optional[int] = None) -> UnstableComplex:
    """Build the unstable complex adjoint to a complex of stable chains.

    Arguments:
        C (`~novikov.homology.FreeComplex`): the stable complex, graded by
            Morse index.
        dimension (int, optional): the dimension ``n`` of the manifold,
            defaulting to the highest degree of ``C``.

    Example:
        >>> chi = DegreeForm.rational(1)
        >>> t = Series.monomial(chi, (1,))
        >>> C = FreeComplex(chi, {0: ("a",), 1: ("b",)}, {0: [[1 - t]]})
        >>> U = adjoint_boundary(C)
        >>> U.generators[0], str(U.boundary(0)[0][0])
        (('b',), '1 - t')

    """
    n = max(C.degrees, default=0) if dimension is None else dimension
    generators = {j: tuple(C.generators.get(n - j, ())) for j in range(n + 1)}
    boundaries = {
        j: transpose(C.boundary(n - j - 1), C.rank(n - j - 1)) for j in range(n)
    }
    return UnstableComplex(C.form, n, generators, boundaries)


def stable_chain_vector(chain: LambdaChain, C: FreeComplex) -> typing.List[Series]:
    """Return the coordinates of a stable chain in the generators of ``C``."""
    if chain.kind is not ChainKind.STABLE:
        raise TypeError("expected a stable chain")
    return _coordinates(chain, C.generators.get(chain.degree, ()))


def unstable_chain_vector(chain: LambdaChain, U: UnstableComplex) -> typing.List[Series]:
    """Return the coordinates of an unstable chain in the generators of ``U``."""
    if chain.kind is not ChainKind.UNSTABLE:
        raise TypeError("expected an unstable chain")
    return _coordinates(chain, U.generators.get(chain.degree, ()))


def adjointness_defects(C: FreeComplex, U: UnstableComplex) -> typing.List[typing.Tuple[int, str, str]]:
    """List the basis pairs where ``<bU, S> != <U, dS>``.

    Every unstable basis chain of ``U^j`` is tested against every stable
    basis chain of degree ``n - j - 1``; each failure is reported as
    ``(j, unstable id, stable id)``.
    """
    n = U.dimension
    defects = []
    for j in range(n):
        k = n - j - 1
        for y in U.generators.get(j, ()):
            u = LambdaChain(ChainKind.UNSTABLE, C.form, j, n, {y: Series.one(C.form)})
            bu = U.apply(u)
            for x in C.generators.get(k, ()):
                s = LambdaChain(ChainKind.STABLE, C.form, k, n, {x: Series.one(C.form)})
                ds = LambdaChain.from_vector(
                    ChainKind.STABLE, C.form, k + 1, n,
                    C.generators.get(k + 1, ()),
                    C.apply(k, stable_chain_vector(s, C)),
                )
                if lambda_pairing(bu, s) - lambda_pairing(u, ds):
                    defects.append((j, y, x))
    if defects:
        logger.warning("adjointness fails on %d basis pair(s)", len(defects))
    return defects


# --- Torsion and linking ----------------------------------------------------

def _as_complex(complex_, kind):
    if isinstance(complex_, UnstableComplex):
        if kind is not ChainKind.UNSTABLE:
            raise TypeError("expected an unstable chain for an unstable complex")
        return complex_.as_free_complex(signed=True), complex_.dimension
    if kind is not ChainKind.STABLE:
        raise TypeError("expected a stable chain for a stable complex")
    return complex_, None


def solve_in_complex(
    C: typing.Union[FreeComplex, UnstableComplex],
    target: LambdaChain,
    precision,
) -> typing.Tuple[Series, LambdaChain]:
    """Find ``lambda`` and ``V`` with ``d V = lambda * target``.

    With ``U * d * W = D`` the Smith normal form of the differential into
    the degree of ``target`` and ``y = U * target``, a solution exists iff
    ``y_i`` vanishes past the rank; ``lambda`` is then the least common
    multiple of ``d_i / gcd(d_i, y_i)`` and ``V = W * z`` with
    ``z_i = lambda * y_i / d_i``.

    Raises:
        `ValueError`: when ``target`` is not a cycle through ``precision``.
        `~novikov.errors.NoSolution`: when no multiple of ``target`` is a
            boundary, i.e. its class is not torsion.

    Example:
        >>> chi = DegreeForm.rational(1)
        >>> C = FreeComplex(chi, {0: ("a",), 1: ("b",)}, {0: [[Series.constant(chi, 2)]]})
        >>> target = LambdaChain(ChainKind.STABLE, chi, 1, 1, {"b": Series.one(chi)})
        >>> lam, V = solve_in_complex(C, target, 10)
        >>> str(lam), str(V.coefficient("a"))
        ('2', '1')

    """
    F, dimension = _as_complex(C, target.kind)
    dimension = target.dimension if dimension is None else dimension
    precision = F.form.level(precision)
    k = target.degree
    y = _coordinates(target, F.generators.get(k, ()))
    image = F.apply(k, y)
    if not all(v.is_zero_through(precision) for v in image):
        raise ValueError("the target chain is not a cycle")

    snf = smith_normal_form(F.boundary(k - 1), precision, F.rank(k - 1), F.form)
    w = [row[0] for row in matmul(snf.U, [[v] for v in y], F.form, len(y))]
    for i in range(snf.rank, len(w)):
        if not w[i].is_zero_through(precision):
            raise NoSolution("no multiple of the target is a boundary: coordinate {} survives".format(i))

    lam = Series.one(F.form)
    for d, v in zip(snf.diagonal, w):
        if is_unit(d) or v.is_zero_through(precision):
            continue
        g = gcd(d, v, precision)
        lam = lcm(lam, divide(d, g, precision), precision)
    lam = normalize(lam, precision)

    z = []
    for i in range(F.rank(k - 1)):
        if i < snf.rank and not w[i].is_zero_through(precision):
            z.append(divide(lam * w[i], snf.diagonal[i], precision))
        else:
            z.append(Series.zero(F.form))
    v = [row[0] for row in matmul(snf.V, [[c] for c in z], F.form, len(z))] if z else []
    V = LambdaChain.from_vector(
        target.kind, F.form, k - 1, dimension, F.generators.get(k - 1, ()), v
    )
    logger.debug("solved d V = (%s) target in degree %d", lam, k)
    return lam, V


def is_torsion_class(
    C: typing.Union[FreeComplex, UnstableComplex],
    chain: LambdaChain,
    precision,
) -> bool:
    """Whether a cycle represents a torsion class."""
    try:
        solve_in_complex(C, chain, precision)
    except NoSolution:
        return False
    return True


def linking_from_certificate(lam: Series, V: LambdaChain, s: LambdaChain, precision) -> Series:
    """Evaluate ``(1/lambda) <V, s>`` with every coefficient taken modulo 1.

    Example:
        >>> chi = DegreeForm.rational(1)
        >>> V = LambdaChain(ChainKind.UNSTABLE, chi, 0, 1, {"b": Series.constant(chi, -1)})
        >>> s = LambdaChain(ChainKind.STABLE, chi, 1, 1, {"b": Series.one(chi)})
        >>> str(linking_from_certificate(Series.constant(chi, 2), V, s, 10))
        '1/2'

    """
    form = lam.form
    precision = form.level(precision)
    value = lambda_pairing(V, s).to_rationals()
    if value.is_zero():
        return Series.zero(form, CoefficientDomain.RATIONALS)
    lam = lam.to_rationals()
    if lam.is_exact() and len(lam) == 1:
        ((e, c),) = lam.items()
        inverse = Series.monomial(form, tuple(-x for x in e), fractions.Fraction(1) / c, CoefficientDomain.RATIONALS)
    else:
        low = value.valuation() if value else value.cutoff
        inverse = invert(lam, precision - low + lam.valuation())
    result = bounded_mul(inverse, value)
    if result.cutoff is not None and precision < result.cutoff:
        result = result.truncate(precision)
    return result.map_coefficients(lambda c: fractions.Fraction(c) % 1)


def linking_number(C: FreeComplex, u: LambdaChain, s: LambdaChain, precision) -> Series:
    """Compute the linking number of a torsion unstable class and a torsion stable class.

    ``dV = lambda * u`` is solved in the unstable complex adjoint to ``C``,
    and the class of ``(1/lambda) <V, s>`` is returned as a series with
    rational coefficients in ``[0, 1)``.

    Raises:
        `~novikov.errors.NotTorsion`: when either class is not torsion.

    """
    U = adjoint_boundary(C, u.dimension)
    try:
        lam, V = solve_in_complex(U, u, precision)
    except NoSolution as err:
        raise NotTorsion("the unstable class is not torsion ({})".format(err)) from err
    if not is_torsion_class(C, s, precision):
        raise NotTorsion("the stable class is not torsion")
    return linking_from_certificate(lam, V, s, precision)
