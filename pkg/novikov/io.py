# coding: utf-8
"""Text and JSON formats for series, Morse data, chains and matrices.

Series are rendered by increasing degree, the cutoff of a truncated series
being written as a trailing ``O(deg M)`` term. The same text is accepted
back by `parse_series`, and `evaluate` extends it with the ``inv`` and
``div`` operations of the Novikov ring:

    >>> chi = DegreeForm.rational(1)
    >>> print(evaluate("inv(1 - t)", chi, 4))
    1 + t + t^2 + t^3 + O(deg 4)
    >>> print(evaluate("div(1 - t^2, 1 - t)", chi, 4))
    1 + t

Morse data is stored in versioned JSON documents, read with `load` or
`loads` and written with `dump` or `dumps`.

"""

import fractions
import io
import json
import logging
import os
import re
import typing

from .cone import ConeSpec
from .degree import DegreeForm, DegreeValue, FormalRealBasis, as_fraction
from .errors import (
    DimensionMismatch,
    IndexMismatch,
    NovikovError,
    SchemaError,
    SeriesSyntaxError,
)
from .homology import FreeComplex, LaurentComplex, Matrix
from .morse import ChainKind, CriticalPoint, FlowLineRecord, LambdaChain, MorseData
from .series import CoefficientDomain, Series, divide, invert

__all__ = [
    "SCHEMA_VERSION",
    "format_series",
    "format_degree",
    "parse_series",
    "parse_degree",
    "evaluate",
    "form_from_dict",
    "form_to_dict",
    "morse_data_from_dict",
    "morse_data_to_dict",
    "chains_from_dict",
    "chain_to_dict",
    "matrix_from_dict",
    "matrix_to_dict",
    "complex_from_dict",
    "cone_from_dict",
    "read_document",
    "load",
    "loads",
    "dump",
    "dumps",
]

logger = logging.getLogger(__name__)

#: The version written to, and expected in, every JSON document.
SCHEMA_VERSION = 1


# --- Rendering --------------------------------------------------------------

def _monomial_text(exponent: typing.Tuple[int, ...]) -> str:
    if not any(exponent):
        return ""
    if len(exponent) == 1:
        return "t" if exponent[0] == 1 else "t^{}".format(exponent[0])
    return "t^({})".format(",".join(map(str, exponent)))


def format_degree(value: DegreeValue) -> str:
    """Render a degree as a linear combination of the basis reals."""
    return str(value)


def format_series(series: Series) -> str:
    """Render a series by increasing degree.

    Example:
        >>> chi = DegreeForm.standard(2)
        >>> print(format_series(Series(chi, {(0, 0): 1, (1, -1): -2}, cutoff=2)))
        -2*t^(1,-1) + 1 + O(deg 2)

    """
    parts = []
    for exponent, coefficient in series.items():
        monomial = _monomial_text(exponent)
        size = abs(coefficient)
        if not monomial:
            text = str(size)
        elif size == 1:
            text = monomial
        else:
            text = "{}*{}".format(size, monomial)
        parts.append((coefficient < 0, text))
    if series.cutoff is not None:
        parts.append((False, "O(deg {})".format(format_degree(series.cutoff))))
    if not parts:
        return "0"
    negative, text = parts[0]
    out = "-" + text if negative else text
    for negative, text in parts[1:]:
        out += (" - " if negative else " + ") + text
    return out


# --- Parsing ----------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<number>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<punct>[-+*/^(),]))")


def _tokenize(text: str) -> typing.List[typing.Tuple[str, str, int]]:
    tokens = []
    position = 0
    while True:
        while position < len(text) and text[position].isspace():
            position += 1
        if position >= len(text):
            break
        match = _TOKEN.match(text, position)
        if match is None:
            raise SeriesSyntaxError("unexpected character {!r}".format(text[position]), text, position)
        kind = match.lastgroup
        tokens.append((kind, match.group(kind), match.start(kind)))
        position = match.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser(object):
    """A recursive-descent parser evaluating series expressions.

    Grammar::

        sum      := product (("+" | "-") product)*
        product  := unary ("*" unary)*
        unary    := "-" unary | atom
        atom     := rational | "t" ["^" exponent] | "(" sum ")"
                  | "inv" "(" sum ")" | "div" "(" sum "," sum ")"
                  | "O" "(" "deg" degree ")"
        exponent := ["-"] integer | "(" ["-"] integer ("," ["-"] integer)* ")"
        degree   := dterm (("+" | "-") dterm)*
        dterm    := ["-"] (rational ["*" symbol] | "(" rational ")" "*" symbol | symbol)

    """

    def __init__(self, text, form, domain, precision):
        self.text = text
        self.form = form
        self.domain = domain
        self.precision = precision
        self.tokens = _tokenize(text)
        self.index = 0

    # -- token helpers -------------------------------------------------------

    @property
    def peek(self):
        return self.tokens[self.index]

    def error(self, message, position=None):
        if position is None:
            position = self.peek[2]
        return SeriesSyntaxError(message, self.text, position)

    def accept(self, value):
        if self.peek[1] == value and self.peek[0] != "end":
            self.index += 1
            return True
        return False

    def expect(self, value):
        if not self.accept(value):
            found = self.peek[1] or "end of input"
            raise self.error("expected {!r}, found {!r}".format(value, found))

    def integer(self):
        kind, value, _ = self.peek
        if kind != "number":
            raise self.error("expected an integer, found {!r}".format(value or "end of input"))
        self.index += 1
        return int(value)

    def signed_integer(self):
        sign = -1 if self.accept("-") else 1
        return sign * self.integer()

    def rational(self):
        position = self.peek[2]
        value = fractions.Fraction(self.integer())
        if self.peek[1] == "/":
            self.index += 1
            denominator = self.integer()
            if not denominator:
                raise self.error("division by zero in a rational literal", position)
            value /= denominator
        return value

    # -- series --------------------------------------------------------------

    def parse(self) -> Series:
        value = self.sum()
        if self.peek[0] != "end":
            raise self.error("unexpected {!r}".format(self.peek[1]))
        return value

    def sum(self) -> Series:
        value = self.product()
        while self.peek[1] in ("+", "-") and self.peek[0] == "punct":
            negative = self.peek[1] == "-"
            self.index += 1
            other = self.product()
            value = self.guard(lambda: value - other if negative else value + other, self.peek[2])
        return value

    def product(self) -> Series:
        value = self.unary()
        while self.accept("*"):
            position = self.peek[2]
            other = self.unary()
            value = self.guard(lambda: value * other, position)
        return value

    def unary(self) -> Series:
        if self.accept("-"):
            return -self.unary()
        return self.atom()

    def atom(self) -> Series:
        kind, value, position = self.peek
        if kind == "number":
            number = self.rational()
            if number.denominator != 1 and self.domain is CoefficientDomain.INTEGERS:
                raise self.error("rational literal {} needs rational coefficients".format(number), position)
            return Series.constant(self.form, number, self.domain)
        if self.accept("("):
            inner = self.sum()
            self.expect(")")
            return inner
        if kind != "name":
            raise self.error("unexpected {!r}".format(value or "end of input"))
        self.index += 1
        if value == "t":
            return self.monomial(position)
        if value == "O":
            self.expect("(")
            if not self.accept("deg"):
                raise self.error("expected 'deg' in a cutoff term")
            cutoff = self.degree()
            self.expect(")")
            return Series.zero(self.form, self.domain, cutoff)
        if value == "inv":
            self.expect("(")
            alpha = self.sum()
            self.expect(")")
            window = self.window(value, position)
            return self.guard(lambda: invert(alpha, window), position)
        if value == "div":
            self.expect("(")
            gamma = self.sum()
            self.expect(",")
            alpha = self.sum()
            self.expect(")")
            window = self.window(value, position)
            return self.guard(lambda: divide(gamma, alpha, window), position)
        raise self.error("unknown name {!r}".format(value), position)

    def monomial(self, position) -> Series:
        if not self.form.q:
            raise self.error("the ring has no variable when q = 0", position)
        if not self.accept("^"):
            if self.form.q != 1:
                raise self.error("t needs an exponent in Z^{}".format(self.form.q), position)
            exponent = (1,)
        elif self.accept("("):
            exponent = [self.signed_integer()]
            while self.accept(","):
                exponent.append(self.signed_integer())
            self.expect(")")
            exponent = tuple(exponent)
        else:
            exponent = (self.signed_integer(),)
        if len(exponent) != self.form.q:
            raise self.error("t needs an exponent in Z^{}".format(self.form.q), position)
        return Series.monomial(self.form, exponent, 1, self.domain)

    def window(self, name, position):
        if self.precision is None:
            raise self.error("{}() needs a working precision".format(name), position)
        return self.precision

    def guard(self, operation, position):
        try:
            return operation()
        except NovikovError as err:
            if getattr(err, "position", None) is None:
                err.position = position
            raise

    # -- degrees -------------------------------------------------------------

    def degree(self) -> DegreeValue:
        value = self.dterm()
        while self.peek[1] in ("+", "-") and self.peek[0] == "punct":
            negative = self.peek[1] == "-"
            self.index += 1
            term = self.dterm()
            value = value - term if negative else value + term
        return value

    def dterm(self) -> DegreeValue:
        basis = self.form.basis
        sign = -1 if self.accept("-") else 1
        kind, value, position = self.peek
        if kind == "name":
            self.index += 1
            return self.symbol(value, position) * sign
        if self.accept("("):
            inner = -1 if self.accept("-") else 1
            coefficient = inner * self.rational()
            self.expect(")")
            self.expect("*")
            kind, value, position = self.peek
            if kind != "name":
                raise self.error("expected a basis symbol")
            self.index += 1
            return self.symbol(value, position) * (sign * coefficient)
        coefficient = sign * self.rational()
        if self.accept("*"):
            kind, value, position = self.peek
            if kind != "name":
                raise self.error("expected a basis symbol")
            self.index += 1
            return self.symbol(value, position) * coefficient
        return basis.rational(coefficient)

    def symbol(self, name, position) -> DegreeValue:
        try:
            return self.form.basis.symbol(name)
        except KeyError:
            raise self.error("unknown basis symbol {!r}".format(name), position) from None


def parse_series(text: str, form: DegreeForm, domain=CoefficientDomain.INTEGERS) -> Series:
    """Parse a series literal, as written by `format_series`.

    Raises:
        `~novikov.errors.SeriesSyntaxError`: when the text is not a valid
            literal, with the offending position.

    Example:
        >>> chi = DegreeForm.rational(1)
        >>> parse_series("1 - 2*t^3 + O(deg 5)", chi).coefficient((3,))
        -2

    """
    return _Parser(text, form, CoefficientDomain(domain), None).parse()


def parse_degree(text: str, form: DegreeForm) -> DegreeValue:
    """Parse a degree such as ``3/2`` or ``1 + 2*sqrt2``."""
    parser = _Parser(text, form, CoefficientDomain.RATIONALS, None)
    value = parser.degree()
    if parser.peek[0] != "end":
        raise parser.error("unexpected {!r}".format(parser.peek[1]))
    return value


def evaluate(text: str, form: DegreeForm, precision, domain=CoefficientDomain.INTEGERS) -> Series:
    """Evaluate a series expression, computing ``inv`` and ``div`` through ``precision``.

    Arithmetic errors raised while evaluating carry a ``position``
    attribute pointing at the operation that failed.
    """
    precision = None if precision is None else form.level(precision)
    return _Parser(text, form, CoefficientDomain(domain), precision).parse()


# --- JSON documents ---------------------------------------------------------

def _require(obj, key, path, types=None):
    if not isinstance(obj, dict):
        raise SchemaError(path, "expected an object")
    if key not in obj:
        raise SchemaError("{}.{}".format(path, key), "missing field")
    value = obj[key]
    if types is not None and (not isinstance(value, types) or isinstance(value, bool) and bool not in _tuple(types)):
        raise SchemaError("{}.{}".format(path, key), "expected {}".format(_type_names(types)))
    return value


def _tuple(types):
    return types if isinstance(types, tuple) else (types,)


def _type_names(types):
    names = {bool: "a boolean", int: "an integer", str: "a string", list: "an array", dict: "an object"}
    return " or ".join(names.get(t, t.__name__) for t in _tuple(types))


def _check_header(obj, kind, path="$"):
    if not isinstance(obj, dict):
        raise SchemaError(path, "expected an object")
    version = obj.get("schema_version")
    if version != SCHEMA_VERSION:
        raise SchemaError("{}.schema_version".format(path), "expected {}, found {!r}".format(SCHEMA_VERSION, version))
    found = obj.get("kind", kind)
    if found != kind:
        raise SchemaError("{}.kind".format(path), "expected {!r}, found {!r}".format(kind, found))


def _domain(obj, path, default=CoefficientDomain.INTEGERS):
    value = obj.get("coeffs")
    if value is None:
        return default
    try:
        return CoefficientDomain(value)
    except ValueError:
        raise SchemaError("{}.coeffs".format(path), "expected 'int' or 'rat'") from None


def _series(text, form, domain, path, precision=None) -> Series:
    if isinstance(text, int) and not isinstance(text, bool):
        text = str(text)
    if not isinstance(text, str):
        raise SchemaError(path, "expected a series literal")
    try:
        return evaluate(text, form, precision, domain)
    except SeriesSyntaxError as err:
        raise SchemaError(path, "{} at column {}".format(err.msg, err.position + 1)) from err


def _degree(text, form, path) -> typing.Optional[DegreeValue]:
    if text is None:
        return None
    if isinstance(text, int) and not isinstance(text, bool):
        text = str(text)
    if not isinstance(text, str):
        raise SchemaError(path, "expected a degree literal")
    try:
        return parse_degree(text, form)
    except SeriesSyntaxError as err:
        raise SchemaError(path, err.msg) from err


def _point(value, q, path) -> typing.Tuple[int, ...]:
    if not isinstance(value, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in value):
        raise SchemaError(path, "expected an array of integers")
    if len(value) != q:
        raise SchemaError(path, "expected {} coordinate(s), found {}".format(q, len(value)))
    return tuple(value)


def form_from_dict(obj, path="$.form") -> DegreeForm:
    """Read a degree form.

    Either ``{"standard": q}``, or ``{"periods": [...], "symbols": {...}}``
    where periods are degree literals over the declared symbols, and each
    symbol maps to a list of nested ``[lo, hi]`` rational enclosures.
    """
    if not isinstance(obj, dict):
        raise SchemaError(path, "expected an object")
    if "standard" in obj:
        q = _require(obj, "standard", path, int)
        if q < 0:
            raise SchemaError("{}.standard".format(path), "expected a nonnegative integer")
        return DegreeForm.standard(q)
    symbols = obj.get("symbols", {})
    if not isinstance(symbols, dict):
        raise SchemaError("{}.symbols".format(path), "expected an object")
    try:
        basis = FormalRealBasis(list(symbols), [[tuple(map(as_fraction, pair)) for pair in r] for r in symbols.values()])
    except (TypeError, ValueError) as err:
        raise SchemaError("{}.symbols".format(path), str(err)) from err
    periods = _require(obj, "periods", path, list)
    bare = DegreeForm(basis, ())
    values = [_degree(p, bare, "{}.periods[{}]".format(path, i)) for i, p in enumerate(periods)]
    try:
        return DegreeForm(basis, tuple(values))
    except ValueError as err:
        raise SchemaError("{}.periods".format(path), str(err)) from err


def form_to_dict(form: DegreeForm) -> typing.Dict[str, typing.Any]:
    """Write a degree form in the explicit ``periods`` and ``symbols`` layout."""
    obj = {"periods": [format_degree(p) for p in form.periods]}
    if form.basis.symbols:
        obj["symbols"] = {
            name: [[str(lo), str(hi)] for lo, hi in refinements]
            for name, refinements in zip(form.basis.symbols, form.basis.enclosures)
        }
    return obj


def morse_data_from_dict(obj) -> MorseData:
    """Read and validate a ``morse-data`` document.

    Raises:
        `~novikov.errors.SchemaError`: with the path of the offending
            field, when the document does not follow the schema or the
            data is inconsistent.

    """
    _check_header(obj, "morse-data")
    form = form_from_dict(_require(obj, "form", "$", dict))
    dimension = _require(obj, "dimension", "$", int)
    name = obj.get("name", "")
    if not isinstance(name, str):
        raise SchemaError("$.name", "expected a string")
    window = _degree(obj.get("window"), form, "$.window")

    points = []
    for i, p in enumerate(_require(obj, "points", "$", list)):
        path = "$.points[{}]".format(i)
        points.append(CriticalPoint(_require(p, "id", path, str), _require(p, "index", path, int)))
    records = []
    for i, r in enumerate(obj.get("flow_lines", [])):
        path = "$.flow_lines[{}]".format(i)
        records.append(FlowLineRecord(
            _require(r, "from", path, str),
            _require(r, "to", path, str),
            _point(_require(r, "deck", path), form.q, "{}.deck".format(path)),
            _require(r, "orientation_agrees", path, bool),
        ))
    try:
        return MorseData(dimension, form, points, records, window, name).validate()
    except IndexMismatch:
        raise
    except ValueError as err:
        raise SchemaError("$", str(err)) from err


def morse_data_to_dict(data: MorseData) -> typing.Dict[str, typing.Any]:
    """Write Morse data as a ``morse-data`` document."""
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "morse-data",
        "name": data.name,
        "dimension": data.dimension,
        "form": form_to_dict(data.form),
        "window": None if data.window is None else format_degree(data.window),
        "points": [{"id": p.id, "index": p.index} for p in data.points],
        "flow_lines": [
            {"from": r.source, "to": r.target, "deck": list(r.deck), "orientation_agrees": r.orientation_agrees}
            for r in data.records
        ],
    }


def _chain(obj, kind, data, domain, path) -> LambdaChain:
    coefficients = _require(obj, "coefficients", path, dict)
    values = {}
    degrees = set()
    for key, text in coefficients.items():
        try:
            index = data.point(key).index
        except KeyError:
            raise SchemaError("{}.coefficients.{}".format(path, key), "unknown critical point") from None
        degrees.add(index if kind is ChainKind.STABLE else data.dimension - index)
        values[key] = _series(text, data.form, domain, "{}.coefficients.{}".format(path, key))
    if "degree" in obj:
        degrees.add(_require(obj, "degree", path, int))
    if len(degrees) != 1:
        raise SchemaError(path, "the chain must have exactly one degree, found {}".format(sorted(degrees)))
    return LambdaChain(kind, data.form, degrees.pop(), data.dimension, values)


def chains_from_dict(obj, data: MorseData, domain=None) -> typing.Tuple[LambdaChain, LambdaChain]:
    """Read a ``chains`` document holding an unstable and a stable chain."""
    _check_header(obj, "chains")
    domain = _domain(obj, "$") if domain is None else CoefficientDomain(domain)
    u = _chain(_require(obj, "unstable", "$", dict), ChainKind.UNSTABLE, data, domain, "$.unstable")
    s = _chain(_require(obj, "stable", "$", dict), ChainKind.STABLE, data, domain, "$.stable")
    return u, s


def chain_to_dict(chain: LambdaChain) -> typing.Dict[str, typing.Any]:
    return {
        "degree": chain.degree,
        "coefficients": {k: format_series(v) for k, v in chain.coefficients.items()},
    }


def _matrix(rows, form, domain, path, columns=None) -> Matrix:
    if not isinstance(rows, list):
        raise SchemaError(path, "expected an array of rows")
    matrix = []
    for i, row in enumerate(rows):
        if not isinstance(row, list):
            raise SchemaError("{}[{}]".format(path, i), "expected an array")
        if columns is not None and len(row) != columns:
            raise SchemaError("{}[{}]".format(path, i), "expected {} entries, found {}".format(columns, len(row)))
        columns = len(row)
        matrix.append([
            _series(text, form, domain, "{}[{}][{}]".format(path, i, j)) for j, text in enumerate(row)
        ])
    return matrix


def matrix_from_dict(obj, domain=None) -> typing.Tuple[DegreeForm, Matrix, int]:
    """Read a ``matrix`` document.

    Returns:
        `tuple`: the degree form, the matrix and its column count.

    """
    _check_header(obj, "matrix")
    form = form_from_dict(_require(obj, "form", "$", dict))
    domain = _domain(obj, "$") if domain is None else CoefficientDomain(domain)
    columns = obj.get("columns")
    if columns is not None and (not isinstance(columns, int) or isinstance(columns, bool)):
        raise SchemaError("$.columns", "expected an integer")
    matrix = _matrix(_require(obj, "rows", "$", list), form, domain, "$.rows", columns)
    return form, matrix, len(matrix[0]) if matrix else (columns or 0)


def matrix_to_dict(form: DegreeForm, matrix: Matrix, columns: int = 0) -> typing.Dict[str, typing.Any]:
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "matrix",
        "form": form_to_dict(form),
        "columns": len(matrix[0]) if matrix else columns,
        "rows": [[format_series(entry) for entry in row] for row in matrix],
    }


def complex_from_dict(obj, domain=None) -> typing.Union[FreeComplex, LaurentComplex]:
    """Read a ``complex`` or ``laurent-complex`` document.

    Boundaries are keyed by their source degree; generator labels are
    optional and default to ``e{k}_{i}``.
    """
    if not isinstance(obj, dict):
        raise SchemaError("$", "expected an object")
    kind = obj.get("kind")
    if kind not in ("complex", "laurent-complex"):
        raise SchemaError("$.kind", "expected 'complex' or 'laurent-complex', found {!r}".format(kind))
    _check_header(obj, kind)
    form = form_from_dict(_require(obj, "form", "$", dict))
    domain = _domain(obj, "$") if domain is None else CoefficientDomain(domain)
    boundaries = {}
    for key, rows in _require(obj, "boundaries", "$", dict).items():
        try:
            k = int(key)
        except ValueError:
            raise SchemaError("$.boundaries.{}".format(key), "expected an integer degree") from None
        boundaries[k] = _matrix(rows, form, domain, "$.boundaries.{}".format(key))
    try:
        if kind == "laurent-complex":
            return LaurentComplex.from_matrices(form, boundaries)
        C = FreeComplex.from_matrices(form, boundaries)
        if "generators" in obj:
            labels = {int(k): v for k, v in _require(obj, "generators", "$", dict).items()}
            C = C.relabel(labels)
        return C
    except (ValueError, DimensionMismatch) as err:
        raise SchemaError("$.boundaries", str(err)) from err


def cone_from_dict(obj, domain=None) -> typing.Tuple[ConeSpec, typing.List[typing.Tuple[int, ...]], typing.List[Series]]:
    """Read a ``cone`` document.

    Returns:
        `tuple`: the cone, the lattice points to test and the series to
        certify.

    """
    _check_header(obj, "cone")
    form = form_from_dict(obj["form"]) if "form" in obj else None
    generators = _require(obj, "generators", "$", list)
    if form is None:
        q = len(generators[0]) if generators and isinstance(generators[0], list) else 0
        form = DegreeForm.standard(q)
    domain = _domain(obj, "$") if domain is None else CoefficientDomain(domain)
    points = [_point(g, form.q, "$.generators[{}]".format(i)) for i, g in enumerate(generators)]
    try:
        cone = ConeSpec(form, tuple(points))
    except ValueError as err:
        raise SchemaError("$.generators", str(err)) from err
    tests = [_point(p, form.q, "$.points[{}]".format(i)) for i, p in enumerate(obj.get("points", []))]
    series = [_series(s, form, domain, "$.series[{}]".format(i)) for i, s in enumerate(obj.get("series", []))]
    return cone, tests, series


# --- Files ------------------------------------------------------------------

def _read(handle) -> str:
    if isinstance(handle, (str, os.PathLike)):
        with open(handle, "r", encoding="utf-8") as f:
            return f.read()
    if hasattr(handle, "read"):
        content = handle.read()
        return content.decode("utf-8") if isinstance(content, bytes) else content
    raise TypeError("expected str, PathLike or file handle, found {}".format(type(handle).__name__))


def read_document(handle) -> typing.Dict[str, typing.Any]:
    """Read a JSON document from a path or a file handle.

    Raises:
        `~novikov.errors.SchemaError`: when the content is not JSON.

    """
    text = _read(handle)
    try:
        return json.loads(text)
    except json.JSONDecodeError as err:
        raise SchemaError("$", "invalid JSON at line {} column {}: {}".format(err.lineno, err.colno, err.msg)) from err


def loads(document: str) -> MorseData:
    """Load Morse data from the string representation of a document.

    Raises:
        `~novikov.errors.SchemaError`: when the document is not valid.

    """
    return load(io.StringIO(document))


def load(fh) -> MorseData:
    """Load Morse data from a path or a file handle.

    Arguments:
        fh (str, `os.PathLike` or file handle): the document location,
            or a file handle open in text or binary mode.

    Raises:
        `TypeError`: when ``fh`` is neither a path nor a readable file.
        `~novikov.errors.SchemaError`: when the document is not valid.

    """
    data = morse_data_from_dict(read_document(fh))
    logger.debug("loaded Morse data %r with %d point(s)", data.name, len(data.points))
    return data


def dumps(data: MorseData) -> str:
    """Write Morse data as an indented JSON document."""
    return json.dumps(morse_data_to_dict(data), indent=2) + "\n"


def dump(data: MorseData, fh) -> None:
    """Write Morse data to a path or a text file handle."""
    if isinstance(fh, (str, os.PathLike)):
        with open(fh, "w", encoding="utf-8") as f:
            f.write(dumps(data))
    else:
        fh.write(dumps(data))
