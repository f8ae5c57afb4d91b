# coding: utf-8
"""Command-line interface of the `novikov` package.

Every subcommand reads its input files, runs one computation and prints a
report, either as an aligned text table or as a structured JSON
document. Errors are printed as ``error: <Name>: <message>`` and make the
command exit with status 1.
"""

import argparse
import fractions
import json
import logging
import sys
import typing

from . import data, io
from .cone import certify_conical, cone_contains, fundamental_lattice_points
from .degree import DegreeForm, as_fraction
from .errors import NotConical, NovikovError, SeriesSyntaxError
from .homology import (
    LaurentComplex,
    check_inequalities,
    extend_scalars,
    homology,
    smith_normal_form,
)
from .morse import MorseData, assemble_novikov_complex, lambda_pairing, linking_number
from .series import CoefficientDomain

__all__ = [
    "DEFAULT_PRECISION",
    "main",
    "cmd_ring",
    "cmd_homology",
    "cmd_pairing",
    "cmd_cone",
    "cmd_snf",
    "cmd_extend",
    "cmd_examples",
]

logger = logging.getLogger(__name__)

#: The working precision used when ``--precision`` is not given.
DEFAULT_PRECISION = 10


# --- Helpers ----------------------------------------------------------------

def _precision(text: str) -> fractions.Fraction:
    try:
        value = as_fraction(text)
    except (TypeError, ValueError):
        raise argparse.ArgumentTypeError("invalid rational precision: {!r}".format(text)) from None
    if value <= 0:
        raise argparse.ArgumentTypeError("precision must be strictly positive")
    return value


def _emit(args, table: str, structured: typing.Dict[str, typing.Any]) -> None:
    if args.format == "structured":
        print(json.dumps(structured, indent=2, sort_keys=True))
    else:
        print(table)


def _morse_data(args) -> MorseData:
    if args.example is not None:
        if args.file is not None:
            raise SystemExit("error: give either a Morse data file or --example, not both")
        return data.example(args.example)
    if args.file is None:
        raise SystemExit("error: a Morse data file or --example is required")
    return io.load(args.file)


def _inequality_lines(report) -> typing.List[str]:
    lines = ["inequalities:"]
    for label, family in (("weak", report.weak), ("strong", report.strong)):
        for i in family:
            lines.append("  {:<6}  k={}  {} >= {}  slack {}".format(label, i.degree, i.lhs, i.rhs, i.slack))
    lhs, rhs = report.euler
    lines.append("euler: {} {} {}".format(lhs, "=" if lhs == rhs else "!=", rhs))
    return lines


def _inequality_dict(report) -> typing.Dict[str, typing.Any]:
    def rows(family):
        return [{"degree": i.degree, "lhs": i.lhs, "rhs": i.rhs, "slack": i.slack} for i in family]
    return {
        "weak": rows(report.weak),
        "strong": rows(report.strong),
        "euler": list(report.euler),
        "ok": report.ok,
    }


# --- Commands ---------------------------------------------------------------

def cmd_ring(args) -> int:
    """Evaluate a series expression and print its canonical rendering."""
    if args.expression is not None:
        text = args.expression
    elif args.file is not None:
        with open(args.file, "r", encoding="utf-8") as f:
            text = f.read().strip()
    else:
        raise SystemExit("error: an expression file or -e EXPRESSION is required")
    form = DegreeForm.standard(args.rank)
    value = io.evaluate(text, form, args.precision, args.coeffs or CoefficientDomain.INTEGERS)
    _emit(args, str(value), {
        "expression": text,
        "precision": str(args.precision),
        "value": str(value),
        "exact": value.is_exact(),
    })
    return 0


def cmd_homology(args) -> int:
    """Assemble a Novikov complex, compute its homology and check the inequalities."""
    morse = _morse_data(args)
    C = assemble_novikov_complex(morse)
    H = homology(C, args.precision)
    report = check_inequalities(H)
    logger.info("homology of %s: betti %s", morse.name or args.file, H.betti)
    verified = C.report is not None and C.report.ok
    lines = [
        "complex: {}".format(morse.name or args.file),
        "precision: {}".format(H.precision),
        H.to_table(),
    ]
    lines.extend(_inequality_lines(report))
    lines.append("verification: {}".format("ok" if verified else "FAILED (d^2 != 0)"))
    structured = {
        "name": morse.name,
        "homology": H.to_dict(),
        "inequalities": _inequality_dict(report),
        "verified": verified,
    }
    if C.report is not None and not C.report.ok:
        structured["violations"] = [
            {"degree": k, "row": i, "column": j} for k, i, j, _ in C.report.violations
        ]
    _emit(args, "\n".join(lines), structured)
    return 0 if verified else 1


def cmd_pairing(args) -> int:
    """Pair two chains, or compute their linking number with ``--linking``."""
    morse = _morse_data(args)
    u, s = io.chains_from_dict(io.read_document(args.chains), morse, args.coeffs)
    if args.linking:
        C = assemble_novikov_complex(morse)
        value = linking_number(C, u, s, args.precision)
        table = "{} mod Lambda".format(value)
    else:
        value = lambda_pairing(u, s)
        table = str(value)
    _emit(args, table, {
        "linking": args.linking,
        "value": str(value),
        "unstable": io.chain_to_dict(u),
        "stable": io.chain_to_dict(s),
    })
    return 0


def cmd_cone(args) -> int:
    """Test lattice points and series against a cone."""
    cone, points, series = io.cone_from_dict(io.read_document(args.file), args.coeffs)
    lines = ["cone: {} generator(s){}".format(len(cone.generators), ", simplicial" if cone.is_simplicial() else "")]
    structured: typing.Dict[str, typing.Any] = {
        "generators": [list(g) for g in cone.generators],
        "simplicial": cone.is_simplicial(),
        "points": [],
        "series": [],
    }
    for p in points:
        inside = cone_contains(cone, p)
        lines.append("{}: {}".format(list(p), "in cone" if inside else "not in cone"))
        structured["points"].append({"point": list(p), "in_cone": inside})
    for alpha in series:
        try:
            cert = certify_conical(alpha, cone)
        except NotConical as err:
            lines.append("{}: not conical, t^{} escapes".format(alpha, list(err.witness)))
            structured["series"].append({"series": str(alpha), "conical": False, "witness": list(err.witness)})
        else:
            lines.append("{}: conical with shift {}".format(alpha, list(cert.shift)))
            structured["series"].append({"series": str(alpha), "conical": True, "shift": list(cert.shift)})
    if args.fundamental:
        fundamental = sorted(fundamental_lattice_points(cone))
        lines.append("fundamental points: {}".format(", ".join(str(list(p)) for p in fundamental)))
        structured["fundamental"] = [list(p) for p in fundamental]
    _emit(args, "\n".join(lines), structured)
    return 0


def cmd_snf(args) -> int:
    """Compute a certified Smith normal form of a matrix."""
    form, matrix, columns = io.matrix_from_dict(io.read_document(args.file), args.coeffs)
    snf = smith_normal_form(matrix, args.precision, columns, form)
    lines = [
        "shape: {}x{}".format(*snf.shape),
        "rank: {}".format(snf.rank),
        "diagonal: {}".format(", ".join(str(d) for d in snf.diagonal) or "-"),
        "certified through degree {}".format(snf.precision),
    ]
    _emit(args, "\n".join(lines), {
        "shape": list(snf.shape),
        "rank": snf.rank,
        "diagonal": [str(d) for d in snf.diagonal],
        "precision": str(snf.precision),
        "U": [[str(e) for e in row] for row in snf.U],
        "V": [[str(e) for e in row] for row in snf.V],
    })
    return 0


def cmd_extend(args) -> int:
    """Extend a Laurent complex to the Novikov ring and compute its homology."""
    laurent = io.complex_from_dict(io.read_document(args.file), args.coeffs)
    if not isinstance(laurent, LaurentComplex):
        raise SystemExit("error: expected a 'laurent-complex' document")
    units = laurent.unit_entries()
    C = extend_scalars(laurent)
    H = homology(C, args.precision)
    report = check_inequalities(H)
    over_l = sum(1 for _, _, _, l, _ in units if l)
    over_lambda = sum(1 for _, _, _, _, n in units if n)
    lines = [
        "nonzero entries: {}".format(len(units)),
        "units over L: {}".format(over_l),
        "units over Lambda: {}".format(over_lambda),
        H.to_table(),
    ]
    lines.extend(_inequality_lines(report))
    _emit(args, "\n".join(lines), {
        "entries": [
            {"degree": k, "row": i, "column": j, "laurent_unit": l, "novikov_unit": n}
            for k, i, j, l, n in units
        ],
        "homology": H.to_dict(),
        "inequalities": _inequality_dict(report),
    })
    return 0


def cmd_examples(args) -> int:
    """List the bundled examples."""
    rows = []
    for name in data.names():
        morse = data.example(name)
        rows.append({
            "name": name,
            "dimension": morse.dimension,
            "q": morse.form.q,
            "points": len(morse.points),
            "flow_lines": len(morse.records),
        })
    table = "\n".join(
        "{name}  n={dimension}  q={q}  points={points}  flow_lines={flow_lines}".format(**row) for row in rows
    )
    _emit(args, table, {"directory": str(data.examples_dir()), "examples": rows})
    return 0


# --- Entry point ------------------------------------------------------------

def _parser() -> argparse.ArgumentParser:
    from . import __version__

    parser = argparse.ArgumentParser(
        prog="novikov",
        description="Novikov rings and Morse-Novikov complexes.",
    )
    parser.add_argument("--version", action="version", version="%(prog)s {}".format(__version__))
    parser.add_argument(
        "--precision", type=_precision, default=fractions.Fraction(DEFAULT_PRECISION),
        help="working precision, a positive rational degree (default: %(default)s)",
    )
    parser.add_argument(
        "--coeffs", choices=[d.value for d in CoefficientDomain], default=None,
        help="coefficient domain of series literals (default: from the document, else int)",
    )
    parser.add_argument(
        "--format", choices=["table", "structured"], default="table",
        help="output format (default: %(default)s)",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="log more, repeat for debug output")
    commands = parser.add_subparsers(dest="command", metavar="COMMAND")
    commands.required = True

    ring = commands.add_parser("ring", help="evaluate a series expression")
    ring.add_argument("file", nargs="?", help="a file holding the expression")
    ring.add_argument("-e", "--expression", help="the expression itself")
    ring.add_argument("--rank", type=int, default=1, help="the rank q of the lattice (default: %(default)s)")
    ring.set_defaults(run=cmd_ring)

    hom = commands.add_parser("homology", help="compute Novikov homology of Morse data")
    hom.add_argument("file", nargs="?", help="a morse-data document")
    hom.add_argument("--example", help="use a bundled example instead of a file")
    hom.set_defaults(run=cmd_homology)

    pairing = commands.add_parser("pairing", help="pair an unstable and a stable chain")
    pairing.add_argument("file", nargs="?", help="a morse-data document")
    pairing.add_argument("chains", help="a chains document")
    pairing.add_argument("--example", help="use a bundled example instead of a file")
    pairing.add_argument("--linking", action="store_true", help="compute the linking number of torsion classes")
    pairing.set_defaults(run=cmd_pairing)

    cone = commands.add_parser("cone", help="test points and series against a cone")
    cone.add_argument("file", help="a cone document")
    cone.add_argument("--fundamental", action="store_true", help="list the fundamental lattice points")
    cone.set_defaults(run=cmd_cone)

    snf = commands.add_parser("snf", help="compute a Smith normal form")
    snf.add_argument("file", help="a matrix document")
    snf.set_defaults(run=cmd_snf)

    extend = commands.add_parser("extend", help="extend a Laurent complex and compute homology")
    extend.add_argument("file", help="a laurent-complex document")
    extend.set_defaults(run=cmd_extend)

    examples = commands.add_parser("examples", help="list the bundled examples")
    examples.set_defaults(run=cmd_examples)
    return parser


def main(argv: typing.Optional[typing.Sequence[str]] = None) -> int:
    parser = _parser()
    args = parser.parse_args(argv)
    level = logging.WARNING if not args.verbose else logging.INFO if args.verbose == 1 else logging.DEBUG
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    try:
        return args.run(args)
    except SeriesSyntaxError as err:
        print("error: {}: {} at column {}".format(type(err).__name__, err.msg, err.position + 1), file=sys.stderr)
    except NovikovError as err:
        position = getattr(err, "position", None)
        where = "" if position is None else " (at column {})".format(position + 1)
        print("error: {}: {}{}".format(type(err).__name__, err, where), file=sys.stderr)
    except (KeyError, OSError) as err:
        print("error: {}: {}".format(type(err).__name__, err), file=sys.stderr)
    return 1
