# coding: utf-8
"""Novikov rings and Morse–Novikov complexes in Python.

The `novikov` package computes exactly in Novikov rings of formal Laurent
series with compact/forward support, computes Smith normal forms and
homology over them, and assembles Morse–Novikov complexes from flow-line
data:

    >>> import novikov
    >>> data = novikov.example("torsion_demo")
    >>> C = novikov.assemble_novikov_complex(data)
    >>> H = novikov.homology.homology(C, 10)
    >>> H.betti
    (0, 0)
    >>> [str(t) for t in H[1].torsion]
    ['2']

Submodules:
    `novikov.degree`: degree forms and exact comparisons of degrees.
    `novikov.series`: series arithmetic, division and normal forms.
    `novikov.cone`: lattice cones and conical series.
    `novikov.homology`: free complexes, Smith normal forms, homology.
    `novikov.morse`: flow data, Novikov complexes, pairings and linking.
    `novikov.io`: text and JSON formats.
    `novikov.data`: the bundled example corpus.

"""

import importlib.metadata

from . import cone, data, degree, errors, homology, io, morse, series
from .cone import ConeSpec, certify_conical, cone_contains
from .data import example
from .degree import DegreeForm, DegreeValue, FormalRealBasis, Ordering, compare
from .errors import NovikovError
from .homology import (
    FreeComplex,
    HomologySummary,
    check_inequalities,
    smith_normal_form,
)
from .io import dump, dumps, evaluate, load, loads, parse_series
from .morse import (
    ChainKind,
    CriticalPoint,
    FlowLineRecord,
    LambdaChain,
    MorseData,
    assemble_novikov_complex,
    lambda_pairing,
    linking_number,
)
from .series import CoefficientDomain, Series, divide, gcd, invert

__author__ = "The novikov developers"
__license__ = "MIT"

try:
    __version__ = importlib.metadata.version(__name__)
except importlib.metadata.PackageNotFoundError:
    __version__ = "0.1.0"
