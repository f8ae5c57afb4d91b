# coding: utf-8
"""The bundled corpus of example Morse data.

The corpus directory can be replaced by setting the ``NOVIKOV_EXAMPLES``
environment variable to another directory of ``morse-data`` documents.

Example:
    >>> names()
    ['circle_degree1', 'sphere_height', 'torsion_demo', 'two_variable_demo']
    >>> example("torsion_demo").dimension
    1

"""

import os
import pathlib
import typing

__all__ = ["ENVIRONMENT_VARIABLE", "examples_dir", "names", "path", "example"]

#: The environment variable overriding the corpus directory.
ENVIRONMENT_VARIABLE = "NOVIKOV_EXAMPLES"


def examples_dir() -> pathlib.Path:
    """Return the directory the examples are read from."""
    override = os.environ.get(ENVIRONMENT_VARIABLE)
    if override:
        return pathlib.Path(override)
    return pathlib.Path(__file__).parent


def names() -> typing.List[str]:
    """Return the sorted names of the available examples."""
    return sorted(p.stem for p in examples_dir().glob("*.json"))


def path(name: str) -> pathlib.Path:
    """Return the path of the example document called ``name``.

    Raises:
        `KeyError`: when no such example exists.

    """
    candidate = examples_dir().joinpath("{}.json".format(name))
    if not candidate.is_file():
        raise KeyError("unknown example {!r}, expected one of {}".format(name, ", ".join(names())))
    return candidate


def example(name: str):
    """Load the example called ``name`` as `~novikov.morse.MorseData`."""
    from ..io import load
    return load(path(name))
