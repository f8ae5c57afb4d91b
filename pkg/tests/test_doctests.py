# coding: utf-8
"""Test doctest contained tests in every file of the module.
"""

import sys
import doctest
import warnings
import pprint
import types

import novikov


def _load_tests_from_module(tests, module, globs, setUp=None, tearDown=None, seen=None):
    """Load tests from module, iterating through submodules"""
    seen = set() if seen is None else seen
    if module.__name__ in seen:
        return tests
    seen.add(module.__name__)

    module.__test__ = {}
    for name in dir(module):
        if name.startswith("_"):
            continue
        attr = getattr(module, name)
        if isinstance(attr, types.ModuleType):
            if attr.__name__.startswith("novikov"):
                _load_tests_from_module(tests, attr, globs, setUp, tearDown, seen)
        elif getattr(attr, "__module__", None) == module.__name__:
            module.__test__[name] = attr

    module_globs = dict(module.__dict__)
    module_globs.update(globs)
    tests.addTests(doctest.DocTestSuite(
        module,
        globs=module_globs,
        setUp=setUp,
        tearDown=tearDown,
        optionflags=doctest.ELLIPSIS,
    ))

    return tests


def load_tests(loader, tests, ignore):
    """load_test function used by unittest to find the doctests"""

    globs = {
        "novikov": novikov,
        "pprint": pprint.pprint,
    }

    if not sys.argv[0].endswith('green'):
        tests = _load_tests_from_module(tests, novikov, globs)
    return tests


def setUpModule():
    warnings.simplefilter('ignore')


def tearDownModule():
    warnings.simplefilter(warnings.defaultaction)
