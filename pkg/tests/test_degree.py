# coding: utf-8

import fractions
import unittest

import novikov
from novikov.degree import (
    DegreeForm,
    FormalRealBasis,
    Ordering,
    SupportSet,
    as_fraction,
    as_lattice_point,
    classify_support,
    compare,
    min_cutoff,
)
from novikov.errors import DimensionMismatch, OrderingUndecidable

XI = [("1.414213", "1.414214"), ("1.4142135", "1.4142136")]


class TestHelpers(unittest.TestCase):

    def test_as_fraction(self):
        self.assertEqual(as_fraction("5/2"), fractions.Fraction(5, 2))
        self.assertEqual(as_fraction(3), fractions.Fraction(3))
        self.assertEqual(as_fraction(" -1/3 "), fractions.Fraction(-1, 3))

    def test_as_fraction_type_error(self):
        self.assertRaises(TypeError, as_fraction, 0.5)
        self.assertRaises(TypeError, as_fraction, True)
        self.assertRaises(TypeError, as_fraction, [])

    def test_as_lattice_point(self):
        self.assertEqual(as_lattice_point(3, 1), (3,))
        self.assertEqual(as_lattice_point([1, -2], 2), (1, -2))
        self.assertRaises(DimensionMismatch, as_lattice_point, (1, 2), 1)
        self.assertRaises(TypeError, as_lattice_point, (1.0,), 1)
        self.assertRaises(TypeError, as_lattice_point, (True,), 1)
        self.assertRaises(TypeError, as_lattice_point, None, 1)

    def test_min_cutoff(self):
        basis = FormalRealBasis()
        self.assertIs(min_cutoff(None, None), None)
        self.assertEqual(min_cutoff(None, basis.rational(3)), basis.rational(3))
        self.assertEqual(min_cutoff(basis.rational(3), basis.rational(2)), basis.rational(2))


class TestFormalRealBasis(unittest.TestCase):

    type = FormalRealBasis

    def test_init(self):
        basis = self.type(["xi"], [XI])
        self.assertEqual(basis.rank, 1)
        self.assertEqual(basis.depth, 2)
        self.assertEqual(basis.interval(0, 0), (1, 1))
        self.assertEqual(basis.interval(1, 5), (fractions.Fraction("1.4142135"), fractions.Fraction("1.4142136")))

    def test_init_type_error(self):
        self.assertRaises(TypeError, self.type, [1], [XI])
        self.assertRaises(TypeError, self.type, [""], [XI])

    def test_init_value_error(self):
        self.assertRaises(ValueError, self.type, ["xi", "xi"], [XI, XI])
        self.assertRaises(ValueError, self.type, ["1"], [XI])
        self.assertRaises(ValueError, self.type, ["xi"], [[]])
        self.assertRaises(ValueError, self.type, ["xi"], [[("0", "1")]])
        self.assertRaises(ValueError, self.type, ["xi"], [[("2", "1")]])
        self.assertRaises(ValueError, self.type, ["xi"], [[("1", "2"), ("1", "3")]])

    def test_init_dimension_mismatch(self):
        self.assertRaises(DimensionMismatch, self.type, ["xi"], [])

    def test_symbol(self):
        basis = self.type(["xi"], [XI])
        self.assertEqual(basis.symbol("xi").coeffs, (0, 1))
        self.assertRaises(KeyError, basis.symbol, "eta")

    def test_value(self):
        basis = self.type(["xi"], [XI])
        self.assertEqual(str(basis.value(["1/2", -1])), "1/2 - xi")
        self.assertRaises(DimensionMismatch, basis.value, [1])


class TestDegreeValue(unittest.TestCase):

    def setUp(self):
        self.basis = FormalRealBasis(["xi"], [XI])
        self.xi = self.basis.symbol("xi")
        self.one = self.basis.unit()

    def test_arithmetic(self):
        d = self.one + self.xi
        self.assertEqual(d.coeffs, (1, 1))
        self.assertEqual((d - self.xi), self.one)
        self.assertEqual((-d).coeffs, (-1, -1))
        self.assertEqual((2 * d).coeffs, (2, 2))
        self.assertEqual((d * fractions.Fraction(1, 2)).coeffs, (fractions.Fraction(1, 2),) * 2)

    def test_str(self):
        self.assertEqual(str(self.one + self.xi), "1 + xi")
        self.assertEqual(str(self.one - self.xi), "1 - xi")
        self.assertEqual(str(self.xi * fractions.Fraction(1, 2)), "(1/2)*xi")
        self.assertEqual(str(self.basis.zero()), "0")

    def test_is_rational(self):
        self.assertTrue(self.basis.rational(3).is_rational())
        self.assertFalse(self.xi.is_rational())
        self.assertTrue(self.basis.zero().is_zero())

    def test_different_bases(self):
        other = FormalRealBasis(["eta"], [XI])
        self.assertRaises(DimensionMismatch, self.xi.__add__, other.symbol("eta"))
        self.assertRaises(DimensionMismatch, compare, self.xi, other.symbol("eta"))

    def test_ordering_operators(self):
        self.assertLess(self.one, self.xi)
        self.assertGreater(self.one + self.xi, self.basis.rational(2))
        self.assertLessEqual(self.xi, self.xi)


class TestCompare(unittest.TestCase):

    def setUp(self):
        self.basis = FormalRealBasis(["xi"], [XI])

    def test_greater(self):
        d = self.basis.unit() + self.basis.symbol("xi")
        self.assertIs(compare(d, self.basis.rational(2)), Ordering.GREATER)

    def test_equal(self):
        a = self.basis.rational("5/2")
        self.assertIs(compare(a, self.basis.rational("5/2")), Ordering.EQUAL)

    def test_less(self):
        self.assertIs(compare(self.basis.zero(), self.basis.symbol("xi")), Ordering.LESS)

    def test_refinement(self):
        # separated only by the second enclosure level
        d = self.basis.rational("1.41421345")
        self.assertIs(compare(self.basis.symbol("xi"), d), Ordering.GREATER)

    def test_undecidable(self):
        coarse = FormalRealBasis(["xi"], [[("1", "2")]])
        with self.assertRaises(OrderingUndecidable) as ctx:
            compare(coarse.symbol("xi"), coarse.rational("3/2"))
        self.assertEqual(ctx.exception.levels, 1)

    def test_rational_only(self):
        basis = FormalRealBasis()
        self.assertIs(compare(basis.rational(1), basis.rational(2)), Ordering.LESS)


class TestDegreeForm(unittest.TestCase):

    type = DegreeForm

    def test_degree_of(self):
        chi = self.type.rational(1)
        self.assertEqual(chi.degree_of((3,)), chi.basis.rational(3))
        self.assertTrue(chi.degree_of((0,)).is_zero())

    def test_degree_of_two_periods(self):
        basis = FormalRealBasis(["xi"], [XI])
        chi = self.type(basis, [basis.unit(), basis.symbol("xi")])
        self.assertEqual(chi.degree_of((1, 1)).coeffs, (1, 1))
        self.assertRaises(DimensionMismatch, chi.degree_of, (1,))

    def test_init_value_error(self):
        self.assertRaises(ValueError, self.type.rational, 1, 2)
        self.assertRaises(ValueError, self.type.rational, 0)
        self.assertRaises(ValueError, self.type.rational, -1)

    def test_init_type_error(self):
        basis = FormalRealBasis()
        self.assertRaises(TypeError, self.type, basis, [1])

    def test_standard(self):
        chi = self.type.standard(3)
        self.assertEqual(chi.q, 3)
        self.assertEqual(chi.basis.symbols, ("sqrt2", "sqrt3"))
        self.assertIs(compare(chi.degree_of((0, 1, -1)), chi.zero()), Ordering.LESS)
        self.assertIs(compare(chi.degree_of((-1, 1, 0)), chi.zero()), Ordering.GREATER)

    def test_standard_compact(self):
        chi = self.type.standard(0)
        self.assertEqual(chi.q, 0)
        self.assertEqual(chi.origin(), ())
        self.assertTrue(chi.degree_of(()).is_zero())

    def test_level(self):
        chi = self.type.rational(1)
        self.assertEqual(chi.level("1/2"), chi.basis.rational("1/2"))
        other = self.type.standard(2)
        self.assertRaises(DimensionMismatch, chi.level, other.degree_of((0, 1)))

    def test_hash(self):
        self.assertEqual(hash(self.type.standard(2)), hash(self.type.standard(2)))
        self.assertEqual(self.type.standard(2), self.type.standard(2))
        self.assertNotEqual(self.type.standard(2), self.type.standard(1))

    def test_exported(self):
        self.assertIs(novikov.DegreeForm, self.type)


class TestClassifySupport(unittest.TestCase):

    def setUp(self):
        self.chi = DegreeForm.rational(1)

    def test_finite(self):
        c = classify_support(SupportSet({(0,), (1,), (2,)}), self.chi)
        self.assertTrue(c.slab_compact)
        self.assertTrue(c.forward)
        self.assertTrue(c.compact_forward)
        self.assertEqual(c.window, (self.chi.zero(), None))

    def test_truncated_below(self):
        support = SupportSet({(-1,), (0,)}, floor=self.chi.level(-1))
        c = classify_support(support, self.chi)
        self.assertFalse(c.forward)
        self.assertTrue(c.slab_compact)
        self.assertEqual(c.low, self.chi.level(-1))

    def test_empty(self):
        c = classify_support(SupportSet(), self.chi)
        self.assertTrue(c.slab_compact)
        self.assertTrue(c.forward)
        self.assertTrue(c.backward)
        self.assertIs(c.low, None)

    def test_cutoff(self):
        support = SupportSet({(0,)}, cutoff=self.chi.level(2))
        c = classify_support(support, self.chi)
        self.assertFalse(c.backward)
        self.assertEqual(c.high, self.chi.level(2))

    def test_validate(self):
        support = SupportSet({(3,)}, cutoff=self.chi.level(2))
        self.assertRaises(ValueError, classify_support, support, self.chi)
