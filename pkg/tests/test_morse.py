# coding: utf-8

import fractions
import itertools
import random
import unittest

import novikov
from novikov.degree import DegreeForm
from novikov.errors import (
    DegreeMismatch,
    DimensionMismatch,
    IndexMismatch,
    NoSolution,
    NotTorsion,
    PrecisionExhausted,
)
from novikov.homology import FreeComplex, cycle_basis, homology
from novikov.morse import (
    ChainKind,
    CriticalPoint,
    FlowLineRecord,
    LambdaChain,
    MorseData,
    adjoint_boundary,
    adjointness_defects,
    assemble_novikov_complex,
    boundary_coefficient,
    coefficient_of,
    flow_line_sign,
    is_torsion_class,
    lambda_pairing,
    linking_from_certificate,
    linking_number,
    pairing_matrix,
    solve_in_complex,
    stable_chain_vector,
)
from novikov.series import Series

STABLE = ChainKind.STABLE
UNSTABLE = ChainKind.UNSTABLE


class _TestBaseMorse(object):

    def setUp(self):
        self.chi = DegreeForm.rational(1)
        self.one = Series.one(self.chi)
        self.t = Series.monomial(self.chi, (1,))
        self.a = CriticalPoint("a", 0)
        self.b = CriticalPoint("b", 1)

    def circle(self, window=None):
        return MorseData(1, self.chi, [self.a, self.b], [
            FlowLineRecord("a", "b", (0,), True),
            FlowLineRecord("a", "b", (1,), False),
        ], window=window, name="circle")

    def torsion(self):
        return MorseData(1, self.chi, [self.a, self.b], [
            FlowLineRecord("a", "b", (0,), True),
            FlowLineRecord("a", "b", (0,), True),
        ], name="torsion")


class TestCriticalPoint(unittest.TestCase):

    type = CriticalPoint

    def test_init_type_error(self):
        self.assertRaises(TypeError, self.type, 1, 0)
        self.assertRaises(TypeError, self.type, "a", "0")
        self.assertRaises(TypeError, self.type, "a", True)


class TestFlowLineRecord(unittest.TestCase):

    type = FlowLineRecord

    def test_init(self):
        record = self.type("a", "b", [2])
        self.assertEqual(record.deck, (2,))
        self.assertTrue(record.orientation_agrees)

    def test_init_type_error(self):
        self.assertRaises(TypeError, self.type, "a", "b", (0,), 1)


class TestMorseData(_TestBaseMorse, unittest.TestCase):

    type = MorseData

    def test_init_type_error(self):
        self.assertRaises(TypeError, self.type, 1, None)
        self.assertRaises(TypeError, self.type, "1", self.chi)
        self.assertRaises(ValueError, self.type, -1, self.chi)

    def test_deck_dimension(self):
        records = [FlowLineRecord("a", "b", (0, 1))]
        self.assertRaises(DimensionMismatch, self.type, 1, self.chi, [self.a, self.b], records)

    def test_validate(self):
        data = self.circle()
        self.assertIs(data.validate(), data)

    def test_duplicate_id(self):
        data = self.type(1, self.chi, [self.a, CriticalPoint("a", 1)])
        self.assertRaises(ValueError, data.validate)

    def test_index_out_of_range(self):
        data = self.type(1, self.chi, [CriticalPoint("a", 2)])
        self.assertRaises(IndexMismatch, data.validate)

    def test_unknown_point(self):
        data = self.type(1, self.chi, [self.a], [FlowLineRecord("a", "c", (0,))])
        self.assertRaises(IndexMismatch, data.validate)

    def test_index_gap(self):
        c = CriticalPoint("c", 2)
        data = self.type(2, self.chi, [self.a, c], [FlowLineRecord("a", "c", (0,))])
        self.assertRaises(IndexMismatch, data.validate)

    def test_point(self):
        data = self.circle()
        self.assertEqual(data.point("b"), self.b)
        self.assertRaises(KeyError, data.point, "c")
        self.assertEqual(data.points_of_index(0), (self.a,))

    def test_window_coercion(self):
        self.assertEqual(self.circle(window=5).window, self.chi.level(5))

    def test_relift_decks(self):
        data = self.circle().relift({"b": (1,)})
        self.assertEqual([r.deck for r in data.records], [(-1,), (0,)])
        self.assertEqual(self.circle().relift({"a": (1,)}).records[0].deck, (1,))

    def test_relift_window(self):
        data = self.circle(window=5).relift({"b": (2,)})
        self.assertEqual(data.window, self.chi.level(3))
        data = self.circle(window=5).relift({"a": (-1,), "b": (2,)})
        self.assertEqual(data.window, self.chi.level(2))


class TestFlowLineSign(unittest.TestCase):

    def test_rule(self):
        self.assertEqual(flow_line_sign(True, 0), 1)
        self.assertEqual(flow_line_sign(False, 1), 1)
        self.assertEqual(flow_line_sign(True, 1), -1)
        self.assertEqual(flow_line_sign(False, 0), -1)
        self.assertEqual(flow_line_sign(True, 2), 1)


class TestBoundaryCoefficient(_TestBaseMorse, unittest.TestCase):

    def test_single(self):
        lines = [FlowLineRecord("a", "b", (0,), True)]
        self.assertEqual(boundary_coefficient(self.a, self.b, lines, None, self.chi), self.one)

    def test_sum(self):
        lines = [FlowLineRecord("a", "b", (0,), True), FlowLineRecord("a", "b", (1,), True)]
        self.assertEqual(boundary_coefficient(self.a, self.b, lines, None, self.chi), self.one + self.t)

    def test_cancellation(self):
        lines = [FlowLineRecord("a", "b", (0,), True), FlowLineRecord("a", "b", (0,), False)]
        self.assertTrue(boundary_coefficient(self.a, self.b, lines, None, self.chi).is_zero())

    def test_other_pairs_ignored(self):
        lines = [FlowLineRecord("b", "a", (0,), True), FlowLineRecord("a", "c", (0,), True)]
        self.assertTrue(boundary_coefficient(self.a, self.b, lines, None, self.chi).is_zero())

    def test_window(self):
        lines = [FlowLineRecord("a", "b", (0,), True), FlowLineRecord("a", "b", (5,), True)]
        value = boundary_coefficient(self.a, self.b, lines, 3, self.chi)
        self.assertEqual(value, Series(self.chi, {(0,): 1}, cutoff=3))

    def test_index_mismatch(self):
        self.assertRaises(IndexMismatch, boundary_coefficient, self.b, self.a, [], None, self.chi)


class TestAssemble(_TestBaseMorse, unittest.TestCase):

    def test_circle(self):
        C = assemble_novikov_complex(self.circle())
        self.assertEqual(C.generators, {0: ("a",), 1: ("b",)})
        self.assertEqual(C.boundary(0), [[self.one - self.t]])
        self.assertTrue(C.report.ok)
        self.assertEqual(homology(C, 10).betti, (0, 0))

    def test_sphere(self):
        chi = DegreeForm.standard(0)
        data = MorseData(2, chi, [CriticalPoint("south", 0), CriticalPoint("north", 2)])
        C = assemble_novikov_complex(data)
        self.assertTrue(C.report.ok)
        self.assertEqual(homology(C, 10).betti, (1, 0, 1))

    def test_empty(self):
        C = assemble_novikov_complex(MorseData(0, self.chi))
        self.assertEqual(homology(C, 10).betti, (0,))

    def test_invalid(self):
        data = MorseData(1, self.chi, [self.a], [FlowLineRecord("a", "a", (0,))])
        self.assertRaises(IndexMismatch, assemble_novikov_complex, data)

    def test_two_variables(self):
        C = assemble_novikov_complex(novikov.example("two_variable_demo"))
        self.assertTrue(C.report.ok)
        self.assertEqual([C.rank(k) for k in C.degrees], [1, 2, 1])
        self.assertEqual(homology(C, 10).betti, (0, 0, 0))

    def test_relift_invariance(self):
        shifted = self.circle().relift({"b": (1,)})
        C, D = assemble_novikov_complex(self.circle()), assemble_novikov_complex(shifted)
        self.assertEqual(D.boundary(0)[0][0], C.boundary(0)[0][0].shift((-1,)))
        self.assertEqual(homology(D, 10).betti, homology(C, 10).betti)


class TestLambdaChain(_TestBaseMorse, unittest.TestCase):

    type = LambdaChain

    def test_basis(self):
        data = self.circle()
        s = self.type.basis(STABLE, "b", data)
        u = self.type.basis(UNSTABLE, "b", data)
        self.assertEqual((s.degree, u.degree), (1, 0))
        self.assertEqual(s.coefficient("b"), self.one)
        self.assertTrue(s.coefficient("a").is_zero())

    def test_init_type_error(self):
        self.assertRaises(TypeError, self.type, "stable", self.chi, 0, 1)
        self.assertRaises(TypeError, self.type, STABLE, self.chi, 0, 1, {"a": 1})

    def test_drops_zero(self):
        s = self.type(STABLE, self.chi, 0, 1, {"a": Series.zero(self.chi)})
        self.assertTrue(s.is_zero())

    def test_arithmetic(self):
        s = self.type(STABLE, self.chi, 0, 1, {"a": self.one})
        total = s + s * self.t
        self.assertEqual(total.coefficient("a"), self.one + self.t)
        self.assertTrue((s - s).is_zero())
        self.assertEqual((2 * s).coefficient("a"), Series.constant(self.chi, 2))

    def test_arithmetic_errors(self):
        s = self.type(STABLE, self.chi, 0, 1, {"a": self.one})
        u = self.type(UNSTABLE, self.chi, 0, 1, {"a": self.one})
        self.assertRaises(TypeError, s.__add__, u)
        self.assertRaises(DegreeMismatch, s.__add__, self.type(STABLE, self.chi, 1, 1))

    def test_relift(self):
        u = self.type(UNSTABLE, self.chi, 1, 1, {"a": self.one})
        self.assertEqual(u.relift({"a": (2,)}).coefficient("a"), Series.monomial(self.chi, (2,)))


class TestPairing(_TestBaseMorse, unittest.TestCase):

    def test_basis(self):
        data = self.circle()
        u = LambdaChain.basis(UNSTABLE, "a", data)
        s = LambdaChain.basis(STABLE, "a", data)
        self.assertEqual(lambda_pairing(u, s), self.one)

    def test_disjoint(self):
        u = LambdaChain(UNSTABLE, self.chi, 1, 1, {"a": self.one})
        s = LambdaChain(STABLE, self.chi, 0, 1, {"c": self.one})
        self.assertTrue(lambda_pairing(u, s).is_zero())

    def test_translates(self):
        n = (3,)
        u = LambdaChain(UNSTABLE, self.chi, 1, 1, {"a": Series.monomial(self.chi, (-3,))})
        s = LambdaChain(STABLE, self.chi, 0, 1, {"a": Series.monomial(self.chi, n)})
        self.assertEqual(lambda_pairing(u, s), self.one)

    def test_bilinear(self):
        u = LambdaChain(UNSTABLE, self.chi, 1, 1, {"a": self.one + self.t})
        s = LambdaChain(STABLE, self.chi, 0, 1, {"a": 2 * self.one})
        self.assertEqual(lambda_pairing(u * self.t, s), lambda_pairing(u, s) * self.t)
        self.assertEqual(lambda_pairing(u, s + s), 2 * lambda_pairing(u, s))

    def test_relift_invariance(self):
        u = LambdaChain(UNSTABLE, self.chi, 0, 1, {"b": self.one})
        s = LambdaChain(STABLE, self.chi, 1, 1, {"b": self.t})
        shifts = {"b": (1,)}
        self.assertEqual(lambda_pairing(u.relift(shifts), s.relift(shifts)), lambda_pairing(u, s))

    def test_errors(self):
        s = LambdaChain(STABLE, self.chi, 0, 1, {"a": self.one})
        u = LambdaChain(UNSTABLE, self.chi, 0, 1, {"a": self.one})
        self.assertRaises(TypeError, lambda_pairing, s, s)
        self.assertRaises(DegreeMismatch, lambda_pairing, u, s)

    def test_coefficient_of(self):
        self.assertEqual(coefficient_of(self.one, (0,)), 1)
        self.assertEqual(coefficient_of(self.one + 2 * self.t, (1,)), 2)
        self.assertEqual(coefficient_of(Series.zero(self.chi), (4,)), 0)
        truncated = Series(self.chi, {(0,): 1}, cutoff=2)
        self.assertRaises(PrecisionExhausted, coefficient_of, truncated, (2,))

    def test_pairing_matrix(self):
        data = self.circle()
        unstable = [LambdaChain.basis(UNSTABLE, "a", data)]
        stable = [LambdaChain.basis(STABLE, "a", data), LambdaChain(STABLE, self.chi, 0, 1)]
        matrix = pairing_matrix(unstable, stable)
        self.assertEqual(matrix[0][0], self.one)
        self.assertTrue(matrix[0][1].is_zero())


class TestAdjoint(_TestBaseMorse, unittest.TestCase):

    def test_circle(self):
        C = assemble_novikov_complex(self.circle())
        U = adjoint_boundary(C, 1)
        self.assertEqual(U.generators, {0: ("b",), 1: ("a",)})
        self.assertEqual(U.boundary(0), [[self.one - self.t]])
        self.assertEqual(U.differential(0), [[self.t - self.one]])
        self.assertEqual(adjointness_defects(C, U), [])

    def test_zero(self):
        C = FreeComplex(self.chi, {0: ("a",), 1: ("b",)})
        U = adjoint_boundary(C)
        self.assertTrue(U.boundary(0)[0][0].is_zero())

    def test_two_by_two(self):
        zero, two = Series.zero(self.chi), Series.constant(self.chi, 2)
        C = FreeComplex(self.chi, {0: ("a1", "a2"), 1: ("b1", "b2")}, {0: [[self.one, self.t], [zero, two]]})
        U = adjoint_boundary(C)
        self.assertEqual(U.boundary(0), [[self.one, zero], [self.t, two]])
        self.assertEqual(adjointness_defects(C, U), [])

    def test_defects_found(self):
        C = assemble_novikov_complex(self.circle())
        U = adjoint_boundary(C, 1)
        broken = type(U)(U.form, U.dimension, U.generators, {0: [[self.one]]})
        self.assertEqual(adjointness_defects(C, broken), [(0, "b", "a")])

    def test_signed_complex(self):
        C = assemble_novikov_complex(self.circle())
        F = adjoint_boundary(C).as_free_complex()
        self.assertEqual(F.boundary(0), [[self.t - self.one]])
        self.assertEqual(homology(F, 10).betti, (0, 0))

    def test_apply(self):
        C = assemble_novikov_complex(self.circle())
        U = adjoint_boundary(C)
        u = LambdaChain(UNSTABLE, self.chi, 0, 1, {"b": self.one})
        self.assertEqual(U.apply(u).coefficient("a"), self.one - self.t)


class TestSolve(_TestBaseMorse, unittest.TestCase):

    def test_torsion(self):
        C = assemble_novikov_complex(self.torsion())
        target = LambdaChain.basis(STABLE, "b", self.torsion())
        lam, V = solve_in_complex(C, target, 10)
        self.assertEqual(lam, Series.constant(self.chi, 2))
        self.assertEqual(V.coefficient("a"), self.one)
        self.assertEqual(V.degree, 0)

    def test_unit_boundary(self):
        C = assemble_novikov_complex(self.circle())
        target = LambdaChain.basis(STABLE, "b", self.circle())
        lam, V = solve_in_complex(C, target, 10)
        self.assertEqual(lam, self.one)
        image = C.apply(0, stable_chain_vector(V, C))
        self.assertTrue(image[0].equal_through(self.one, 10))

    def test_not_torsion(self):
        C = FreeComplex(self.chi, {0: ("a",), 1: ("b",)})
        target = LambdaChain(STABLE, self.chi, 1, 1, {"b": self.one})
        self.assertRaises(NoSolution, solve_in_complex, C, target, 10)
        self.assertFalse(is_torsion_class(C, target, 10))

    def test_not_a_cycle(self):
        C = assemble_novikov_complex(self.torsion())
        target = LambdaChain(STABLE, self.chi, 0, 1, {"a": self.one})
        self.assertRaises(ValueError, solve_in_complex, C, target, 10)

    def test_unknown_generator(self):
        C = assemble_novikov_complex(self.torsion())
        target = LambdaChain(STABLE, self.chi, 1, 1, {"a": self.one})
        self.assertRaises(DegreeMismatch, solve_in_complex, C, target, 10)


class TestLinking(_TestBaseMorse, unittest.TestCase):

    def test_half(self):
        data = self.torsion()
        C = assemble_novikov_complex(data)
        u = LambdaChain.basis(UNSTABLE, "a", data)
        s = LambdaChain.basis(STABLE, "b", data)
        value = linking_number(C, u, s, 10)
        self.assertEqual(value, Series.constant(self.chi, fractions.Fraction(1, 2), novikov.CoefficientDomain.RATIONALS))
        self.assertEqual(str(value), "1/2")

    def test_certificate_scaling(self):
        V = LambdaChain(UNSTABLE, self.chi, 0, 1, {"b": Series.constant(self.chi, -1)})
        s = LambdaChain(STABLE, self.chi, 1, 1, {"b": self.one})
        half = linking_from_certificate(Series.constant(self.chi, 2), V, s, 10)
        scaled = linking_from_certificate(Series.constant(self.chi, 4), V * 2, s, 10)
        self.assertEqual(half, scaled)

    def test_integral_value(self):
        V = LambdaChain(UNSTABLE, self.chi, 0, 1, {"b": Series.constant(self.chi, 3)})
        s = LambdaChain(STABLE, self.chi, 1, 1, {"b": self.one + self.t})
        self.assertTrue(linking_from_certificate(self.one, V, s, 10).is_zero())

    def test_zero_class(self):
        data = self.torsion()
        C = assemble_novikov_complex(data)
        u = LambdaChain.zero(UNSTABLE, self.chi, 1, 1)
        s = LambdaChain.basis(STABLE, "b", data)
        self.assertTrue(linking_number(C, u, s, 10).is_zero())

    def test_not_torsion(self):
        chi = DegreeForm.standard(0)
        data = MorseData(2, chi, [CriticalPoint("south", 0), CriticalPoint("north", 2)])
        C = assemble_novikov_complex(data)
        u = LambdaChain.basis(UNSTABLE, "south", data)
        s = LambdaChain.zero(STABLE, chi, 1, 2)
        self.assertRaises(NotTorsion, linking_number, C, u, s, 10)


class TestDuality(unittest.TestCase):
    """Pairings between the stable and unstable complexes of the bundled examples."""

    def setUp(self):
        self.rng = random.Random(20240613)
        self.examples = {name: novikov.example(name) for name in novikov.data.names()}

    def random_series(self, form):
        box = list(itertools.product(range(-2, 3), repeat=form.q))
        exponents = self.rng.sample(box, self.rng.randint(1, min(3, len(box))))
        return Series(form, {e: self.rng.choice((-3, -2, -1, 1, 2, 3)) for e in exponents})

    def random_chain(self, kind, data, index):
        degree = index if kind is STABLE else data.dimension - index
        coefficients = {p.id: self.random_series(data.form) for p in data.points_of_index(index)}
        return LambdaChain(kind, data.form, degree, data.dimension, coefficients)

    def test_relift_invariance(self):
        names = sorted(self.examples)
        expected = {
            name: homology(assemble_novikov_complex(data), 10).rows()
            for name, data in self.examples.items()
            if data.window is None
        }
        for _ in range(100):
            name = self.rng.choice(names)
            data = self.examples[name]
            shifts = {
                p.id: tuple(self.rng.randint(-3, 3) for _ in range(data.form.q))
                for p in data.points
            }
            index = self.rng.randint(0, data.dimension)
            u = self.random_chain(UNSTABLE, data, index)
            s = self.random_chain(STABLE, data, index)
            self.assertEqual(lambda_pairing(u.relift(shifts), s.relift(shifts)), lambda_pairing(u, s), name)
            if name in expected:
                C = assemble_novikov_complex(data.relift(shifts))
                self.assertEqual(homology(C, 10).rows(), expected[name], (name, shifts))

    def test_adjointness_on_examples(self):
        for name, data in self.examples.items():
            C = assemble_novikov_complex(data)
            U = adjoint_boundary(C, data.dimension)
            self.assertEqual(adjointness_defects(C, U), [], name)

    def test_nondegenerate_modulo_torsion(self):
        for name, data in self.examples.items():
            n, form = data.dimension, data.form
            C = assemble_novikov_complex(data)
            U = adjoint_boundary(C, n)
            F = U.as_free_complex(signed=False)
            for k in range(n + 1):
                stable = [
                    LambdaChain.from_vector(STABLE, form, k, n, C.generators.get(k, ()), z)
                    for z in cycle_basis(C, k, 10)
                ]
                unstable = [
                    LambdaChain.from_vector(UNSTABLE, form, n - k, n, U.generators.get(n - k, ()), z)
                    for z in cycle_basis(F, n - k, 10)
                ]
                matrix = pairing_matrix(unstable, stable)
                for j, s in enumerate(stable):
                    vanishes = all(row[j].is_zero_through(10) for row in matrix)
                    self.assertEqual(vanishes, is_torsion_class(C, s, 10), (name, k, s))
                for i, u in enumerate(unstable):
                    vanishes = all(value.is_zero_through(10) for value in matrix[i])
                    self.assertEqual(vanishes, is_torsion_class(U, u, 10), (name, k, u))
