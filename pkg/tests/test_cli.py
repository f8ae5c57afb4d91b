# coding: utf-8

import contextlib
import io
import json
import os
import unittest

import novikov.data
from novikov.cli import main

DATADIR = os.path.realpath(os.path.join(__file__, os.pardir, "data"))


def _data(name):
    return os.path.join(DATADIR, name)


class _TestBaseCommand(object):

    def run_main(self, *argv):
        out, err = io.StringIO(), io.StringIO()
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            status = main(list(argv))
        return status, out.getvalue(), err.getvalue()

    def run_structured(self, *argv):
        status, out, err = self.run_main("--format", "structured", *argv)
        return status, json.loads(out)


class TestRing(_TestBaseCommand, unittest.TestCase):

    def test_inverse(self):
        status, out, _ = self.run_main("--precision", "4", "ring", "-e", "inv(1 - t)")
        self.assertEqual(status, 0)
        self.assertEqual(out, "1 + t + t^2 + t^3 + O(deg 4)\n")

    def test_default_precision(self):
        _, out, _ = self.run_main("ring", "-e", "inv(1 - t)")
        self.assertTrue(out.startswith("1 + t + t^2"))
        self.assertTrue(out.endswith(" + t^9 + O(deg 10)\n"))

    def test_rational(self):
        _, out, _ = self.run_main("--coeffs", "rat", "--precision", "3", "ring", "-e", "inv(2 + t)")
        self.assertEqual(out.strip(), "1/2 - 1/4*t + 1/8*t^2 + O(deg 3)")

    def test_rank(self):
        _, out, _ = self.run_main("ring", "--rank", "2", "-e", "t^(1,0) * t^(0,1)")
        self.assertEqual(out.strip(), "t^(1,1)")

    def test_structured(self):
        status, doc = self.run_structured("ring", "-e", "div(1 - t^2, 1 - t)")
        self.assertEqual(status, 0)
        self.assertEqual(doc["value"], "1 + t")
        self.assertTrue(doc["exact"])

    def test_syntax_error(self):
        status, out, err = self.run_main("ring", "-e", "1 + $")
        self.assertEqual(status, 1)
        self.assertEqual(out, "")
        self.assertEqual(err.strip(), "error: SeriesSyntaxError: unexpected character '$' at column 5")

    def test_not_a_unit(self):
        status, _, err = self.run_main("ring", "-e", "inv(2 + t)")
        self.assertEqual(status, 1)
        self.assertTrue(err.startswith("error: NotAUnit: "))
        self.assertIn("(at column 1)", err)

    def test_missing_expression(self):
        self.assertRaises(SystemExit, self.run_main, "ring")


class TestHomology(_TestBaseCommand, unittest.TestCase):

    def test_circle(self):
        status, out, _ = self.run_main("homology", "--example", "circle_degree1")
        self.assertEqual(status, 0)
        lines = out.splitlines()
        self.assertEqual(lines[0], "complex: circle_degree1")
        self.assertEqual(lines[1], "precision: 10")
        self.assertIn("euler: 0 = 0", lines)
        self.assertEqual(lines[-1], "verification: ok")

    def test_torsion_structured(self):
        status, doc = self.run_structured("homology", "--example", "torsion_demo")
        self.assertEqual(status, 0)
        self.assertTrue(doc["verified"])
        self.assertEqual(doc["homology"]["degrees"][1]["torsion"], ["2"])
        self.assertTrue(doc["inequalities"]["ok"])

    def test_sphere(self):
        _, doc = self.run_structured("homology", "--example", "sphere_height")
        self.assertEqual([d["betti"] for d in doc["homology"]["degrees"]], [1, 0, 1])

    def test_two_variables(self):
        status, doc = self.run_structured("homology", "--example", "two_variable_demo")
        self.assertEqual(status, 0)
        self.assertTrue(doc["verified"])
        self.assertTrue(doc["inequalities"]["ok"])
        self.assertEqual([d["generators"] for d in doc["homology"]["degrees"]], [1, 2, 1])

    def test_file(self):
        status, out, _ = self.run_main("homology", str(novikov.data.path("torsion_demo")))
        self.assertEqual(status, 0)
        self.assertIn("complex: torsion_demo", out)

    def test_unverified(self):
        status, out, _ = self.run_main("homology", _data("broken_square.json"))
        self.assertEqual(status, 1)
        self.assertEqual(out.splitlines()[-1], "verification: FAILED (d^2 != 0)")
        _, doc = self.run_structured("homology", _data("broken_square.json"))
        self.assertFalse(doc["verified"])
        self.assertEqual(doc["violations"], [{"degree": 0, "row": 0, "column": 0}])

    def test_unknown_example(self):
        status, _, err = self.run_main("homology", "--example", "torus")
        self.assertEqual(status, 1)
        self.assertTrue(err.startswith("error: KeyError: "))

    def test_missing_input(self):
        self.assertRaises(SystemExit, self.run_main, "homology")

    def test_missing_file(self):
        status, _, err = self.run_main("homology", _data("missing.json"))
        self.assertEqual(status, 1)
        self.assertTrue(err.startswith("error: FileNotFoundError: "))


class TestPairing(_TestBaseCommand, unittest.TestCase):

    def test_pairing(self):
        status, out, _ = self.run_main("pairing", "--example", "torsion_demo", _data("torsion_pairing.json"))
        self.assertEqual(status, 0)
        self.assertEqual(out.strip(), "1")

    def test_zero_pairing(self):
        _, out, _ = self.run_main("pairing", "--example", "circle_degree1", _data("circle_disjoint.json"))
        self.assertEqual(out.strip(), "0")

    def test_linking(self):
        args = ("pairing", "--example", "torsion_demo", _data("torsion_linking.json"), "--linking")
        status, out, _ = self.run_main(*args)
        self.assertEqual(status, 0)
        self.assertEqual(out.strip(), "1/2 mod Lambda")
        _, doc = self.run_structured(*args)
        self.assertEqual(doc["value"], "1/2")
        self.assertEqual(doc["unstable"], {"degree": 1, "coefficients": {"a": "1"}})

    def test_degree_mismatch(self):
        status, _, err = self.run_main("pairing", "--example", "torsion_demo", _data("torsion_linking.json"))
        self.assertEqual(status, 1)
        self.assertTrue(err.startswith("error: DegreeMismatch: "))


class TestCone(_TestBaseCommand, unittest.TestCase):

    def test_cone(self):
        status, out, _ = self.run_main("cone", _data("cone.json"), "--fundamental")
        self.assertEqual(status, 0)
        self.assertEqual(out.splitlines(), [
            "cone: 2 generator(s), simplicial",
            "[0, 1]: not in cone",
            "[2, 3]: in cone",
            "t^(1,0) + t^(0,1): not conical, t^[0, 1] escapes",
            "1 + t^(1,1): conical with shift [0, 0]",
            "fundamental points: [0, 0], [1, 0], [1, 1], [1, 2], [2, 2]",
        ])

    def test_structured(self):
        _, doc = self.run_structured("cone", _data("cone.json"))
        self.assertEqual(doc["points"][1], {"point": [2, 3], "in_cone": True})
        self.assertEqual(doc["series"][0]["witness"], [0, 1])
        self.assertNotIn("fundamental", doc)


class TestSnf(_TestBaseCommand, unittest.TestCase):

    def test_snf(self):
        status, out, _ = self.run_main("snf", _data("matrix.json"))
        self.assertEqual(status, 0)
        lines = out.splitlines()
        self.assertEqual(lines[:3], ["shape: 2x2", "rank: 2", "diagonal: 1, 4"])

    def test_structured(self):
        _, doc = self.run_structured("snf", _data("matrix.json"))
        self.assertEqual(doc["diagonal"], ["1", "4"])
        self.assertEqual(len(doc["U"]), 2)
        self.assertEqual(doc["precision"], "10")


class TestExtend(_TestBaseCommand, unittest.TestCase):

    def test_extend(self):
        status, out, _ = self.run_main("extend", _data("laurent.json"))
        self.assertEqual(status, 0)
        lines = out.splitlines()
        self.assertEqual(lines[:3], ["nonzero entries: 1", "units over L: 0", "units over Lambda: 1"])

    def test_not_laurent(self):
        self.assertRaises(SystemExit, self.run_main, "extend", _data("complex.json"))


class TestExamples(_TestBaseCommand, unittest.TestCase):

    def test_list(self):
        status, out, _ = self.run_main("examples")
        self.assertEqual(status, 0)
        names = [line.split()[0] for line in out.splitlines()]
        self.assertEqual(names, ["circle_degree1", "sphere_height", "torsion_demo", "two_variable_demo"])

    def test_structured(self):
        _, doc = self.run_structured("examples")
        torsion = next(row for row in doc["examples"] if row["name"] == "torsion_demo")
        self.assertEqual(torsion, {"name": "torsion_demo", "dimension": 1, "q": 1, "points": 2, "flow_lines": 2})


class TestGolden(_TestBaseCommand, unittest.TestCase):

    def assertGolden(self, name):
        with open(_data("{}.golden".format(name)), encoding="utf-8") as f:
            expected = f.read()
        status, out, _ = self.run_main("homology", "--example", name)
        self.assertEqual(status, 0)
        self.assertMultiLineEqual(out, expected)

    def test_circle_degree1(self):
        self.assertGolden("circle_degree1")

    def test_torsion_demo(self):
        self.assertGolden("torsion_demo")

    def test_sphere_height(self):
        self.assertGolden("sphere_height")

    def test_two_variable_demo(self):
        self.assertGolden("two_variable_demo")
