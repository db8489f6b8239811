#!/usr/bin/env python3
"""
Unit tests for sparse bivariate polynomials.
"""

import math
import unittest
from fractions import Fraction

import numpy as np
import sympy as sp

from ktwebs.core import DegreeOverflow, GroupElement, MalformedInput, Point2
from ktwebs.polynomial import Poly2, poly_add, poly_diff, poly_eval, poly_mul
from ktwebs.separation import yatsun_potential

X1 = Poly2.variable(1)
X2 = Poly2.variable(2)


def random_poly(rng, degree=4, terms=5):
    out = {}
    for _ in range(terms):
        i = int(rng.integers(0, degree + 1))
        j = int(rng.integers(0, degree + 1 - i))
        out[(i, j)] = Fraction(int(rng.integers(-5, 6)), int(rng.integers(1, 4)))
    return Poly2(out)


class TestPolyArithmetic(unittest.TestCase):
    """Test ring operations."""

    def test_derivative(self):
        self.assertEqual(poly_diff(X1 * X2, 1), X2)
        self.assertEqual((X1 ** 3).diff(1), Poly2({(2, 0): 3}))
        self.assertEqual(X2.diff(1), Poly2())

    def test_difference_of_squares(self):
        self.assertEqual(poly_mul(poly_add(X1, X2), X1 - X2), X1 ** 2 - X2 ** 2)

    def test_yatsun_vanishes_at_origin(self):
        self.assertEqual(poly_eval(yatsun_potential(), Point2(0, 0)), 0)

    def test_no_stored_zeros(self):
        self.assertEqual(Poly2({(1, 0): 0, (0, 0): Fraction(0)}).terms, {})
        self.assertEqual((X1 - X1).terms, {})
        self.assertEqual(Poly2().degree(), -1)

    def test_scalars(self):
        p = 2 * X1 + 3
        self.assertEqual(p, Poly2({(1, 0): 2, (0, 0): 3}))
        self.assertEqual(1 - X1, Poly2({(0, 0): 1, (1, 0): -1}))

    def test_ring_laws(self):
        rng = np.random.default_rng(51)
        for _ in range(50):
            p, q, r = random_poly(rng), random_poly(rng), random_poly(rng)
            self.assertEqual((p + q) * r, p * r + q * r)
            self.assertEqual(p * q, q * p)
            self.assertEqual((p * q).diff(1), p.diff(1) * q + p * q.diff(1))

    def test_evaluation_is_a_homomorphism(self):
        rng = np.random.default_rng(52)
        for _ in range(20):
            p, q = random_poly(rng), random_poly(rng)
            x = Point2(Fraction(int(rng.integers(-4, 5)), 3), Fraction(int(rng.integers(-4, 5)), 2))
            self.assertEqual(poly_eval(p * q, x), poly_eval(p, x) * poly_eval(q, x))


class TestPolyDegree(unittest.TestCase):
    """Test the degree bound."""

    def test_monomial_above_bound(self):
        with self.assertRaises(DegreeOverflow):
            Poly2({(33, 0): 1})

    def test_product_above_bound(self):
        with self.assertRaises(DegreeOverflow):
            (X1 ** 20) * (X2 ** 20)

    def test_custom_bound(self):
        small = Poly2.variable(1, max_degree=2)
        with self.assertRaises(DegreeOverflow):
            small ** 3

    def test_negative_exponent(self):
        with self.assertRaises(MalformedInput):
            Poly2({(-1, 0): 1})


class TestPolyCalculus(unittest.TestCase):
    """Test integration and composition."""

    def test_integrate_then_differentiate(self):
        rng = np.random.default_rng(53)
        for _ in range(30):
            p = random_poly(rng)
            self.assertEqual(p.integrate(1).diff(1), p)
            self.assertEqual(p.integrate(2).diff(2), p)

    def test_integration_is_exact(self):
        self.assertEqual(X1.integrate(1), Poly2({(2, 0): Fraction(1, 2)}))

    def test_translation(self):
        v = X1 ** 2 + X2 ** 2
        moved = v.compose_affine(GroupElement(0.0, Fraction(1), Fraction(0)))
        self.assertEqual(moved, X1 ** 2 + 2 * X1 + 1 + X2 ** 2)
        self.assertTrue(moved.is_exact())

    def test_rotation_keeps_radial_polynomial(self):
        v = X1 ** 2 + X2 ** 2
        self.assertEqual(v.compose_affine(GroupElement(math.pi / 2)), v)
        rotated = v.compose_affine(GroupElement(0.3)).chop(1e-12)
        self.assertAlmostEqual(rotated.coefficient(2, 0), 1.0)
        self.assertAlmostEqual(rotated.coefficient(0, 2), 1.0)
        self.assertEqual(rotated.coefficient(1, 1), 0)

    def test_composition_matches_pointwise(self):
        rng = np.random.default_rng(54)
        g = GroupElement(0.7, 0.25, -1.5)
        for _ in range(20):
            p = random_poly(rng)
            composed = p.compose_affine(g)
            x1, x2 = (float(v) for v in rng.uniform(-1, 1, 2))
            c, s = math.cos(0.7), math.sin(0.7)
            expected = float(p.eval(c * x1 - s * x2 + 0.25, s * x1 + c * x2 - 1.5))
            self.assertAlmostEqual(float(composed.eval(x1, x2)), expected, places=9)


class TestPolyInput(unittest.TestCase):
    """Test construction from monomial lists."""

    def test_sympy_round_trip(self):
        x1, x2 = sp.symbols("x1 x2")
        p = Poly2.from_sympy(x1 ** 2 / 2 + 3 * x2 - 1)
        self.assertEqual(p, Poly2({(2, 0): Fraction(1, 2), (0, 1): 3, (0, 0): -1}))
        self.assertTrue(p.is_exact())
        self.assertEqual(Poly2.from_sympy(p.as_poly()), p)
        self.assertEqual(sp.expand(p.as_expr() - (x1 ** 2 / 2 + 3 * x2 - 1)), 0)
        self.assertFalse(Poly2.from_sympy(sp.Float(0.5) * x1).is_exact())

    def test_from_monomials(self):
        p = Poly2.from_monomials([[2, 0, "1/2"], [0, 1, 3], [2, 0, "1/2"]])
        self.assertEqual(p, Poly2({(2, 0): 1, (0, 1): 3}))
        self.assertTrue(p.is_exact())

    def test_float_coefficients(self):
        p = Poly2.from_monomials([[1, 0, 0.5]])
        self.assertFalse(p.is_exact())
        self.assertTrue(Poly2({(1, 0): 1e-14}).is_zero(1e-12))

    def test_bad_monomials(self):
        for bad in ([[1, 0]], [["a", 0, 1]], [[1.5, 0, 1]], [[True, 0, 1]], [[1, 0, "x"]]):
            with self.assertRaises(MalformedInput):
                Poly2.from_monomials(bad)

    def test_to_list_is_graded(self):
        p = X2 ** 2 + X1 + 5
        self.assertEqual(p.to_list(), [[0, 0, 5], [1, 0, 1], [0, 2, 1]])
        self.assertEqual(str(Poly2()), "0")


if __name__ == "__main__":
    unittest.main()
