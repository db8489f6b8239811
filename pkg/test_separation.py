#!/usr/bin/env python3
"""
Unit tests for compatibility of potentials, first integrals and the
separation pipeline.
"""

import math
import unittest
from fractions import Fraction

import numpy as np

from ktwebs.action import induced_action
from ktwebs.core import DegenerateInput, GroupElement, Incompatible, KTParams, MalformedInput, group_inverse
from ktwebs.polynomial import Poly2
from ktwebs.separation import (
    compatibility_residual,
    compatible,
    first_integral_potential,
    is_killing,
    kt_component_polys,
    kt_params_from_components,
    one_form,
    separate,
    yatsun_potential,
)
from ktwebs.strata import WebType

X1 = Poly2.variable(1)
X2 = Poly2.variable(2)
YATSUN_KT = KTParams.of("3/4", 0, 0, 0, "-1/2", 1)


def rational(rng, low=-5, high=6):
    return Fraction(int(rng.integers(low, high)), int(rng.integers(1, 4)))


def univariate(rng, var, degree=4):
    return Poly2({((k, 0) if var == 1 else (0, k)): rational(rng) for k in range(1, degree + 1)})


def canonical_family(rng, count=1):
    """A Cartesian or polar canonical tensor with potentials separable in its coordinates."""
    if rng.integers(0, 2) == 0:
        a, b = rational(rng), rational(rng)
        while a == b:
            b = rational(rng)
        p = KTParams.of(a, b, 0, 0, 0, 0)
        potentials = [univariate(rng, 1) + univariate(rng, 2) for _ in range(count)]
    else:
        c = rational(rng)
        p = KTParams.of(c, c, 0, 0, 0, 1)
        # radial potentials
        r2 = X1 ** 2 + X2 ** 2
        potentials = [r2.scale(rational(rng)) + (r2 ** 2).scale(rational(rng)) for _ in range(count)]
    return p, potentials


def move(g, p, v):
    """Carry a tensor and a potential together by the motion g."""
    return induced_action(g, p), v.compose_affine(group_inverse(g))


def random_compatible_family(rng, count=1):
    """A canonical family moved by a random exact motion."""
    p, potentials = canonical_family(rng, count)
    g = GroupElement(float(rng.choice([0.0, math.pi / 2, math.pi, -math.pi / 2])), rational(rng), rational(rng))
    return induced_action(g, p), [v.compose_affine(group_inverse(g)) for v in potentials]


def random_compatible_pair(rng):
    p, (v,) = random_compatible_family(rng)
    return p, v


class TestKillingComponents(unittest.TestCase):
    """Test the polynomial form of the tensor."""

    def test_components_are_killing(self):
        rng = np.random.default_rng(61)
        for _ in range(20):
            p = KTParams.of(*(rational(rng) for _ in range(6)))
            self.assertTrue(is_killing(*kt_component_polys(p)))
            self.assertEqual(kt_params_from_components(*kt_component_polys(p)), p)

    def test_non_killing_components(self):
        self.assertFalse(is_killing(X1, Poly2(), Poly2()))
        with self.assertRaises(MalformedInput):
            kt_params_from_components(X1, Poly2(), Poly2())

    def test_reads_yatsun_matrix(self):
        k11 = Poly2({(0, 0): Fraction(3, 4), (0, 2): 1})
        k12 = Poly2({(0, 1): Fraction(1, 2), (1, 1): -1})
        k22 = Poly2({(1, 0): -1, (2, 0): 1})
        self.assertEqual(kt_params_from_components(k11, k12, k22), YATSUN_KT)


class TestCompatibility(unittest.TestCase):
    """Test the closedness condition d(K dV) = 0."""

    def test_yatsun_is_compatible(self):
        self.assertTrue(compatible(YATSUN_KT, yatsun_potential()))

    def test_yatsun_off_integrable_case(self):
        self.assertFalse(compatible(YATSUN_KT, yatsun_potential(2)))

    def test_constant_potential(self):
        self.assertTrue(compatible(KTParams.of(1, 2, 3, 4, 5, 6), Poly2.constant(Fraction(7))))

    def test_cartesian_cross_term(self):
        p = KTParams.of(1, 2, 0, 0, 0, 0)
        self.assertFalse(compatible(p, X1 * X2))
        self.assertEqual(compatibility_residual(p, X1 * X2), Poly2.constant(Fraction(1)))

    def test_float_path(self):
        p = KTParams.of(0.75, 0.0, 0.0, 0.0, -0.5, 1.0)
        self.assertTrue(compatible(p, yatsun_potential()))
        self.assertFalse(compatible(p, yatsun_potential(2.0)))

    def test_linearity(self):
        rng = np.random.default_rng(62)
        for _ in range(30):
            p, (v1, v2) = random_compatible_family(rng, 2)
            self.assertTrue(compatible(p, v1))
            self.assertTrue(compatible(p, v2))
            self.assertTrue(compatible(p, v1 + v2))
            self.assertTrue(compatible(p, v1 - v2.scale(3) + 7))

    def test_invariance_under_translations(self):
        rng = np.random.default_rng(63)
        for _ in range(100):
            p, (v,) = canonical_family(rng)
            g = GroupElement(0.0, rational(rng), rational(rng))
            self.assertTrue(compatible(p, v))
            self.assertTrue(compatible(*move(g, p, v)), msg=f"{p} with {v}")

    def test_invariance_under_rotations(self):
        rng = np.random.default_rng(65)
        for _ in range(100):
            p, (v,) = random_compatible_family(rng)
            g = GroupElement(float(rng.uniform(-math.pi, math.pi)), *(float(t) for t in rng.uniform(-2, 2, 2)))
            q, w = move(g, p, v)
            self.assertFalse(q.is_exact)
            self.assertFalse(w.is_exact())
            self.assertTrue(compatible(q, w), msg=f"{q} with {w}")

    def test_incompatibility_survives_motions(self):
        rng = np.random.default_rng(66)
        for _ in range(50):
            p, (v,) = canonical_family(rng)
            v = v + X1 * X2
            self.assertFalse(compatible(p, v))
            exact = GroupElement(float(rng.choice([0.0, math.pi / 2])), rational(rng), rational(rng))
            self.assertFalse(compatible(*move(exact, p, v)))
            rotated = GroupElement(float(rng.uniform(-math.pi, math.pi)), 0.5, -0.25)
            self.assertFalse(compatible(*move(rotated, p, v)))


class TestFirstIntegral(unittest.TestCase):
    """Test recovery of U with dU = K dV."""

    def test_yatsun(self):
        u = first_integral_potential(YATSUN_KT, yatsun_potential())
        expected = Poly2({
            (4, 0): Fraction(-3, 2), (2, 2): -1, (0, 4): Fraction(1, 2),
            (3, 0): 3, (1, 2): 1, (2, 0): Fraction(-3, 2),
        })
        self.assertEqual(u, expected)

    def test_constant_potential(self):
        self.assertEqual(first_integral_potential(YATSUN_KT, Poly2.constant(Fraction(4))), Poly2())

    def test_metric_multiple(self):
        v = X1 ** 2 * X2 + X2 ** 3 + 3
        u = first_integral_potential(KTParams.of(2, 2, 0, 0, 0, 0), v)
        self.assertEqual(u, (v - 3).scale(2))

    def test_incompatible(self):
        with self.assertRaises(Incompatible):
            first_integral_potential(KTParams.of(1, 2, 0, 0, 0, 0), X1 * X2)

    def test_random_compatible_pairs(self):
        rng = np.random.default_rng(64)
        for _ in range(200):
            p, v = random_compatible_pair(rng)
            u = first_integral_potential(p, v)
            self.assertEqual(u.diff(1).diff(2), u.diff(2).diff(1))
            self.assertEqual(u.coefficient(0, 0), 0)
            w1, w2 = one_form(p, v)
            for x1, x2 in rng.uniform(-2, 2, (50, 2)):
                x1, x2 = float(x1), float(x2)
                for got, want in ((u.diff(1).eval(x1, x2), w1.eval(x1, x2)),
                                  (u.diff(2).eval(x1, x2), w2.eval(x1, x2))):
                    self.assertLessEqual(abs(float(got) - float(want)), 1e-10 * max(1.0, abs(float(want))))


class TestSeparate(unittest.TestCase):
    """Test the full pipeline."""

    def test_yatsun(self):
        v = yatsun_potential()
        report = separate(YATSUN_KT, v)
        self.assertIs(report.web, WebType.ELLIPTIC_HYPERBOLIC)
        self.assertEqual(report.frame.as_tuple(), (0.0, -0.5, 0.0))
        self.assertEqual(report.canonical_kt, KTParams.of("3/4", "-1/4", 0, 0, 0, 1))
        self.assertFalse(report.approximate)
        half = Fraction(1, 2)
        for x1, x2 in ((Fraction(0), Fraction(0)), (Fraction(1), Fraction(-2)), (Fraction(1, 3), Fraction(5, 7))):
            self.assertEqual(report.transformed_potential.eval(x1, x2), v.eval(x1 + half, x2))

    def test_cartesian(self):
        v = X1 ** 2 + X2 ** 2
        report = separate(KTParams.of(1, 2, 0, 0, 0, 0), v)
        self.assertIs(report.web, WebType.CARTESIAN)
        self.assertEqual(report.frame.theta, 0.0)
        self.assertEqual(report.transformed_potential, v)

    def test_polar(self):
        report = separate(KTParams.of(2, 1, "2/3", 1, 2, -3), Poly2.constant(Fraction(5)))
        self.assertIs(report.web, WebType.POLAR)
        self.assertEqual(report.frame.as_tuple(), (0.0, -2 / 3, -1 / 3))
        self.assertEqual(report.first_integral_potential, Poly2())

    def test_rotated_frame_is_approximate(self):
        report = separate(KTParams.of(1, -6, 2, 0, 0, 0), X1 ** 2 + X2 ** 2)
        self.assertTrue(report.approximate)
        self.assertAlmostEqual(report.transformed_potential.coefficient(2, 0), 1.0)
        self.assertEqual(report.transformed_potential.coefficient(1, 1), 0)

    def test_metric_multiple_rejected(self):
        with self.assertRaises(DegenerateInput):
            separate(KTParams.of(3, 3, 0, 0, 0, 0), X1)

    def test_incompatible_rejected(self):
        with self.assertRaises(Incompatible):
            separate(KTParams.of(1, 2, 0, 0, 0, 0), X1 * X2)


if __name__ == "__main__":
    unittest.main()
