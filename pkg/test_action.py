#!/usr/bin/env python3
"""
Unit tests for the induced action of the motion group on Killing tensor
parameters.
"""

import math
import unittest
from fractions import Fraction

import numpy as np

from ktwebs.action import congruence, induced_action, pushforward_check
from ktwebs.core import GroupElement, KTParams, Point2, SymMat2, group_compose, rotation_jacobian


def random_params(rng):
    return KTParams.of(*(float(v) for v in rng.uniform(-3, 3, 6)))


def random_element(rng):
    return GroupElement(float(rng.uniform(-math.pi, math.pi)), float(rng.uniform(-2, 2)), float(rng.uniform(-2, 2)))


def random_points(rng, n):
    return [Point2(float(x), float(y)) for x, y in rng.uniform(-2, 2, (n, 2))]


class TestInducedAction(unittest.TestCase):
    """Test the transformation law of the parameters."""

    def test_identity(self):
        p = KTParams.of(2, 1, "2/3", 1, 2, -3)
        self.assertEqual(induced_action(GroupElement.identity(), p), p)

    def test_translation_stays_exact(self):
        p = KTParams.of(2, 1, "2/3", 1, 2, -3)
        moved = induced_action(GroupElement(0.0, Fraction(-2, 3), Fraction(-1, 3)), p)
        self.assertTrue(moved.is_exact)
        self.assertEqual(moved, KTParams.of("7/3", "7/3", 0, 0, 0, -3))

    def test_quarter_turn_swaps_diagonal(self):
        moved = induced_action(GroupElement(math.pi / 2), KTParams.of(1, 2, 0, 0, 0, 0))
        self.assertEqual(moved, KTParams.of(2, 1, 0, 0, 0, 0))

    def test_alpha6_is_invariant(self):
        rng = np.random.default_rng(11)
        for _ in range(50):
            p = random_params(rng)
            self.assertEqual(induced_action(random_element(rng), p).a6, p.a6)

    def test_action_is_a_homomorphism(self):
        rng = np.random.default_rng(12)
        for _ in range(50):
            p = random_params(rng)
            g1, g2 = random_element(rng), random_element(rng)
            stepwise = induced_action(g2, induced_action(g1, p))
            direct = induced_action(group_compose(g2, g1), p)
            for got, want in zip(stepwise.values, direct.values):
                self.assertAlmostEqual(got, want, places=9)


class TestPushforward(unittest.TestCase):
    """Test the action against direct congruence of the tensor."""

    def test_congruence_by_identity(self):
        self.assertEqual(congruence(((1, 0), (0, 1)), SymMat2(1, 2, 3)), (1, 2, 3))

    def test_random_pushforward(self):
        rng = np.random.default_rng(13)
        for _ in range(100):
            g, p = random_element(rng), random_params(rng)
            self.assertTrue(pushforward_check(g, p, random_points(rng, 20), 1e-9))

    def test_wrong_action_is_detected(self):
        rng = np.random.default_rng(14)
        g = GroupElement(0.7, 1.0, 0.5)
        p = KTParams.of(1.0, 2.0, 0.5, 0.3, -0.2, 1.0)
        self.assertFalse(pushforward_check(g, p, random_points(rng, 5), 1e-9, action=lambda g, p: p))

    def test_tolerance_must_be_positive(self):
        with self.assertRaises(ValueError):
            pushforward_check(GroupElement.identity(), KTParams.of(1, 1, 0, 0, 0, 0), [], 0)

    def test_rotation_jacobian_is_orthogonal(self):
        (a, b), (c, d) = rotation_jacobian(GroupElement(0.4))
        self.assertAlmostEqual(a * d - b * c, 1.0)
        self.assertAlmostEqual(a * b + c * d, 0.0)


if __name__ == "__main__":
    unittest.main()
