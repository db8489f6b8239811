#!/usr/bin/env python3
"""
Regression tests: the worked classification examples and the large
randomized property suites over every stratum.
"""

import math
import unittest
from fractions import Fraction

import numpy as np

from ktwebs.action import induced_action, pushforward_check
from ktwebs.core import GroupElement, KTParams, Point2, group_inverse
from ktwebs.frames import canonical_form, moving_frame
from ktwebs.leaves import equivalent, leaf_label
from ktwebs.polynomial import Poly2
from ktwebs.separation import compatible, first_integral_potential, one_form, separate, yatsun_potential
from ktwebs.strata import Stratum, deltas, stratum

CASES = 1000
SQRT5 = math.sqrt(5.0)
X1 = Poly2.variable(1)
X2 = Poly2.variable(2)


def close(got, want, tol):
    scale = max([1.0] + [abs(w) for w in want.values])
    return all(abs(g - w) <= tol * scale for g, w in zip(got.values, want.values))


def random_element(rng):
    return GroupElement(float(rng.uniform(-math.pi, math.pi)), *(float(v) for v in rng.uniform(-2, 2, 2)))


def random_on_stratum(rng, kind):
    """A float parameter point on the requested stratum."""
    c, w = (float(v) for v in rng.uniform(-3, 3, 2))
    w = math.copysign(max(abs(w), 0.1), w)
    if kind is Stratum.E0:
        return KTParams.of(c, c, 0.0, 0.0, 0.0, 0.0)
    if kind is Stratum.E1:
        return KTParams.of(*(float(v) for v in rng.uniform(-3, 3, 3)), 0.0, 0.0, 0.0)
    if kind is Stratum.E2:
        return induced_action(random_element(rng), KTParams.of(c, c, 0.0, 0.0, 0.0, w))
    if kind is Stratum.E3P:
        return induced_action(random_element(rng), KTParams.of(c, c, 0.0, 0.0, abs(w), 0.0))
    return KTParams.of(*(float(v) for v in rng.uniform(-3, 3, 5)), w)


def rational(rng, low=-5, high=6):
    return Fraction(int(rng.integers(low, high)), int(rng.integers(1, 4)))


def nonzero_rational(rng):
    q = rational(rng)
    return q if q != 0 else Fraction(1)


def canonical_separable_pair(rng):
    """
    A canonical tensor from one of the four webs with a random potential
    separable in its coordinates.
    """
    kind = int(rng.integers(0, 4))
    c = rational(rng)
    r2 = X1 ** 2 + X2 ** 2
    if kind == 0:
        b = c + nonzero_rational(rng)
        p = KTParams.of(c, b, 0, 0, 0, 0)
        v = sum((X1 ** n).scale(rational(rng)) + (X2 ** n).scale(rational(rng)) for n in range(1, 5))
    elif kind == 1:
        p = KTParams.of(c, c, 0, 0, 0, nonzero_rational(rng))
        v = r2.scale(rational(rng)) + (r2 ** 2).scale(rational(rng))
    elif kind == 2:
        beta = abs(nonzero_rational(rng))
        p = KTParams.of(c, c, 0, 0, beta, 0)
        v = (X1.scale(rational(rng)) + (X1 ** 2 * 4 + X2 ** 2).scale(rational(rng))
             + (X1 ** 3 * 2 + X1 * X2 ** 2).scale(rational(rng)))
    else:
        a6 = nonzero_rational(rng)
        k2 = abs(nonzero_rational(rng))
        p = KTParams.of(c + a6 * k2, c, 0, 0, 0, a6)
        quartic, d = rational(rng), rational(rng)
        v = (r2 ** 2).scale(quartic) + (X1 ** 2).scale(d) + (X2 ** 2).scale(d + quartic * k2)
    return p, v + rational(rng)


def random_compatible_pair(rng):
    """Move a canonical separable pair by an exact quarter turn and rational shift."""
    p, v = canonical_separable_pair(rng)
    g = GroupElement(float(rng.choice([0.0, math.pi / 2, math.pi, -math.pi / 2])), rational(rng), rational(rng))
    return induced_action(g, p), v.compose_affine(group_inverse(g))


class TestWorkedClassifications(unittest.TestCase):
    """Leaf labels, frames and canonical forms of the worked examples."""

    def test_cartesian(self):
        p, q = KTParams.of(1, -6, 2, 0, 0, 0), KTParams.of(-4, 9, 1, 0, 0, 0)
        self.assertEqual(leaf_label(p).invariants, (-5, 10))
        self.assertEqual(leaf_label(q).invariants, (5, 37))
        self.assertFalse(equivalent(p, q))
        lam = canonical_form(p)
        self.assertTrue(close(lam, KTParams.of(-(5 + math.sqrt(65)) / 2, -(5 - math.sqrt(65)) / 2, 0, 0, 0, 0), 1e-12))
        lam = canonical_form(q)
        self.assertTrue(close(lam, KTParams.of((5 - math.sqrt(173)) / 2, (5 + math.sqrt(173)) / 2, 0, 0, 0, 0), 1e-12))

    def test_polar(self):
        p, q = KTParams.of(2, 1, "2/3", 1, 2, -3), KTParams.of(1, -3, "8/3", 2, 4, -3)
        self.assertEqual(leaf_label(p).invariants, (-7, -3))
        self.assertEqual(leaf_label(q).invariants, (-7, -3))
        self.assertTrue(equivalent(p, q))
        for point, shift in ((p, (Fraction(-2, 3), Fraction(-1, 3))), (q, (Fraction(-4, 3), Fraction(-2, 3)))):
            result = moving_frame(point)
            self.assertEqual((result.frame.theta, result.frame.a, result.frame.b), (0.0,) + shift)
            self.assertEqual(result.canonical, KTParams.of("7/3", "7/3", 0, 0, 0, -3))

    def test_parabolic(self):
        p = KTParams.of(1, -3, 5, 1, 2, 0)
        self.assertEqual(leaf_label(p).invariants, (5, 21))
        theta, a, b = moving_frame(p).frame.as_tuple()
        self.assertLessEqual(abs(theta + math.atan(0.5)), 1e-12)
        self.assertLessEqual(abs(a + 26 * SQRT5 / 25), 1e-12)
        self.assertLessEqual(abs(b + 7 * SQRT5 / 25), 1e-12)

        q = KTParams.of(-2, 5, 7, 0, -1, 0)
        self.assertEqual(leaf_label(q).invariants, (1, -2))
        frame = moving_frame(q).frame
        self.assertEqual((frame.theta, frame.a, frame.b), (math.pi, Fraction(7, 2), Fraction(-7)))

    def test_elliptic_hyperbolic(self):
        p = KTParams.of(2, 1, 0, 1, 1, 4)
        self.assertEqual(leaf_label(p).invariants, (4, 10, -5))
        result = moving_frame(p)
        self.assertEqual(result.chart, "E3EH:U1")
        self.assertLessEqual(abs(result.frame.theta + 0.5 * math.atan(0.5)), 1e-12)
        self.assertTrue(close(result.canonical, KTParams.of((5 + SQRT5) / 4, (5 - SQRT5) / 4, 0, 0, 0, 4), 1e-12))

        q = KTParams.of(2, 1, 0, 1, 1, -4)
        self.assertEqual(leaf_label(q).invariants, (-4, -14, 11))
        self.assertTrue(close(canonical_form(q), KTParams.of((7 - SQRT5) / 4, (7 + SQRT5) / 4, 0, 0, 0, -4), 1e-12))

    def test_yatsun_pipeline(self):
        p = KTParams.of("3/4", 0, 0, 0, "-1/2", 1)
        self.assertEqual(deltas(p)[0], 1)
        self.assertIs(stratum(p).stratum, Stratum.E3EH)
        result = moving_frame(p)
        self.assertEqual(result.chart, "E3EH:U1")
        self.assertEqual(result.frame.as_tuple(), (0.0, -0.5, 0.0))
        self.assertEqual(result.canonical, KTParams.of("3/4", "-1/4", 0, 0, 0, 1))
        self.assertTrue(compatible(p, yatsun_potential()))


class TestActionProperties(unittest.TestCase):
    """Randomized properties of the induced action and the invariants."""

    def test_pushforward_consistency(self):
        rng = np.random.default_rng(101)
        for _ in range(CASES):
            p = KTParams.of(*(float(v) for v in rng.uniform(-3, 3, 6)))
            points = [Point2(float(x), float(y)) for x, y in rng.uniform(-2, 2, (100, 2))]
            self.assertTrue(pushforward_check(random_element(rng), p, points, 1e-9))

    def test_invariants_along_orbits(self):
        rng = np.random.default_rng(102)
        kinds = list(Stratum)
        for n in range(CASES):
            kind = kinds[n % len(kinds)]
            p = random_on_stratum(rng, kind)
            q = induced_action(random_element(rng), p)
            self.assertIs(stratum(p).stratum, kind)
            (d1, d2, _), (e1, e2, _) = deltas(p), deltas(q)
            self.assertLessEqual(abs(d1 - e1), 1e-9 * max(1.0, abs(d1)))
            self.assertLessEqual(abs(d2 - e2), 1e-9 * max(1.0, abs(d2)))
            self.assertTrue(equivalent(p, q, 1e-9), msg=f"{kind.value}: {p} vs {q}")


class TestFrameProperties(unittest.TestCase):
    """Randomized properties of the moving frame."""

    def test_frame_reaches_canonical_form(self):
        rng = np.random.default_rng(103)
        kinds = [Stratum.E1, Stratum.E2, Stratum.E3P, Stratum.E3EH]
        for n in range(CASES):
            p = random_on_stratum(rng, kinds[n % len(kinds)])
            result = moving_frame(p)
            self.assertTrue(close(induced_action(result.frame, p), canonical_form(p), 1e-9),
                            msg=f"{result.chart}: {p}")

    def test_canonical_form_is_invariant(self):
        rng = np.random.default_rng(104)
        kinds = [Stratum.E1, Stratum.E2, Stratum.E3P, Stratum.E3EH]
        for n in range(CASES):
            p = random_on_stratum(rng, kinds[n % len(kinds)])
            moved = induced_action(random_element(rng), p)
            self.assertTrue(close(canonical_form(moved), canonical_form(p), 1e-9), msg=f"{p} vs {moved}")


class TestFirstIntegralProperties(unittest.TestCase):
    """First integrals of random separable pairs."""

    def test_random_separable_pairs(self):
        rng = np.random.default_rng(105)
        for _ in range(200):
            p, v = random_compatible_pair(rng)
            self.assertTrue(compatible(p, v), msg=f"{p} with {v}")
            u = first_integral_potential(p, v)
            self.assertEqual(u.diff(1).diff(2), u.diff(2).diff(1))
            w1, w2 = one_form(p, v)
            for x1, x2 in rng.uniform(-2, 2, (50, 2)):
                x1, x2 = float(x1), float(x2)
                for got, want in ((u.diff(1).eval(x1, x2), w1.eval(x1, x2)),
                                  (u.diff(2).eval(x1, x2), w2.eval(x1, x2))):
                    self.assertLessEqual(abs(float(got) - float(want)), 1e-10 * max(1.0, abs(float(want))))

    def test_separated_potential_fits_canonical_tensor(self):
        rng = np.random.default_rng(106)
        for _ in range(100):
            p, v = random_compatible_pair(rng)
            report = separate(p, v)
            self.assertTrue(compatible(report.canonical_kt, report.transformed_potential))


if __name__ == "__main__":
    unittest.main()
