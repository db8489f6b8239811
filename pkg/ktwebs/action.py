#!/usr/bin/env python3
"""
Induced action of SE(2) on the Killing tensor parameter space.
"""

from .core import KTParams, kt_components, group_apply_point, rotation_jacobian


def induced_action(g, p):
    """
    Transform Killing tensor parameters by a proper Euclidean motion.

    The result is the tensor obtained by pushing K forward through
    x -> R(theta) x + (a, b). Exact inputs with a quarter-turn rotation and
    rational translation give exact outputs.

    Args:
        g: GroupElement
        p: KTParams

    Returns:
        KTParams of the transformed tensor
    """
    c, s = g.cos_sin()
    a, b = g.a, g.b
    a1, a2, a3, a4, a5, a6 = p.coeffs

    cc, ss, cs = c * c, s * s, c * s
    n1 = a1 * cc + a2 * ss - 2 * a3 * cs - 2 * b * a4 * c - 2 * b * a5 * s + a6 * b * b
    n2 = a1 * ss + a2 * cc + 2 * a3 * cs + 2 * a * a4 * s - 2 * a * a5 * c + a6 * a * a
    n3 = ((a1 - a2) * s * c + a3 * (cc - ss) + (a4 * a + a5 * b) * c
          + (a5 * a - a4 * b) * s - a6 * a * b)
    n4 = a4 * c + a5 * s - a6 * b
    n5 = a5 * c - a4 * s - a6 * a
    return KTParams.of(n1, n2, n3, n4, n5, a6)


def congruence(jac, m):
    """J M J^T for a 2x2 Jacobian and symmetric matrix, as (k11, k12, k22)."""
    (j11, j12), (j21, j22) = jac
    k11 = j11 * (j11 * m.k11 + j12 * m.k12) + j12 * (j11 * m.k12 + j12 * m.k22)
    k12 = j21 * (j11 * m.k11 + j12 * m.k12) + j22 * (j11 * m.k12 + j12 * m.k22)
    k22 = j21 * (j21 * m.k11 + j22 * m.k12) + j22 * (j21 * m.k12 + j22 * m.k22)
    return (k11, k12, k22)


def pushforward_check(g, p, samples, tol, action=induced_action):
    """
    Check the induced action against the tensor push-forward.

    For every sample point x, the transformed tensor evaluated at g.x must
    equal J K(x) J^T, with J the rotation Jacobian.

    Args:
        g: GroupElement
        p: KTParams
        samples: Iterable of Point2
        tol: Relative tolerance (> 0)
        action: Parameter-space action to test (defaults to induced_action)

    Returns:
        True if every sample agrees within tol
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    moved = action(g, p)
    jac = rotation_jacobian(g)
    for x in samples:
        lhs = kt_components(moved, group_apply_point(g, x))
        rhs = congruence(jac, kt_components(p, x))
        scale = 1.0 + max(abs(float(v)) for v in rhs)
        for got, want in zip((lhs.k11, lhs.k12, lhs.k22), rhs):
            if abs(float(got) - float(want)) > tol * scale:
                return False
    return True
