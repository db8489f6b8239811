#!/usr/bin/env python3
"""
Right moving frames: the motion carrying a Killing tensor to its canonical form.

Cross-sections per stratum:
    E1   alpha_3 = alpha_4 = alpha_5 = alpha_6 = 0, alpha_1 < alpha_2
    E2   alpha_1 = alpha_2, alpha_3 = alpha_4 = alpha_5 = 0, alpha_6 != 0
    E3P  alpha_1 = alpha_2, alpha_3 = alpha_4 = alpha_6 = 0, alpha_5 > 0
    E3EH alpha_3 = alpha_4 = alpha_5 = 0, alpha_6 (alpha_1 - alpha_2) > 0
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from .action import induced_action
from .core import (
    DEFAULT_CONFIG,
    DegenerateInput,
    GroupElement,
    KTParams,
    Point2,
    SymMat2,
    exact_sqrt,
    group_apply_point,
    group_inverse,
    kt_components,
    sym_eigenvalues,
)
from .leaves import leaf_invariants
from .strata import Stratum, stratum as classify

SQRT2 = math.sqrt(2.0)
ZERO = Fraction(0)


@dataclass(frozen=True)
class FrameResult:
    """Chart used, moving frame and canonical parameters."""

    chart: str
    frame: GroupElement
    canonical: KTParams
    stratum: Stratum

    def __str__(self):
        theta, a, b = self.frame.as_tuple()
        return f"{self.chart}: theta={theta:.6f}, a={a:.6f}, b={b:.6f}"


def _cartesian_frame(p):
    a1, a2, a3 = p.a1, p.a2, p.a3
    # 2*theta = pi - arg((a1 - a2) + 2i a3) aligns the axes with a1 < a2
    theta = (math.pi - math.atan2(float(2 * a3), float(a1 - a2))) / 2
    if theta > math.pi / 2:
        theta -= math.pi
    chart = "E1:U1" if a3 != 0 else "E1:U2"
    low, high = sym_eigenvalues(SymMat2(a1, a3, a2))
    canonical = KTParams.of(low, high, 0, 0, 0, 0)
    return chart, GroupElement(theta, ZERO, ZERO), canonical


def cartesian_chart_angles(p):
    """
    The coordinate functions psi_1 (chart U1, alpha_3 != 0) and psi_1'
    (chart U2, alpha_1 != alpha_2) of the Cartesian charts.

    Returns:
        Tuple (psi1, psi1_prime); entries are None outside their chart
    """
    a1, a2, a3 = (float(v) for v in p.coeffs[:3])
    root = math.hypot(a1 - a2, 2 * a3)
    psi1 = math.atan((a1 - a2 + root) / (2 * a3)) if a3 != 0 else None
    psi1_prime = math.atan((2 * a3 + root) / (a2 - a1)) if a2 != a1 else None
    return psi1, psi1_prime


def _polar_frame(p):
    a1, a2, a3, a4, a5, a6 = p.coeffs
    i1, i2 = leaf_invariants(Stratum.E2, p)
    frame = GroupElement(0.0, a5 / a6, a4 / a6)
    centre = i1 / i2
    return "E2:U", frame, KTParams.of(centre, centre, 0, 0, 0, i2)


def _parabolic_frame(p):
    a4, a5 = p.a4, p.a5
    theta = -math.atan2(float(a4), float(a5))
    rotated = induced_action(GroupElement(theta, ZERO, ZERO), p)
    i1, i2 = leaf_invariants(Stratum.E3P, p)
    r = exact_sqrt(i1)
    r1, r2, r3 = rotated.coeffs[:3]
    frame = GroupElement(theta, (r2 - r1) / (2 * r), -r3 / r)
    chart = "E3P:U1" if -math.pi / 2 < frame.theta <= math.pi / 2 else "E3P:U2"
    return chart, frame, KTParams.of(i2 / i1, i2 / i1, 0, 0, r, 0)


def _translation_for(p, theta):
    c, s = GroupElement(theta).cos_sin()
    a4, a5, a6 = p.a4, p.a5, p.a6
    return (a5 * c - a4 * s) / a6, (a4 * c + a5 * s) / a6


def elliptic_chart(p):
    """
    Pick the elliptic-hyperbolic chart: the defining function with the
    larger magnitude wins, ties resolved in chart order.
    """
    a1, a2, a3, a4, a5, a6 = p.coeffs
    iota1 = a6 * (a1 - a2) - a4 * a4 + a5 * a5
    iota2 = a3 * a6 + a4 * a5
    if abs(iota1) >= abs(iota2):
        return ("U1" if iota1 > 0 else "U2"), iota1, iota2
    return ("U3" if iota2 > 0 else "U4"), iota1, iota2


def _elliptic_frame(p):
    chart, iota1, iota2 = elliptic_chart(p)
    if chart in ("U1", "U2"):
        theta1 = -0.5 * math.atan(float(2 * iota2) / float(iota1))
        a1_, b1_ = _translation_for(p, theta1)
        if chart == "U1":
            frame = GroupElement(theta1, a1_, b1_)
        else:
            frame = GroupElement(theta1 + math.pi / 2, -b1_, a1_)
    else:
        theta2 = 0.5 * math.atan(float(iota1) / float(2 * iota2))
        a2_, b2_ = _translation_for(p, theta2)
        if chart == "U3":
            frame = GroupElement(theta2 - math.pi / 4, (a2_ + b2_) / SQRT2, (b2_ - a2_) / SQRT2)
        else:
            frame = GroupElement(theta2 + math.pi / 4, (a2_ - b2_) / SQRT2, (a2_ + b2_) / SQRT2)

    i1, i2, i3 = leaf_invariants(Stratum.E3EH, p)
    half = i2 / (2 * i1)
    root = exact_sqrt(max(i3 / i1 + half * half, 0))
    if i1 > 0:
        canonical = KTParams.of(half + root, half - root, 0, 0, 0, i1)
    else:
        canonical = KTParams.of(half - root, half + root, 0, 0, 0, i1)
    return "E3EH:" + chart, frame, canonical


_BUILDERS = {
    Stratum.E1: _cartesian_frame,
    Stratum.E2: _polar_frame,
    Stratum.E3P: _parabolic_frame,
    Stratum.E3EH: _elliptic_frame,
}


def moving_frame(p, config=DEFAULT_CONFIG):
    """
    Compute the right moving frame of a Killing tensor.

    The stratum is decided with eps_zero, so every classified point has
    margin above eps_zero. The frame divides by the invariant that sets
    that margin, and float points with margin up to guard_zero
    (guard_zero > eps_zero) are refused instead of normalized.

    Args:
        p: KTParams
        config: Config providing eps_zero and guard_zero

    Returns:
        FrameResult whose frame carries p onto the cross-section of its
        stratum and whose canonical parameters are the closed-form point

    Raises:
        DegenerateInput: if a float input lies within guard_zero of a
            stratum boundary
    """
    label = classify(p, config)
    if not label.exact and label.margin <= config.guard_zero:
        raise DegenerateInput(
            f"Parameters {p} are within {label.margin:.3e} of the "
            f"{label.stratum.value} boundary; classification is ill-conditioned"
        )
    if label.stratum is Stratum.E0:
        return FrameResult("E0:fixed-point", GroupElement.identity(), p, Stratum.E0)
    chart, frame, canonical = _BUILDERS[label.stratum](p)
    return FrameResult(chart, frame, canonical, label.stratum)


def canonical_form(p, config=DEFAULT_CONFIG):
    """Closed-form canonical parameters of p (see moving_frame)."""
    return moving_frame(p, config).canonical


def canonical_components(p, xbar, config=DEFAULT_CONFIG):
    """The canonical matrix of p evaluated at canonical coordinates xbar."""
    return kt_components(canonical_form(p, config), xbar)


def singular_points(p, config=DEFAULT_CONFIG):
    """
    Singular points of the web in the original coordinates.

    Returns:
        List of Point2 (empty for Cartesian webs and metric multiples)
    """
    result = moving_frame(p, config)
    canonical = result.canonical
    if result.stratum in (Stratum.E2, Stratum.E3P):
        marks = [Point2(ZERO, ZERO)]
    elif result.stratum is Stratum.E3EH:
        k = exact_sqrt((canonical.a1 - canonical.a2) / canonical.a6)
        marks = [Point2(-k, ZERO), Point2(k, ZERO)]
    else:
        marks = []
    back = group_inverse(result.frame)
    return [group_apply_point(back, m) for m in marks]


def polar_eigenvalues(p, x, config=DEFAULT_CONFIG):
    """
    Eigenvalues of a polar-web tensor from its invariants.

    lambda_1 is constant; lambda_2 grows with the squared distance to the
    web centre.

    Raises:
        ValueError: if p is not in E2
    """
    result = moving_frame(p, config)
    if result.stratum is not Stratum.E2:
        raise ValueError(f"Polar eigenvalues need an E2 point, got {result.stratum.value}")
    centre = singular_points(p, config)[0]
    base, weight = result.canonical.a1, result.canonical.a6
    dx, dy = x.x1 - centre.x1, x.x2 - centre.x2
    dist2 = dx * dx + dy * dy
    return (base, base + weight * dist2)
