#!/usr/bin/env python3
"""
Separability of natural Hamiltonians with polynomial potentials.

A potential V is compatible with a Killing tensor K when the one-form
K dV is closed. Its primitive U gives the quadratic first integral
F = 1/2 K^{ij} p_i p_j + U.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .core import (
    DEFAULT_CONFIG,
    DegenerateInput,
    GroupElement,
    Incompatible,
    KTParams,
    MalformedInput,
    group_inverse,
)
from .frames import moving_frame
from .polynomial import Poly2
from .strata import Stratum, WebType, WEB_BY_STRATUM


@dataclass(frozen=True)
class SeparationReport:
    """Everything needed to write the Hamiltonian in separable coordinates."""

    web: WebType
    chart: str
    frame: GroupElement
    canonical_kt: KTParams
    transformed_potential: Poly2
    first_integral_potential: Optional[Poly2] = None
    approximate: bool = False


def kt_component_polys(p, max_degree=32):
    """
    Components of the Killing tensor as polynomials in (x1, x2).

    Returns:
        Tuple (K11, K12, K22)
    """
    a1, a2, a3, a4, a5, a6 = p.coeffs
    k11 = Poly2({(0, 0): a1, (0, 1): 2 * a4, (0, 2): a6}, max_degree)
    k12 = Poly2({(0, 0): a3, (1, 0): -a4, (0, 1): -a5, (1, 1): -a6}, max_degree)
    k22 = Poly2({(0, 0): a2, (1, 0): 2 * a5, (2, 0): a6}, max_degree)
    return k11, k12, k22


def killing_equation_residual(k11, k12, k22):
    """The four components of the flat Killing equation, each zero for a Killing tensor."""
    return (
        k11.diff(1),
        k22.diff(2),
        k12.diff(1) * 2 + k11.diff(2),
        k12.diff(2) * 2 + k22.diff(1),
    )


def is_killing(k11, k12, k22, tol=0.0):
    return all(r.is_zero(tol) for r in killing_equation_residual(k11, k12, k22))


def kt_params_from_components(k11, k12, k22):
    """
    Read alpha_1..alpha_6 off polynomial components.

    Raises:
        MalformedInput: if the components are not of the general Killing form
    """
    def read(poly, i, j):
        c = poly.coefficient(i, j)
        return c if isinstance(c, float) else Fraction(c)

    p = KTParams.of(
        read(k11, 0, 0),
        read(k22, 0, 0),
        read(k12, 0, 0),
        read(k11, 0, 1) / 2,
        read(k22, 1, 0) / 2,
        read(k11, 0, 2),
    )
    expected = kt_component_polys(p, k11.max_degree)
    for given, rebuilt, name in zip((k11, k12, k22), expected, ("K11", "K12", "K22")):
        if not (given - rebuilt).is_zero(1e-12 * (1.0 + given.max_abs_coefficient())):
            raise MalformedInput(f"{name} = {given} is not of the general Killing form")
    return p


def one_form(p, V):
    """Components of K dV, i.e. (K^{1j} dV_j, K^{2j} dV_j)."""
    k11, k12, k22 = kt_component_polys(p, V.max_degree)
    v1, v2 = V.diff(1), V.diff(2)
    return k11 * v1 + k12 * v2, k12 * v1 + k22 * v2


def compatibility_residual(p, V):
    """The exterior derivative of K dV as a single polynomial."""
    w1, w2 = one_form(p, V)
    return w2.diff(1) - w1.diff(2)


def compatible(p, V, config=DEFAULT_CONFIG):
    """
    Test d(K dV) = 0.

    Exact inputs give an exact answer; otherwise the residual must vanish
    relative to the size of the one-form coefficients.
    """
    residual = compatibility_residual(p, V)
    if residual.is_exact():
        return residual.is_zero()
    w1, w2 = one_form(p, V)
    scale = 1.0 + max(w1.max_abs_coefficient(), w2.max_abs_coefficient())
    return residual.is_zero(config.compatibility_tol * scale)


def first_integral_potential(p, V, config=DEFAULT_CONFIG):
    """
    Primitive U of the closed one-form K dV, normalized to U(0, 0) = 0.

    Raises:
        Incompatible: if K dV is not closed
    """
    if not compatible(p, V, config):
        raise Incompatible(f"V = {V} is not compatible with K = {p}")
    w1, w2 = one_form(p, V)
    partial = w1.integrate(1)
    remainder = w2 - partial.diff(2)
    if not remainder.is_exact():
        remainder = remainder.chop(config.coefficient_tol * (1.0 + remainder.max_abs_coefficient()))
    # closedness leaves only x2 terms here
    return partial + remainder.free_of(1).integrate(2)


def separate(p, V, config=DEFAULT_CONFIG):
    """
    Full pipeline: web, moving frame, canonical tensor, transformed
    potential and first integral.

    Args:
        p: KTParams
        V: Poly2 potential
        config: Config

    Returns:
        SeparationReport

    Raises:
        Incompatible: if V is not compatible with p
        DegenerateInput: for metric multiples or ill-conditioned input
    """
    if not compatible(p, V, config):
        raise Incompatible(f"V = {V} is not compatible with K = {p}")
    result = moving_frame(p, config)
    if result.stratum is Stratum.E0:
        raise DegenerateInput(f"K = {p} is a metric multiple and defines no separable web")
    inverse = group_inverse(result.frame)
    transformed = V.compose_affine(inverse)
    approximate = not (result.frame.is_exact() and V.is_exact())
    if approximate:
        transformed = transformed.chop(config.coefficient_tol)
    return SeparationReport(
        web=WEB_BY_STRATUM[result.stratum],
        chart=result.chart,
        frame=result.frame,
        canonical_kt=result.canonical,
        transformed_potential=transformed,
        first_integral_potential=first_integral_potential(p, V, config),
        approximate=approximate,
    )


def yatsun_potential(coefficient=1, max_degree=32):
    """
    The Yatsun potential -2(x1^4 + 2 x1^2 x2^2 + c x2^4) + 4(x1^3 + x1 x2^2) - 2(x1^2 + x2^2).

    Args:
        coefficient: The coefficient c of x2^4; the integrable case is c = 1
    """
    c = Fraction(coefficient) if not isinstance(coefficient, float) else coefficient
    return Poly2({
        (4, 0): Fraction(-2),
        (2, 2): Fraction(-4),
        (0, 4): -2 * c,
        (3, 0): Fraction(4),
        (1, 2): Fraction(4),
        (2, 0): Fraction(-2),
        (0, 2): Fraction(-2),
    }, max_degree)
