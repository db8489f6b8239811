#!/usr/bin/env python3
"""
Orbit-dimension stratification of the parameter space and web types.
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Tuple

from .core import DEFAULT_CONFIG, DegenerateInput, Number, is_exact


class Stratum(Enum):
    """Invariant submanifolds, E3 split by the sign-free alpha_6 test."""

    E0 = "E0"
    E1 = "E1"
    E2 = "E2"
    E3P = "E3P"
    E3EH = "E3EH"


class WebType(Enum):
    """Orthogonal coordinate web generated by the tensor."""

    METRIC_MULTIPLE = "MetricMultiple"
    CARTESIAN = "Cartesian"
    POLAR = "Polar"
    PARABOLIC = "Parabolic"
    ELLIPTIC_HYPERBOLIC = "EllipticHyperbolic"


WEB_BY_STRATUM = {
    Stratum.E0: WebType.METRIC_MULTIPLE,
    Stratum.E1: WebType.CARTESIAN,
    Stratum.E2: WebType.POLAR,
    Stratum.E3P: WebType.PARABOLIC,
    Stratum.E3EH: WebType.ELLIPTIC_HYPERBOLIC,
}

# (submanifold dimension, orbit dimension)
DIMENSIONS = {
    Stratum.E0: (1, 0),
    Stratum.E1: (3, 1),
    Stratum.E2: (4, 2),
    Stratum.E3P: (6, 3),
    Stratum.E3EH: (6, 3),
}


@dataclass(frozen=True)
class StratumLabel:
    """
    Stratum of a parameter point plus the Delta invariants.

    ``margin`` is the smallest relative magnitude among the invariants
    that were judged non-zero; small values mean the point sits close to
    a stratum boundary. It is ``inf`` for E0.
    """

    stratum: Stratum
    deltas: Tuple[Number, Number, Number]
    margin: float
    exact: bool

    @property
    def orbit_dimension(self):
        return DIMENSIONS[self.stratum][1]

    @property
    def submanifold_dimension(self):
        return DIMENSIONS[self.stratum][0]

    def __str__(self):
        return self.stratum.value


def deltas(p):
    """
    Compute (Delta_1, Delta_2, Delta_3) for a parameter point.

    Args:
        p: KTParams

    Returns:
        Tuple of three scalars on the backend of p
    """
    a1, a2, a3, a4, a5, a6 = p.coeffs
    iota1 = a6 * (a1 - a2) - a4 * a4 + a5 * a5
    iota2 = a6 * a3 + a4 * a5
    d1 = iota1 * iota1 + 4 * iota2 * iota2
    da = a1 - a2
    d3 = da * da + 4 * a3 * a3
    return (d1, a6, d3)


def relative_sizes(p, ds=None):
    """
    Scale-free magnitudes of the Delta invariants.

    Delta_1 is quartic and Delta_3 quadratic in the parameters, so their
    square roots are compared against the matching power of the scale.
    """
    d1, d2, d3 = ds if ds is not None else deltas(p)
    n = p.scale()
    return (
        math.sqrt(abs(float(d1))) / (1.0 + n * n),
        abs(float(d2)) / (1.0 + n),
        math.sqrt(abs(float(d3))) / (1.0 + n),
    )


def stratum(p, config=DEFAULT_CONFIG):
    """
    Classify a parameter point.

    Zero tests are exact on the rational backend; on the real backend a
    quantity counts as zero when its relative size is at most eps_zero.

    Args:
        p: KTParams
        config: Config providing eps_zero

    Returns:
        StratumLabel

    Raises:
        DegenerateInput: if a float input overflows the invariants
    """
    ds = deltas(p)
    sizes = relative_sizes(p, ds)
    exact = p.is_exact and all(is_exact(d) for d in ds)
    if not exact and not all(math.isfinite(s) for s in sizes):
        raise DegenerateInput(f"Parameters {p} overflow double precision; rescale the tensor")
    if exact:
        nonzero = [d != 0 for d in ds]
    else:
        nonzero = [size > config.eps_zero for size in sizes]
    m1, m2, m3 = sizes

    if nonzero[0]:
        if nonzero[1]:
            return StratumLabel(Stratum.E3EH, ds, min(m1, m2), exact)
        return StratumLabel(Stratum.E3P, ds, m1, exact)
    if nonzero[1]:
        return StratumLabel(Stratum.E2, ds, m2, exact)
    if nonzero[2]:
        return StratumLabel(Stratum.E1, ds, m3, exact)
    return StratumLabel(Stratum.E0, ds, math.inf, exact)


def web_type(p, config=DEFAULT_CONFIG):
    """Web type generated by the tensor with parameters p."""
    return WEB_BY_STRATUM[stratum(p, config).stratum]
