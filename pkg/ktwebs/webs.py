#!/usr/bin/env python3
"""
Coordinate-web curves in the original coordinates.

Each web is the pair of level-curve families of a canonical orthogonal
coordinate system (u, v). Levels are drawn from values the coordinate
actually takes inside the region, so every chosen curve meets it; the
curves are traced in canonical coordinates, mapped back through the
inverse moving frame and clipped to the region.
"""

import math
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np

from .core import DEFAULT_CONFIG, DegenerateInput, GroupElement, MalformedInput, Point2, group_inverse
from .frames import moving_frame, singular_points
from .strata import Stratum, WebType, WEB_BY_STRATUM

Region = Tuple[float, float, float, float]

GRID_SIZE = 97
PROBE_SAMPLES = 801


@dataclass
class Curve:
    """One clipped level curve: coordinate ``family`` fixed at ``level``."""

    family: int
    level: float
    params: np.ndarray
    points: List[Point2]


@dataclass
class WebPlot:
    """Two families of polylines plus the singular points of the web."""

    families: Tuple[List[Curve], List[Curve]] = field(default_factory=lambda: ([], []))
    annotations: List[Point2] = field(default_factory=list)
    region: Region = (-1.0, -1.0, 1.0, 1.0)
    web: Optional[WebType] = None
    frame: GroupElement = field(default_factory=GroupElement.identity)
    focal: float = 1.0

    def polylines(self, family):
        return [curve.points for curve in self.families[family]]

    def curve_count(self):
        return len(self.families[0]) + len(self.families[1])

    def tangent(self, curve, index):
        """
        Exact tangent of a curve at one of its samples, in original coordinates.
        """
        u, v = (curve.level, curve.params[index]) if curve.family == 0 else (curve.params[index], curve.level)
        du, dv = _coordinate_tangent(self.web, curve.family, u, v, self.focal)
        c, s = math.cos(self.frame.theta), math.sin(self.frame.theta)
        # back through the inverse rotation
        return (c * du + s * dv, -s * du + c * dv)


# ---------------------------------------------------------------------------
# Canonical coordinate systems
# ---------------------------------------------------------------------------

def _to_coordinates(web, X, Y, k):
    if web is WebType.CARTESIAN:
        return X, Y
    if web is WebType.POLAR:
        return np.hypot(X, Y), np.arctan2(Y, X)
    if web is WebType.PARABOLIC:
        r = np.hypot(X, Y)
        u = np.sqrt(np.maximum(r + X, 0.0))
        v = np.sign(Y) * np.sqrt(np.maximum(r - X, 0.0))
        # points on the negative axis: v carries the whole distance
        v = np.where(Y == 0, np.sqrt(np.maximum(r - X, 0.0)), v)
        return u, v
    # principal branch: real part >= 0, imaginary part in [-pi, pi]
    w = np.arccosh((X + 1j * Y) / k)
    return w.real, w.imag


def _from_coordinates(web, u, v, k):
    if web is WebType.CARTESIAN:
        return u, v
    if web is WebType.POLAR:
        return u * np.cos(v), u * np.sin(v)
    if web is WebType.PARABOLIC:
        return (u * u - v * v) / 2.0, u * v
    return k * np.cosh(u) * np.cos(v), k * np.sinh(u) * np.sin(v)


def _coordinate_tangent(web, family, u, v, k):
    """d(X, Y)/dt along the curve of ``family`` (0: u fixed, 1: v fixed)."""
    if web is WebType.CARTESIAN:
        return (0.0, 1.0) if family == 0 else (1.0, 0.0)
    if web is WebType.POLAR:
        if family == 0:
            return (-u * math.sin(v), u * math.cos(v))
        return (math.cos(v), math.sin(v))
    if web is WebType.PARABOLIC:
        return (-v, u) if family == 0 else (u, v)
    if family == 0:
        return (-k * math.cosh(u) * math.sin(v), k * math.sinh(u) * math.cos(v))
    return (k * math.sinh(u) * math.cos(v), k * math.cosh(u) * math.sin(v))


def _angular(web, family):
    """Whether the running parameter of ``family`` is an angle."""
    return web in (WebType.POLAR, WebType.ELLIPTIC_HYPERBOLIC) and family == 0


# ---------------------------------------------------------------------------
# Curve generation
# ---------------------------------------------------------------------------

def _validate(region, n_per_family, samples_per_curve):
    try:
        x0, y0, x1, y1 = (float(v) for v in region)
    except (TypeError, ValueError):
        raise MalformedInput(f"Region must be four numbers x0, y0, x1, y1, got {region!r}")
    if not all(math.isfinite(v) for v in (x0, y0, x1, y1)) or x0 >= x1 or y0 >= y1:
        raise MalformedInput(f"Region must satisfy x0 < x1 and y0 < y1, got {region!r}")
    if n_per_family < 1:
        raise MalformedInput(f"Need at least one curve per family, got {n_per_family}")
    if samples_per_curve < 2:
        raise MalformedInput(f"Need at least two samples per curve, got {samples_per_curve}")
    return x0, y0, x1, y1


def _to_canonical(frame, x, y):
    c, s = math.cos(frame.theta), math.sin(frame.theta)
    a, b = float(frame.a), float(frame.b)
    return c * x - s * y + a, s * x + c * y + b


def _inside(region, x, y, slack=1e-12):
    x0, y0, x1, y1 = region
    sx, sy = slack * (x1 - x0), slack * (y1 - y0)
    return (x >= x0 - sx) & (x <= x1 + sx) & (y >= y0 - sy) & (y <= y1 + sy)


def _runs(mask):
    """Index ranges [start, stop) of consecutive True entries."""
    edges = np.diff(np.concatenate(([0], mask.astype(np.int8), [0])))
    return list(zip(np.flatnonzero(edges == 1), np.flatnonzero(edges == -1)))


def _trace(web, family, level, t_range, inverse, region, samples, k):
    """Clip the level curve to the region and resample each visible piece."""
    def locate(t):
        fixed = np.full_like(t, level)
        u, v = (fixed, t) if family == 0 else (t, fixed)
        return _to_canonical(inverse, *_from_coordinates(web, u, v, k))

    t = np.linspace(t_range[0], t_range[1], PROBE_SAMPLES)
    x, y = locate(t)
    curves = []
    for start, stop in _runs(_inside(region, x, y)):
        if stop - start < 2:
            continue
        params = np.linspace(t[start], t[stop - 1], samples)
        px, py = locate(params)
        points = [Point2(float(a), float(b)) for a, b in zip(px, py)]
        curves.append(Curve(family, float(level), params, points))
    return curves


def web_curves(p, region=None, n_per_family=None, samples_per_curve=None, config=DEFAULT_CONFIG):
    """
    Build the coordinate web of a Killing tensor over a rectangle.

    Args:
        p: KTParams
        region: (x0, y0, x1, y1); defaults from config
        n_per_family: Level curves per family
        samples_per_curve: Points per emitted polyline
        config: Config

    Returns:
        WebPlot in original coordinates

    Raises:
        DegenerateInput: for metric multiples or ill-conditioned input
        MalformedInput: for an empty region or bad counts
    """
    default_region, default_curves, default_samples = config.render_defaults()
    n_per_family = n_per_family if n_per_family is not None else default_curves
    samples_per_curve = samples_per_curve if samples_per_curve is not None else default_samples
    region = _validate(region if region is not None else default_region, n_per_family, samples_per_curve)

    result = moving_frame(p, config)
    if result.stratum is Stratum.E0:
        raise DegenerateInput(f"K = {p} is a metric multiple and has no coordinate web")
    web = WEB_BY_STRATUM[result.stratum]
    canonical = result.canonical
    k = 1.0
    if web is WebType.ELLIPTIC_HYPERBOLIC:
        k = math.sqrt(float(canonical.a1 - canonical.a2) / float(canonical.a6))

    frame = result.frame
    inverse = group_inverse(frame)

    # coordinate values taken on a grid over the region
    x0, y0, x1, y1 = region
    gx, gy = np.meshgrid(np.linspace(x0, x1, GRID_SIZE), np.linspace(y0, y1, GRID_SIZE))
    U, V = _to_coordinates(web, *_to_canonical(frame, gx.ravel(), gy.ravel()), k)
    quantiles = (np.arange(n_per_family) + 0.5) / n_per_family

    families = ([], [])
    for family, (levels_of, running) in enumerate(((U, V), (V, U))):
        levels = np.unique(np.quantile(levels_of, quantiles, method="inverted_cdf"))
        if _angular(web, family):
            t_range = (-math.pi, math.pi)
        else:
            spread = float(running.max() - running.min())
            t_range = (float(running.min()) - 0.05 * spread - 1e-9, float(running.max()) + 0.05 * spread + 1e-9)
            if family == 1 and web is not WebType.CARTESIAN:
                # radial parameters are non-negative
                t_range = (max(t_range[0], 0.0), t_range[1])
        for level in levels:
            families[family].extend(
                _trace(web, family, level, t_range, inverse, region, samples_per_curve, k)
            )

    return WebPlot(
        families=families,
        annotations=singular_points(p, config),
        region=region,
        web=web,
        frame=frame,
        focal=k,
    )
