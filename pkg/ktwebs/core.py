#!/usr/bin/env python3
"""
Core types and functionality for Killing tensor classification on the Euclidean plane.

A valence-two Killing tensor on E^2 is identified by six parameters
(alpha_1, ..., alpha_6). Values are carried either exactly (``Fraction``)
when every input is rational, or as floats otherwise.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Optional, Tuple, Union

Number = Union[Fraction, float]

TWO_PI = 2.0 * math.pi


class KTWebsError(ValueError):
    """Base class for all domain errors raised by ktwebs."""

    kind = "error"

    def to_dict(self):
        return {"error": self.kind, "message": str(self)}


class DegenerateInput(KTWebsError):
    """Input lies too close to a stratum boundary to classify reliably."""

    kind = "DegenerateInput"


class Incompatible(KTWebsError):
    """The potential does not satisfy d(K dV) = 0 for the given tensor."""

    kind = "Incompatible"


class DegreeOverflow(KTWebsError):
    """A polynomial exceeded the configured maximum degree."""

    kind = "DegreeOverflow"


class MalformedInput(KTWebsError):
    """Input could not be parsed or violates a type invariant."""

    kind = "MalformedInput"


# ---------------------------------------------------------------------------
# Scalars
# ---------------------------------------------------------------------------

def is_exact(value):
    """Return True if value belongs to the exact (rational) backend."""
    return isinstance(value, (Fraction, int)) and not isinstance(value, bool)


def to_scalar(value):
    """
    Convert an input value into a backend scalar.

    Integers, ``Fraction`` objects and "p/q" strings become exact
    ``Fraction`` values; floats (and decimal strings) stay floats.

    Args:
        value: int, float, Fraction or string

    Returns:
        Fraction or float

    Raises:
        MalformedInput: if the value cannot be interpreted or is not finite
    """
    if isinstance(value, bool):
        raise MalformedInput(f"Boolean is not a number: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise MalformedInput(f"Non-finite value: {value!r}")
        return value
    if isinstance(value, str):
        text = value.strip()
        try:
            if any(ch in text for ch in ".eE") and "/" not in text:
                return to_scalar(float(text))
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as e:
            raise MalformedInput(f"Cannot parse number {value!r}: {e}")
    raise MalformedInput(f"Unsupported number type: {type(value).__name__}")


def exact_sqrt(value):
    """Square root that stays exact for perfect rational squares."""
    if is_exact(value):
        q = Fraction(value)
        if q < 0:
            raise ValueError(f"Square root of negative value {q}")
        rn = math.isqrt(q.numerator)
        rd = math.isqrt(q.denominator)
        if rn * rn == q.numerator and rd * rd == q.denominator:
            return Fraction(rn, rd)
        return math.sqrt(q)
    return math.sqrt(max(float(value), 0.0))


def is_zero(value, tol=0.0):
    """Exact zero test on rationals, |value| <= tol on floats."""
    if is_exact(value):
        return value == 0
    return abs(value) <= tol


def normalize_angle(theta):
    """Reduce an angle to the interval (-pi, pi]."""
    r = math.fmod(float(theta), TWO_PI)
    if r <= -math.pi:
        r += TWO_PI
    elif r > math.pi:
        r -= TWO_PI
    return r + 0.0


def cos_sin(theta):
    """
    Cosine and sine of a normalized angle.

    Quarter-turn angles return exact integers so that rotations by
    0, +-pi/2 and pi keep rational data rational.
    """
    if theta == 0.0:
        return 1, 0
    if theta == math.pi:
        return -1, 0
    if theta == math.pi / 2:
        return 0, 1
    if theta == -math.pi / 2:
        return 0, -1
    return math.cos(theta), math.sin(theta)


def is_quarter_turn(theta):
    """True when cos_sin(theta) is exact."""
    return theta in (0.0, math.pi, math.pi / 2, -math.pi / 2)


# ---------------------------------------------------------------------------
# Value types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Point2:
    """A point (x1, x2) of the Euclidean plane."""

    x1: Number
    x2: Number

    def __post_init__(self):
        for v in (self.x1, self.x2):
            if not is_exact(v) and not math.isfinite(v):
                raise MalformedInput(f"Non-finite coordinate in {self!r}")

    def as_floats(self):
        return (float(self.x1), float(self.x2))


@dataclass(frozen=True)
class SymMat2:
    """Symmetric 2x2 matrix; k21 is k12 by construction."""

    k11: Number
    k12: Number
    k22: Number

    @property
    def k21(self):
        return self.k12

    def trace(self):
        return self.k11 + self.k22

    def det(self):
        return self.k11 * self.k22 - self.k12 * self.k12

    def rows(self):
        return ((self.k11, self.k12), (self.k12, self.k22))


@dataclass(frozen=True)
class KTParams:
    """
    The six parameters alpha_1..alpha_6 of a Killing two-tensor on E^2.

    ``values`` always holds the float rendition; ``exact`` holds the
    rational parameters when the tensor was specified with rationals.
    """

    values: Tuple[float, ...]
    exact: Optional[Tuple[Fraction, ...]] = None

    def __post_init__(self):
        if len(self.values) != 6:
            raise MalformedInput(f"Expected 6 parameters, got {len(self.values)}")
        if not all(math.isfinite(v) for v in self.values):
            raise MalformedInput(f"Non-finite parameter in {self.values}")
        if self.exact is not None:
            if len(self.exact) != 6:
                raise MalformedInput("Exact representation must have 6 entries")
            if tuple(float(q) for q in self.exact) != tuple(self.values):
                raise MalformedInput("Float values do not match exact representation")

    @classmethod
    def of(cls, *alphas):
        """
        Build parameters from six scalars.

        All-rational input (int, Fraction, "p/q") selects the exact backend;
        any float selects the real backend.
        """
        if len(alphas) == 1 and isinstance(alphas[0], (list, tuple)):
            alphas = tuple(alphas[0])
        scalars = [to_scalar(a) for a in alphas]
        if len(scalars) != 6:
            raise MalformedInput(f"Expected 6 parameters, got {len(scalars)}")
        if all(is_exact(s) for s in scalars):
            exact = tuple(Fraction(s) for s in scalars)
            return cls(tuple(float(q) for q in exact), exact)
        return cls(tuple(float(s) for s in scalars))

    @property
    def is_exact(self):
        return self.exact is not None

    @property
    def coeffs(self):
        """Parameters on the active backend."""
        return self.exact if self.exact is not None else self.values

    a1 = property(lambda self: self.coeffs[0])
    a2 = property(lambda self: self.coeffs[1])
    a3 = property(lambda self: self.coeffs[2])
    a4 = property(lambda self: self.coeffs[3])
    a5 = property(lambda self: self.coeffs[4])
    a6 = property(lambda self: self.coeffs[5])

    def as_floats(self):
        return KTParams(self.values)

    def scale(self):
        """Magnitude sqrt(sum alpha_i^2) used for relative zero tests."""
        return math.sqrt(sum(v * v for v in self.values))

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.coeffs) + ")"


@dataclass(frozen=True)
class GroupElement:
    """
    A proper Euclidean motion: rotation by theta followed by translation (a, b).

    theta is kept in (-pi, pi].
    """

    theta: float = 0.0
    a: Number = Fraction(0)
    b: Number = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "theta", normalize_angle(self.theta))
        for v in (self.a, self.b):
            if not is_exact(v) and not math.isfinite(v):
                raise MalformedInput(f"Non-finite translation in {self!r}")

    @classmethod
    def identity(cls):
        return cls(0.0, Fraction(0), Fraction(0))

    def cos_sin(self):
        return cos_sin(self.theta)

    def is_exact(self):
        return is_quarter_turn(self.theta) and is_exact(self.a) and is_exact(self.b)

    def as_tuple(self):
        return (self.theta, float(self.a), float(self.b))


# ---------------------------------------------------------------------------
# Pointwise tensor operations
# ---------------------------------------------------------------------------

def kt_components(p, x):
    """
    Evaluate the Killing tensor components K^{ij} at a point.

    Args:
        p: KTParams
        x: Point2

    Returns:
        SymMat2 with k11, k12, k22
    """
    a1, a2, a3, a4, a5, a6 = p.coeffs
    x1, x2 = x.x1, x.x2
    k11 = a1 + 2 * a4 * x2 + a6 * x2 * x2
    k12 = a3 - a4 * x1 - a5 * x2 - a6 * x1 * x2
    k22 = a2 + 2 * a5 * x1 + a6 * x1 * x1
    return SymMat2(k11, k12, k22)


def kt_eigenvalues(p, x):
    """Eigenvalues of K^{ij}(x), ascending."""
    return sym_eigenvalues(kt_components(p, x))


def sym_eigenvalues(m):
    """Eigenvalues of a symmetric 2x2 matrix, ascending (always real)."""
    diff = m.k11 - m.k22
    root = exact_sqrt(diff * diff + 4 * m.k12 * m.k12)
    tr = m.trace()
    return ((tr - root) / 2, (tr + root) / 2)


def group_apply_point(g, x):
    """Apply x -> R(theta) x + (a, b)."""
    c, s = g.cos_sin()
    return Point2(x.x1 * c - x.x2 * s + g.a, x.x1 * s + x.x2 * c + g.b)


def group_compose(g2, g1):
    """Composition g2 * g1 (apply g1 first)."""
    c, s = g2.cos_sin()
    a = g1.a * c - g1.b * s + g2.a
    b = g1.a * s + g1.b * c + g2.b
    return GroupElement(g1.theta + g2.theta, a, b)


def group_inverse(g):
    """Inverse motion."""
    c, s = g.cos_sin()
    return GroupElement(-g.theta, -(c * g.a + s * g.b), s * g.a - c * g.b)


def rotation_jacobian(g):
    """Jacobian d xbar / d x of the motion (the rotation matrix)."""
    c, s = g.cos_sin()
    return ((c, -s), (s, c))


# ---------------------------------------------------------------------------
# Configuration
# ---------------------------------------------------------------------------

class Config:
    """
    Configuration for classification, separation and rendering.
    """

    def __init__(self, data=None):
        self.data = data or {}
        self.tolerances = dict(DEFAULT_TOLERANCES)
        self.tolerances.update(self.data.get("tolerances", {}))
        self.polynomial = self.data.get("polynomial", {})
        self.max_degree = int(self.polynomial.get("max_degree", 32))
        self.render = self.data.get("render", {})
        self.reporting = self.data.get("reporting", {})
        self.execution = self.data.get("execution", {})

    @property
    def eps_zero(self):
        return float(self.tolerances["eps_zero"])

    @property
    def guard_zero(self):
        return float(self.tolerances["guard_zero"])

    @property
    def equivalence_tol(self):
        return float(self.tolerances["equivalence"])

    @property
    def coefficient_tol(self):
        return float(self.tolerances["poly_coefficient"])

    @property
    def compatibility_tol(self):
        return float(self.tolerances["compatibility"])

    @property
    def verbose(self):
        return bool(self.reporting.get("verbose", False))

    @property
    def emoji_output(self):
        return bool(self.reporting.get("emoji_output", True))

    @property
    def jobs(self):
        return int(self.execution.get("jobs", 1))

    def render_defaults(self):
        """
        Get rendering defaults.

        Returns:
            Tuple of (region, curves per family, samples per curve)
        """
        region = tuple(float(v) for v in self.render.get("region", [-2, -2, 2, 2]))
        return region, int(self.render.get("curves", 7)), int(self.render.get("samples", 200))

    def with_overrides(self, tolerances=None):
        """
        Copy of this configuration with some tolerance values replaced.

        Args:
            tolerances: Mapping of tolerance names to new values

        Returns:
            New Config object
        """
        data = dict(self.data)
        merged = dict(self.tolerances)
        merged.update(tolerances or {})
        data["tolerances"] = merged
        return Config(data)


DEFAULT_TOLERANCES: Dict[str, Any] = {
    "eps_zero": 1e-9,
    "guard_zero": 1e-7,
    "equivalence": 1e-9,
    "poly_coefficient": 1e-12,
    "compatibility": 1e-9,
}

DEFAULT_CONFIG = Config()
