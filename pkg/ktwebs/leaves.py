#!/usr/bin/env python3
"""
Leaf labels (complete SE(2) invariants per stratum) and equivalence.
"""

from dataclasses import dataclass
from typing import Tuple

from .core import DEFAULT_CONFIG, Number, is_exact
from .strata import Stratum, StratumLabel, stratum as classify


@dataclass(frozen=True)
class LeafLabel:
    """Stratum plus the invariant vector indexing the leaf (orbit)."""

    stratum: StratumLabel
    invariants: Tuple[Number, ...]
    flags: Tuple[str, ...] = ()

    def __str__(self):
        inv = ", ".join(str(v) for v in self.invariants)
        return f"{self.stratum.stratum.value}({inv})"


def leaf_invariants(kind, p):
    """
    Invariant vector of p for a given stratum.

    Args:
        kind: Stratum
        p: KTParams

    Returns:
        Tuple of invariants on the backend of p
    """
    a1, a2, a3, a4, a5, a6 = p.coeffs
    if kind is Stratum.E0:
        return (a1,)
    if kind is Stratum.E1:
        return (a1 + a2, a3 * a3 - a1 * a2)
    if kind is Stratum.E2:
        return (a6 * a1 - a4 * a4, a6)
    if kind is Stratum.E3P:
        return (a4 * a4 + a5 * a5, 2 * a3 * a4 * a5 + a1 * a5 * a5 + a2 * a4 * a4)
    return (
        a6,
        a6 * (a1 + a2) - a4 * a4 - a5 * a5,
        a6 * (a3 * a3 - a1 * a2) + a4 * a4 * a2 + 2 * a3 * a4 * a5 + a1 * a5 * a5,
    )


def leaf_label(p, config=DEFAULT_CONFIG):
    """
    Compute the leaf label of a parameter point.

    E1 labels violating I2 > -I1^2/4 are flagged, not rejected.
    """
    label = classify(p, config)
    invariants = leaf_invariants(label.stratum, p)
    flags = ()
    if label.stratum is Stratum.E1:
        i1, i2 = invariants
        if not i2 > -i1 * i1 / 4:
            flags = ("e1-leaf-bound",)
    return LeafLabel(label, invariants, flags)


def _close(x, y, tol):
    if is_exact(x) and is_exact(y):
        return x == y
    x, y = float(x), float(y)
    return abs(x - y) <= tol * max(1.0, abs(x), abs(y))


def labels_equivalent(left, right, tol):
    """Compare two leaf labels."""
    if left.stratum.stratum is not right.stratum.stratum:
        return False
    if len(left.invariants) != len(right.invariants):
        return False
    return all(_close(x, y, tol) for x, y in zip(left.invariants, right.invariants))


def equivalent(p, q, tol=None, config=DEFAULT_CONFIG):
    """
    Decide whether two Killing tensors lie on the same SE(2) orbit.

    Args:
        p: KTParams
        q: KTParams
        tol: Componentwise tolerance for float labels (defaults to config)
        config: Config object

    Returns:
        True if both points share stratum and leaf
    """
    if tol is None:
        tol = config.equivalence_tol
    if tol < 0:
        raise ValueError("tol must be non-negative")
    return labels_equivalent(leaf_label(p, config), leaf_label(q, config), tol)
