#!/usr/bin/env python3
"""
ktwebs

Classification of valence-two Killing tensors on the Euclidean plane under
the group of proper motions: orbit strata, leaf invariants, moving frames,
canonical forms, separable potentials and orthogonal coordinate webs.
"""

__version__ = "1.0.0"
__description__ = "Killing tensor classification, moving frames and separable webs on E2"

# Import main types for easy access
from .core import (
    Config,
    DegenerateInput,
    DegreeOverflow,
    GroupElement,
    Incompatible,
    KTParams,
    KTWebsError,
    MalformedInput,
    Point2,
    SymMat2,
    group_apply_point,
    group_compose,
    group_inverse,
    kt_components,
    kt_eigenvalues,
)

# Import the operations
from .action import induced_action, pushforward_check
from .strata import Stratum, WebType, deltas, stratum, web_type
from .leaves import equivalent, leaf_label
from .frames import canonical_form, moving_frame, singular_points
from .polynomial import Poly2
from .separation import compatible, first_integral_potential, separate, yatsun_potential
from .webs import web_curves

__all__ = [
    'Config',
    'DegenerateInput',
    'DegreeOverflow',
    'GroupElement',
    'Incompatible',
    'KTParams',
    'KTWebsError',
    'MalformedInput',
    'Point2',
    'Poly2',
    'Stratum',
    'SymMat2',
    'WebType',
    'canonical_form',
    'compatible',
    'deltas',
    'equivalent',
    'first_integral_potential',
    'group_apply_point',
    'group_compose',
    'group_inverse',
    'induced_action',
    'kt_components',
    'kt_eigenvalues',
    'leaf_label',
    'moving_frame',
    'pushforward_check',
    'separate',
    'singular_points',
    'stratum',
    'web_curves',
    'web_type',
    'yatsun_potential',
    '__version__'
]
