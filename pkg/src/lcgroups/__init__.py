"""Finite-group engine for LCM-sets, LC-series and the CP2 class."""
from .config import CapExceeded, Caps, caps, current_caps
from .kernels import BACKEND
from .perm import (
    FiniteGroup,
    Permutation,
    Subgroup,
    center,
    centralizer,
    compose,
    element_order,
    enumerate_group,
    is_normal,
    normal_closure,
    normalizer,
    subgroup_generated,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "CapExceeded",
    "Caps",
    "FiniteGroup",
    "Permutation",
    "Subgroup",
    "caps",
    "center",
    "centralizer",
    "compose",
    "current_caps",
    "element_order",
    "enumerate_group",
    "is_normal",
    "normal_closure",
    "normalizer",
    "subgroup_generated",
]
