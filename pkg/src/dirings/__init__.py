"""Finite table algebra: near-rings, skew rings, weak rings, braces, dirings.

Groups are Cayley tables with 0 as the identity; every other structure
is a second operation table over such a group.  The package validates
structures, converts between the associative and the distributive
presentation of a pair, computes ideal and congruence lattices, and
enumerates all tables satisfying chosen axiom sets on small groups.
"""

from .axioms import AxiomProfile, StructureClass, classify, profile
from .binops import BinOp, named_op, op_add, op_compose, op_neg, op_sub
from .diring import Diring, make_diring, skew_to_weak, weak_to_skew
from .groups import FiniteGroup, standard_group, validate_group
from .omega import OmegaGroup, omega_from_binops, omega_group
from .search import SearchSpec, enumerate_binops, enumerate_dirings

__version__ = "0.1.0"

__all__ = [
    "AxiomProfile",
    "StructureClass",
    "classify",
    "profile",
    "BinOp",
    "named_op",
    "op_add",
    "op_compose",
    "op_neg",
    "op_sub",
    "Diring",
    "make_diring",
    "skew_to_weak",
    "weak_to_skew",
    "FiniteGroup",
    "standard_group",
    "validate_group",
    "OmegaGroup",
    "omega_group",
    "omega_from_binops",
    "SearchSpec",
    "enumerate_binops",
    "enumerate_dirings",
    "__version__",
]
