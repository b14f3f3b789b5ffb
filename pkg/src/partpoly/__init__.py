"""Exact combinatorics of partitioned weight polytopes in classical types.

The polytope P_W(K) is the part of the W-permutohedron cut out by the
half-spaces ``alpha_k^vee(x) <= 0`` for ``k`` in K. This package computes its
facets, face numbers and h-polynomial, compares them with Precup's
Betti-number formula, and checks the ring-level statements behind the
equality by exact linear algebra.
"""
__version__ = "0.1.0"

from .rootsys import RSType, build_root_system
from .weyl import ParabolicK, all_K
from .facecount import f_vector, h_polynomial_faces
from .hesspoly import h_via_characters_A, h_via_precup

__all__ = [
    "RSType",
    "ParabolicK",
    "all_K",
    "build_root_system",
    "f_vector",
    "h_polynomial_faces",
    "h_via_precup",
    "h_via_characters_A",
    "__version__",
]
