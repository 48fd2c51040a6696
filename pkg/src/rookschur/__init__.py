"""Rook monoid algebras, extended Schur algebras and their duality on (x)^n U."""

from .errors import ResourceLimitError
from .linalg import RationalMatrix, commutant_basis, rank, span_dimension
from .rook import PartialPerm, compose, enumerate_rook, inverse, rook_size
from .rook_algebra import (BasisTerm, MonoidAlgebraElement, RookAlgebraElement, phi,
                           phi_inverse, rho_star)
from .schur import SchurElement, XiBasisElement, xi
from .specht import specht_rep
from .tensor import INF, left_schur_action, right_matrix_action, right_rook_action
from .duality import DualityReport, verify_duality

__version__ = "0.1.0"

__all__ = [
    "ResourceLimitError", "RationalMatrix", "commutant_basis", "rank", "span_dimension",
    "PartialPerm", "compose", "enumerate_rook", "inverse", "rook_size",
    "BasisTerm", "MonoidAlgebraElement", "RookAlgebraElement", "phi", "phi_inverse", "rho_star",
    "SchurElement", "XiBasisElement", "xi", "specht_rep",
    "INF", "left_schur_action", "right_matrix_action", "right_rook_action",
    "DualityReport", "verify_duality",
]
