"""Toric codes over finite fields."""

from .gf import Field, field_for_order, get_field
from .lattice import PointSet, Polytope2
from .linalg import BACKEND

__all__ = ["Field", "PointSet", "Polytope2", "BACKEND", "field_for_order", "get_field"]
__version__ = "0.1.0"
