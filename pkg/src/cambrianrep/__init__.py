"""Representations of type A quivers, triangulations of P(Q) and the Cambrian lattice."""
from .quiver import QuiverA, QuiverError, all_orientations
from .polygon import PolygonP, Segment, Triangulation, build_polygon
from .reps import IntervalModule, F_inv, F_map

__version__ = "0.1.0"

__all__ = [
    "QuiverA", "QuiverError", "all_orientations", "PolygonP", "Segment", "Triangulation",
    "build_polygon", "IntervalModule", "F_inv", "F_map", "__version__",
]
