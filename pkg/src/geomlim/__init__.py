"""Limits of orthogonal and unitary geometries: two-dimensional algebra
scalars, matrix groups over them, conjugacy limits and their cell
complexes, Heisenberg-plane representations, and regeneration of
parallelogram surface groups."""

__version__ = "0.1.0"

from . import algebra, cells, heisenberg, limits, matrices, regeneration

__all__ = ["algebra", "matrices", "limits", "cells", "heisenberg",
           "regeneration", "__version__"]
