"""Exact-arithmetic workbench for dialgebra cohomology and deformations
of dialgebra morphisms."""

__version__ = "0.1.0"
