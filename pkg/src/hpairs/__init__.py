"""Additive actions on hypersurfaces from local algebras with a generating hyperplane."""

__version__ = "0.1.0"
