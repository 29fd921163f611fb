"""Hoffman colorability of graphs with smallest eigenvalue at least -2."""

__version__ = "0.1.0"
