"""Exact invariant theory of eight points on the line and in space."""

__version__ = "0.4.0"
