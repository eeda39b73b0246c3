"""Exact classification tools for rank-2 aCM bundles on P1 x P1 x P1."""

__version__ = "0.1.0"
