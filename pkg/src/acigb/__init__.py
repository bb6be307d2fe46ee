"""Groebner bases of power-sum almost complete intersections via lattice paths."""

__version__ = "0.1.0"
