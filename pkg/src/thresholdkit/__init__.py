"""Threshold coloring of graphs, exact solvers, and unit-cube contact representations."""

__version__ = "0.1.0"
