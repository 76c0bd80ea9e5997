"""Intersection-graph models, structured algorithms, and brute-force oracles."""

__version__ = "0.1.0"
