"""Generalised colouring numbers of graphs."""

__version__ = "0.1.0"
