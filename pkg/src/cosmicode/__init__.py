"""Cosmicode - dimensional cascades, mass ladders and hybrid-space collapse."""

__version__ = "0.1.0"
