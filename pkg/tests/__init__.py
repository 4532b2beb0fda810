"""Cosmicode test suite."""
