"""Exact verification of degenerations of small Jordan algebras."""

__version__ = "0.1.0"
