"""Exact oscillator representations of orthogonal Lie algebras."""

__version__ = "0.1.0"
