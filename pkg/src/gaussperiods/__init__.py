"""Gauss periods of type (n, 2) over finite fields and their multiplicative orders."""
__version__ = "0.1.0"
