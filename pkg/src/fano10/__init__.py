"""Exact lattice computations for special Fano fourfolds of degree 10."""
__version__ = "0.1.0"
