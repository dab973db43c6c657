"""Exact invariant-theoretic cohomology and stable splitting tables at small primes."""

__version__ = "0.1.0"
