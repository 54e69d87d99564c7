"""Exact symbolic computation for a family of quadratic algebras built from
the downward derivation and a weighted Euler operator on polynomial rings:
star products, Poisson brackets, localizations, automorphisms, centres,
spectra catalogues, and point-module machinery."""

from .polyring import AlgebraCtx
from .scalars import RAT, A, RatFunc, binom_scalar, rat, vandermonde_check

__version__ = "0.1.0"
__all__ = ["AlgebraCtx", "RAT", "A", "RatFunc", "binom_scalar", "rat",
           "vandermonde_check"]
