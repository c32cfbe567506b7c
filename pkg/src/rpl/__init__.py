"""Exact rational-point counting and bound tables for curves over finite fields.

The package computes, in exact integer and rational arithmetic only:

* deterministic finite-field arithmetic with a canonical modulus choice (``gf``),
* point counts for a recursive family of projective curves (``homma_family``),
* split-place counts and genus data for an asymptotically optimal
  Artin-Schreier tower (``gs_tower``),
* Weierstrass semigroups at the tower's distinguished place (``semigroup``),
* classical point bounds and constant tables (``bounds``),
* a deterministic CLI and self-verification suite (``cli``, ``verify``).
"""

__version__ = "0.1.0"

__all__ = ["__version__"]
