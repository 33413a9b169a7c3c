"""Exact computations with finite-dimensional algebras, complexes and admissible degree sets."""
