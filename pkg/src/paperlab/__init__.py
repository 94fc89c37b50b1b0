"""Finite combinatorial models of simplicial sets, categories, subdivisions and
categoric realizations, with homology-based comparisons."""

__version__ = "0.1.0"
