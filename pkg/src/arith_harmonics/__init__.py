"""Arithmetic functions, Dirichlet products of power series and the
harmonic-analysis identities tying them together."""

__version__ = "0.1.0"
