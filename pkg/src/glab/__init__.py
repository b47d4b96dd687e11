"""Exact computation lab for Baumslag-Solitar towers."""

__version__ = "0.1.0"
