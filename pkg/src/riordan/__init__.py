"""Riordan graphs over GF(2): construction, decomposition, exact and floating spectra, bounds."""

__version__ = "0.1.0"
