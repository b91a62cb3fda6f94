"""Hilbert translation lengths, root-ratio resultants, and marked length spectra."""

__version__ = "0.1.0"
