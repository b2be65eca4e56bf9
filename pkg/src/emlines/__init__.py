"""Closed-form transmission line, plane wave and waveguide calculations."""
__version__ = "0.1.0"
