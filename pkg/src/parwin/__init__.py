"""Spatially parallel windowed decoding of surface-code decoding graphs."""

__version__ = "0.1.0"
