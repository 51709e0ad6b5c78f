"""Crossing Machine: exact crossing counts for straight-line drawings of K_n."""

__version__ = "0.1.0"
