"""Exact verification engine for a quartic Thue inequality over imaginary
quadratic integer rings."""

__version__ = "0.1.0"
