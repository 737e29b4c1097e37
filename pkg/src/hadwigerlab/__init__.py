"""Graph-minor laboratory for 4-critical wheel-like graphs."""

__version__ = "0.1.0"
