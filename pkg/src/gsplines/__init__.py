"""Exact computation and verification of generalized spline bases on edge-labeled graphs."""

__version__ = "0.1.0"
