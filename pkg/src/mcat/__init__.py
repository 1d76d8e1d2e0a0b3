"""Verification kernel for strict, weak, chiral and lax multiple categories."""

__version__ = "0.1.0"
