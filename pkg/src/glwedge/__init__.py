"""Exact symbolic kernel for the finite-rank bosonic representation of gl of exterior powers."""
__version__ = "0.1.0"
