"""Exact p-adic toolkit for checking hypergeometric supercongruences."""

__version__ = "0.1.0"
