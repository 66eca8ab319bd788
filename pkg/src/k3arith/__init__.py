"""Exact arithmetic toolkit for elliptic fibrations on a (2,2,2) K3 surface."""

__version__ = "0.1.0"
