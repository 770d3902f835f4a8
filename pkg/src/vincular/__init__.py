"""Vincular pattern avoidance toolkit."""

__version__ = "0.1.0"
