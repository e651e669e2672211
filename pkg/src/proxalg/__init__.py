"""Descriptive proximity approximations and approximately algebraic structures over described grids."""

__version__ = "0.1.0"
