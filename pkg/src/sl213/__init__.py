"""Exact verification engine for the invariant theory of SL(2,13) and its theta-constant realizations."""

__version__ = "0.1.0"
