"""Ultrafilter calculus on eventually periodic sets."""

from ._betan import *  # noqa: F401,F403
from ._betan import Error, ParseError, Point, PairSet, Set, run

__all__ = [name for name in dir() if not name.startswith("_")]
