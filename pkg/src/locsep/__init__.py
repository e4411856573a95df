"""Local separators in Cayley graphs of finite groups."""

from .cayley import CayleyGraph, Graph, Walk, ball, build, girth
from .cover import CoverWindow, ends_separated, ladder_window, path_window, verify_covering_window
from .groups import Group, parse_group_spec, validate_genset

__version__ = "0.1.0"
