"""Certificates for achiral embeddability and intrinsic chirality of small graphs."""

__version__ = "0.1.0"

from .graph import MultiGraph, from_edge_list, zoo  # noqa: F401
from .chirality import Status, Verdict, classify  # noqa: F401
