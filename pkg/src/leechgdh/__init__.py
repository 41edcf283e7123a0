"""Exact re-execution of the generalised deep hole classification for the Leech lattice VOA."""
from __future__ import annotations

from .enumeration import DEFAULT_KERNEL, Mode, SphereQuery, close_vectors, closest_vectors
from .exactlat import ExactLattice, leech_lattice

__all__ = ["ExactLattice", "DEFAULT_KERNEL", "Mode", "SphereQuery", "close_vectors", "closest_vectors", "leech_lattice"]
__version__ = "0.1.0"
