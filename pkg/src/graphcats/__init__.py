"""Executable finite models of quivers, set-system hypergraphs, multigraphs
and incidence hypergraphs, with their functors, limits and exponentials."""

from .finset import Bounds, DEFAULT_BOUNDS, FiniteFunction, FiniteSet, HomAtom, MapAtom, SizeError, atom_text
from .quiver import Quiver, QuiverMorphism
from .set_system import HyperMorphism, SetSystemHypergraph
from .multigraph import MultigraphView
from .incidence import IncidenceHypergraph, IncidenceMorphism

__all__ = [
    "Bounds",
    "DEFAULT_BOUNDS",
    "FiniteFunction",
    "FiniteSet",
    "HomAtom",
    "MapAtom",
    "SizeError",
    "atom_text",
    "Quiver",
    "QuiverMorphism",
    "HyperMorphism",
    "SetSystemHypergraph",
    "MultigraphView",
    "IncidenceHypergraph",
    "IncidenceMorphism",
]
