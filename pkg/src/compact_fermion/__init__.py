"""Compact fermion-to-qubit mapping for square and hexagonal lattices."""

from .encoder import CompactEncoding, LogicalQubit, StabilizerGroup
from .hamiltonian import (
    CompiledHamiltonian,
    FermionicHamiltonian,
    FermionicTerm,
    compile_hamiltonian,
    compile_term,
    hubbard,
    random_hubbard,
    weight_stats,
)
from .hexagonal import HexEncoding, HexLattice
from .jordan_wigner import JordanWignerEncoding, ModeOrder, jw_edge_vertex, jw_ladder, jw_majorana
from .lattice import DirectedEdge, LatticeCase, QubitLayout, SquareLattice
from .pauli import PauliString, PauliSum, commutes, multiply, weight

__all__ = [
    "CompactEncoding",
    "CompiledHamiltonian",
    "DirectedEdge",
    "FermionicHamiltonian",
    "FermionicTerm",
    "HexEncoding",
    "HexLattice",
    "JordanWignerEncoding",
    "LatticeCase",
    "LogicalQubit",
    "ModeOrder",
    "PauliString",
    "PauliSum",
    "QubitLayout",
    "SquareLattice",
    "StabilizerGroup",
    "commutes",
    "compile_hamiltonian",
    "compile_term",
    "hubbard",
    "jw_edge_vertex",
    "jw_ladder",
    "jw_majorana",
    "multiply",
    "random_hubbard",
    "weight",
    "weight_stats",
]
