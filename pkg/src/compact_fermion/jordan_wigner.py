"""Jordan-Wigner reference encoding.

Mode ``k`` (0-based) sits on qubit ``k``; ``a_k^dag`` becomes
``Z_0 ... Z_{k-1} (X_k - i Y_k) / 2``.  Lattice sites are numbered by a
:class:`ModeOrder`, snake order by default.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .encoder import EdgeVertexEncoding, StabilizerGroup
from .errors import LatticeError
from .lattice import DirectedEdge, QubitLayout, Vertex
from .pauli import PauliString, PauliSum


@dataclass(frozen=True)
class ModeOrder:
    """Bijection from lattice sites to mode indices ``0 .. M-1``."""

    order: tuple[Vertex, ...]

    def __post_init__(self):
        if len(set(self.order)) != len(self.order):
            raise LatticeError("mode order repeats a site")

    @classmethod
    def snake(cls, lattice) -> ModeOrder:
        """Snake order on a square lattice; sorted site order otherwise."""
        if hasattr(lattice, "snake_order"):
            return cls(tuple(lattice.snake_order()))
        return cls(tuple(lattice.vertices()))

    @classmethod
    def row_major(cls, lattice) -> ModeOrder:
        return cls(tuple(lattice.vertices()))

    @cached_property
    def index(self) -> dict[Vertex, int]:
        return {v: k for k, v in enumerate(self.order)}

    def __len__(self) -> int:
        return len(self.order)


def _check_mode(i: int, n_modes: int):
    if not 0 <= i < n_modes:
        raise IndexError(f"mode {i} out of range for {n_modes} modes")


def _string(i: int, n_modes: int, letter: str) -> PauliString:
    letters = {k: "Z" for k in range(i)}
    letters[i] = letter
    return PauliString.from_sparse(n_modes, letters)


def jw_majorana(i: int, n_modes: int, bar: bool = False) -> PauliString:
    """``gamma_i = Z..Z X_i`` or ``gamma_bar_i = Z..Z Y_i``."""
    _check_mode(i, n_modes)
    return _string(i, n_modes, "Y" if bar else "X")


def jw_ladder(i: int, n_modes: int, dagger: bool) -> PauliSum:
    """Creation (``dagger=True``) or annihilation operator of mode ``i``."""
    _check_mode(i, n_modes)
    sign = -1j if dagger else 1j
    return PauliSum.from_terms(n_modes, [
        (0.5, _string(i, n_modes, "X")),
        (0.5 * sign, _string(i, n_modes, "Y")),
    ])


def jw_edge_vertex(i: int, j: int, n_modes: int) -> tuple[PauliString, PauliString]:
    """``(E_ij, V_j)`` with ``E_ij = -i gamma_i gamma_j`` and
    ``V_j = -i gamma_j gamma_bar_j``."""
    if i == j:
        raise ValueError("edge operator needs two distinct modes")
    edge = (jw_majorana(i, n_modes) * jw_majorana(j, n_modes)).times_i(-1)
    vertex = (jw_majorana(j, n_modes) * jw_majorana(j, n_modes, bar=True)).times_i(-1)
    return edge, vertex


class JordanWignerEncoding(EdgeVertexEncoding):
    """Edge and vertex operators of a lattice under Jordan-Wigner."""

    name = "jw"

    def __init__(self, lattice, order: ModeOrder | None = None):
        self.lattice = lattice
        self.order = order if order is not None else ModeOrder.snake(lattice)
        if set(self.order.order) != set(lattice.vertices()):
            raise LatticeError("mode order must cover exactly the lattice sites")
        self.layout = QubitLayout(dict(self.order.index), {})

    def _oriented_edge_operator(self, e: DirectedEdge) -> PauliString:
        idx = self.order.index
        return jw_edge_vertex(idx[e.tail], idx[e.head], self.n_qubits)[0]

    def face_loops(self) -> dict:
        return {}

    @cached_property
    def stabilizers(self) -> StabilizerGroup:
        return StabilizerGroup((), self.n_qubits)

    def majorana(self, site: Vertex, bar: bool = False) -> PauliString:
        return jw_majorana(self.order.index[site], self.n_qubits, bar)
