"""Open-boundary square lattice: geometry, edge orientation, qubit layout.

Vertices are ``(x, y)`` with column ``x`` growing to the right and row ``y``
growing downwards (row 0 is the top row).  Face ``(fx, fy)`` is the unit
square whose top-left vertex is ``(fx, fy)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Iterator

from .errors import LatticeError

Vertex = tuple[int, int]
Face = tuple[int, int]


class LatticeCase(str, Enum):
    """Relative number of odd and even faces; fixes the encoded space."""

    I = "I"  # noqa: E741 - equal numbers, full Fock space
    II = "II"  # one extra even face, even-parity sector
    III = "III"  # one extra odd face, Fock space plus a logical qubit

    @property
    def encoded_space(self) -> str:
        return {"I": "Full", "II": "Even", "III": "Full Plus Qubit"}[self.value]


@dataclass(frozen=True)
class CaseInfo:
    tag: LatticeCase
    n_modes: int
    n_odd: int
    n_even: int


@dataclass(frozen=True)
class DirectedEdge:
    tail: Vertex
    head: Vertex

    @property
    def axis(self) -> str:
        return "vertical" if self.tail[0] == self.head[0] else "horizontal"

    def reversed(self) -> DirectedEdge:
        return DirectedEdge(self.head, self.tail)

    def key(self) -> str:
        return f"{self.tail[0]},{self.tail[1]}->{self.head[0]},{self.head[1]}"


@dataclass(frozen=True)
class QubitLayout:
    """Vertex qubits first, then one qubit per face that carries one."""

    vertex_qubit: dict = field(hash=False)
    face_qubit: dict = field(hash=False)

    @property
    def n_vertex_qubits(self) -> int:
        return len(self.vertex_qubit)

    @property
    def total(self) -> int:
        return len(self.vertex_qubit) + len(self.face_qubit)

    def to_json(self) -> dict:
        return {
            "total": self.total,
            "vertex_qubits": {f"{v[0]},{v[1]}": q for v, q in self.vertex_qubit.items()},
            "face_qubits": {f"{f[0]},{f[1]}": q for f, q in self.face_qubit.items()},
        }


def _undirected(u: Vertex, v: Vertex) -> tuple[Vertex, Vertex]:
    return (u, v) if (u[1], u[0]) <= (v[1], v[0]) else (v, u)


@dataclass(frozen=True)
class SquareLattice:
    """``width`` x ``height`` sites; face ``(fx, fy)`` is odd iff
    ``(fx + fy) % 2 == checkerboard_phase`` (phase 0 makes the top-left
    face odd)."""

    width: int
    height: int
    checkerboard_phase: int = 0

    def __post_init__(self):
        if self.width < 2 or self.height < 2:
            raise LatticeError("square lattice needs at least 2x2 sites")
        if self.checkerboard_phase not in (0, 1):
            raise LatticeError("checkerboard_phase must be 0 or 1")

    kind = "square"

    # -- counts ----------------------------------------------------------

    @property
    def n_modes(self) -> int:
        return self.width * self.height

    @property
    def n_faces(self) -> int:
        return (self.width - 1) * (self.height - 1)

    # -- enumeration -----------------------------------------------------

    @cached_property
    def _vertices(self) -> tuple[Vertex, ...]:
        return tuple((x, y) for y in range(self.height) for x in range(self.width))

    def vertices(self) -> tuple[Vertex, ...]:
        """All sites in row-major order (top row first, left to right)."""
        return self._vertices

    def has_vertex(self, v) -> bool:
        return 0 <= v[0] < self.width and 0 <= v[1] < self.height

    def faces(self) -> Iterator[Face]:
        for fy in range(self.height - 1):
            for fx in range(self.width - 1):
                yield (fx, fy)

    def has_face(self, f) -> bool:
        return 0 <= f[0] < self.width - 1 and 0 <= f[1] < self.height - 1

    def is_odd_face(self, f: Face) -> bool:
        return (f[0] + f[1]) % 2 == self.checkerboard_phase

    @cached_property
    def odd_faces(self) -> tuple[Face, ...]:
        return tuple(f for f in self.faces() if self.is_odd_face(f))

    @cached_property
    def even_faces(self) -> tuple[Face, ...]:
        return tuple(f for f in self.faces() if not self.is_odd_face(f))

    def face_boundary(self, f: Face) -> list[Vertex]:
        """Corners of ``f`` clockwise on screen, starting top-left."""
        fx, fy = f
        return [(fx, fy), (fx + 1, fy), (fx + 1, fy + 1), (fx, fy + 1)]

    @cached_property
    def _edges(self) -> tuple[tuple[Vertex, Vertex], ...]:
        out = []
        for y in range(self.height):
            for x in range(self.width):
                if x + 1 < self.width:
                    out.append(((x, y), (x + 1, y)))
                if y + 1 < self.height:
                    out.append(((x, y), (x, y + 1)))
        return tuple(out)

    def edges(self) -> tuple[tuple[Vertex, Vertex], ...]:
        """Undirected edges, each once."""
        return self._edges

    def has_edge(self, u, v) -> bool:
        if not (self.has_vertex(u) and self.has_vertex(v)):
            return False
        return abs(u[0] - v[0]) + abs(u[1] - v[1]) == 1

    def _require_edge(self, u, v):
        if not self.has_edge(u, v):
            raise LatticeError(f"{u}-{v} is not an edge of {self}")

    def neighbors(self, v: Vertex) -> list[Vertex]:
        x, y = v
        cand = [(x, y - 1), (x + 1, y), (x, y + 1), (x - 1, y)]
        return [c for c in cand if self.has_vertex(c)]

    def corners(self) -> list[Vertex]:
        w, h = self.width - 1, self.height - 1
        return sorted({(0, 0), (w, 0), (0, h), (w, h)})

    def corner_face(self, c: Vertex) -> Face:
        return (min(c[0], self.width - 2), min(c[1], self.height - 2))

    # -- orientation -----------------------------------------------------

    def orient_edge(self, u: Vertex, v: Vertex) -> DirectedEdge:
        """Orient the undirected edge ``u``-``v``.

        Columns alternate: even columns point north (up), odd ones south.
        Rows alternate too, with the parity shifted by the checkerboard phase
        so that the even faces are exactly the directed 4-cycles.
        """
        self._require_edge(u, v)
        a, b = _undirected(u, v)
        if a[0] == b[0]:  # vertical, a above b
            north = a[0] % 2 == 0
            return DirectedEdge(b, a) if north else DirectedEdge(a, b)
        east = (a[1] + self.checkerboard_phase) % 2 == 1
        return DirectedEdge(a, b) if east else DirectedEdge(b, a)

    def directed_edges(self) -> list[DirectedEdge]:
        return [self.orient_edge(u, v) for u, v in self._edges]

    def adjacent_faces(self, u: Vertex, v: Vertex) -> list[Face]:
        self._require_edge(u, v)
        a, b = _undirected(u, v)
        if a[0] == b[0]:
            cand = [(a[0] - 1, a[1]), (a[0], a[1])]
        else:
            cand = [(a[0], a[1] - 1), (a[0], a[1])]
        return [f for f in cand if self.has_face(f)]

    def odd_face_of(self, u: Vertex, v: Vertex) -> Face | None:
        """The odd face bordering the edge, or ``None`` on a boundary edge
        that only touches an even face."""
        odd = [f for f in self.adjacent_faces(u, v) if self.is_odd_face(f)]
        return odd[0] if odd else None

    # -- bookkeeping -----------------------------------------------------

    def classify_case(self) -> CaseInfo:
        n_odd, n_even = len(self.odd_faces), len(self.even_faces)
        if n_odd == n_even:
            tag = LatticeCase.I
        elif n_even == n_odd + 1:
            tag = LatticeCase.II
        else:
            tag = LatticeCase.III
        return CaseInfo(tag, self.n_modes, n_odd, n_even)

    @cached_property
    def _layout(self) -> QubitLayout:
        vq = {v: k for k, v in enumerate(self._vertices)}
        m = len(vq)
        fq = {f: m + k for k, f in enumerate(self.odd_faces)}
        return QubitLayout(vq, fq)

    def qubit_layout(self) -> QubitLayout:
        return self._layout

    def snake_order(self) -> list[Vertex]:
        """Rows left to right and right to left alternately, top row first."""
        order = []
        for y in range(self.height):
            xs = range(self.width) if y % 2 == 0 else range(self.width - 1, -1, -1)
            order.extend((x, y) for x in xs)
        return order

    def to_json(self) -> dict:
        return {
            "type": "square",
            "width": self.width,
            "height": self.height,
            "checkerboard_phase": self.checkerboard_phase,
        }

    def __str__(self) -> str:
        return f"SquareLattice({self.width}x{self.height}, phase={self.checkerboard_phase})"
