"""Compact fermion-to-qubit encoding of edge and vertex operators.

Every directed edge ``i -> j`` maps to ``X_i Y_j`` times at most one letter
on the qubit of the odd face bordering it, and every vertex maps to ``Z_j``.
Loops of edge operators around even faces are the stabilizers; loops around
odd faces are the identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .errors import EncodingError, LatticeError
from .lattice import DirectedEdge, LatticeCase, QubitLayout, SquareLattice, Vertex
from .pauli import PauliString, commutes, in_group, product, symplectic_rank

SPECIES = ("A", "B", "C", "D")


@dataclass(frozen=True)
class StabilizerGroup:
    generators: tuple[PauliString, ...]
    n_qubits: int

    @property
    def n_nontrivial(self) -> int:
        return symplectic_rank(self.generators)

    def contains(self, p: PauliString) -> bool:
        """Exact membership, sign included."""
        if not self.generators:
            return p == PauliString.identity(self.n_qubits)
        return in_group(self.generators, p)

    def commutes_with(self, p: PauliString) -> bool:
        return all(commutes(g, p) for g in self.generators)

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)


@dataclass(frozen=True)
class LogicalQubit:
    x: PauliString
    y: PauliString
    z: PauliString


class EdgeVertexEncoding:
    """Machinery shared by encodings that map edge/vertex operators to Paulis.

    Subclasses provide ``lattice``, ``layout`` and ``_oriented_edge_operator``.
    """

    lattice = None
    layout: QubitLayout
    name = "abstract"

    @property
    def n_qubits(self) -> int:
        return self.layout.total

    def _pauli(self, letters: dict, phase_exp: int = 0) -> PauliString:
        return PauliString.from_sparse(self.n_qubits, letters, phase_exp)

    def _oriented_edge_operator(self, edge: DirectedEdge) -> PauliString:
        raise NotImplementedError

    @cached_property
    def edge_operators(self) -> dict[DirectedEdge, PauliString]:
        """Images of all edges in their lattice orientation."""
        return {e: self._oriented_edge_operator(e) for e in self.lattice.directed_edges()}

    def edge_operator(self, u: Vertex, v: Vertex) -> PauliString:
        """Image of ``E_uv``; requests against the orientation are negated."""
        e = self.lattice.orient_edge(u, v)
        op = self.edge_operators[e]
        return op if e.tail == u else -op

    def vertex_operator(self, v: Vertex) -> PauliString:
        try:
            q = self.layout.vertex_qubit[v]
        except KeyError:
            raise LatticeError(f"{v} is not a vertex") from None
        return self._pauli({q: "Z"})

    @cached_property
    def vertex_operators(self) -> dict[Vertex, PauliString]:
        return {v: self.vertex_operator(v) for v in self.lattice.vertices()}

    def parity_operator(self) -> PauliString:
        """Product of all vertex operators (total fermion parity)."""
        return product(self.vertex_operators.values(), self.n_qubits)

    def loop_operator(self, path: Sequence[Vertex]) -> PauliString:
        """``i**k`` times the ordered product of the ``k`` edge operators
        along a closed walk (the closing vertex may be omitted)."""
        path = list(path)
        if len(path) < 2:
            raise LatticeError("a loop needs at least two vertices")
        if path[0] != path[-1]:
            path.append(path[0])
        ops = []
        for a, b in zip(path, path[1:]):
            if not self.lattice.has_edge(a, b):
                raise LatticeError(f"{a} and {b} are not adjacent")
            ops.append(self.edge_operator(a, b))
        return product(ops).times_i(len(ops))

    def _walk(self, path: Sequence[Vertex]) -> PauliString:
        ops = []
        for a, b in zip(path, path[1:]):
            if not self.lattice.has_edge(a, b):
                raise LatticeError(f"broken path: {a} and {b} are not adjacent")
            ops.append(self.edge_operator(a, b))
        # gamma_b = i * gamma_a * E_ab for each step
        return product(ops, self.n_qubits).times_i(len(ops))

    def transport(self, corner_op: PauliString, path: Sequence[Vertex]) -> PauliString:
        """Move a single-Majorana operator along ``path`` by edge operators."""
        return corner_op * self._walk(path)

    # -- stabilizers -----------------------------------------------------

    def face_loops(self) -> dict:
        raise NotImplementedError

    def trivial_loops(self) -> dict:
        """Face loops that must equal ``+I`` exactly."""
        return {}

    @cached_property
    def stabilizers(self) -> StabilizerGroup:
        return StabilizerGroup(tuple(self.face_loops().values()), self.n_qubits)

    def stabilizer_generators(self) -> StabilizerGroup:
        return self.stabilizers

    # -- single Majoranas ------------------------------------------------

    def _arrow_majorana(self, v: Vertex) -> PauliString | None:
        """``X_v`` if every edge at ``v`` points in, ``Y_v`` if every edge
        points out, otherwise ``None``."""
        heads = {self.lattice.orient_edge(v, w).head == v for w in self.lattice.neighbors(v)}
        if len(heads) != 1:
            return None
        q = self.layout.vertex_qubit[v]
        return self._pauli({q: "X" if heads.pop() else "Y"})


class CompactEncoding(EdgeVertexEncoding):
    """Compact mapping on an open square lattice.

    ``flip_vertical_sign`` drops the minus sign of upward vertical edges; it
    exists only to demonstrate that the relation checks catch the mistake.
    """

    name = "compact"

    def __init__(self, lattice: SquareLattice, *, flip_vertical_sign: bool = False):
        self.lattice = lattice
        self.layout = lattice.qubit_layout()
        self.flip_vertical_sign = flip_vertical_sign

    @cached_property
    def case(self) -> LatticeCase:
        return self.lattice.classify_case().tag

    def _oriented_edge_operator(self, e: DirectedEdge) -> PauliString:
        vq, fq = self.layout.vertex_qubit, self.layout.face_qubit
        letters = {vq[e.tail]: "X", vq[e.head]: "Y"}
        f = self.lattice.odd_face_of(e.tail, e.head)
        sign = 0
        if e.axis == "vertical":
            face_letter = "X"
            upward = e.head[1] < e.tail[1]
            if upward and not self.flip_vertical_sign:
                sign = 2
        else:
            face_letter = "Y"
        if f is not None:
            letters[fq[f]] = face_letter
        return self._pauli(letters, sign)

    # -- loops and stabilizers -------------------------------------------

    def face_loop(self, face) -> PauliString:
        return self.loop_operator(self.lattice.face_boundary(face))

    def face_loops(self) -> dict:
        return {f: self.face_loop(f) for f in self.lattice.even_faces}

    def trivial_loops(self) -> dict:
        return {f: self.face_loop(f) for f in self.lattice.odd_faces}

    def toric_factorization(self, generator: PauliString) -> tuple[PauliString, PauliString]:
        """Split a stabilizer into (face-qubit part, vertex-qubit part).

        The vertex part is returned as ``+Z...Z`` on four vertex qubits; the
        sign of the generator is carried by the face part, so
        ``face_part * vertex_part == generator``.
        """
        m = self.layout.n_vertex_qubits
        vmask = (1 << m) - 1
        face_part = PauliString(self.n_qubits, generator.x & ~vmask, generator.z & ~vmask,
                                generator.phase_exp)
        vertex_part = PauliString(self.n_qubits, generator.x & vmask, generator.z & vmask)
        if vertex_part.x != 0 or vertex_part.weight() != 4:
            raise EncodingError(f"vertex part of {generator} is not a 4-qubit Z parity check")
        if face_part.z & ~face_part.x or face_part.weight() > 4:
            raise EncodingError(f"face part of {generator} is not an X/Y pattern on <= 4 qubits")
        if face_part * vertex_part != generator:
            raise EncodingError("factorization does not reproduce the generator")
        return face_part, vertex_part

    def expected_stabilizer_letters(self, face) -> dict[int, str]:
        """Letter pattern of an even-face stabilizer: Z on the corners, Y on
        the odd faces above/below, X on the odd faces left/right."""
        fx, fy = face
        vq, fq = self.layout.vertex_qubit, self.layout.face_qubit
        letters = {vq[v]: "Z" for v in self.lattice.face_boundary(face)}
        for nb, letter in (((fx, fy - 1), "Y"), ((fx, fy + 1), "Y"),
                           ((fx - 1, fy), "X"), ((fx + 1, fy), "X")):
            if nb in fq:
                letters[fq[nb]] = letter
        return letters

    # -- Majoranas, holes, logical qubit ---------------------------------

    def majorana_corners(self) -> list[Vertex]:
        """Lattice corners bounding an odd face, lexicographically sorted."""
        return [c for c in self.lattice.corners()
                if self.lattice.is_odd_face(self.lattice.corner_face(c))]

    def corner_operator(self, corner: Vertex) -> PauliString:
        if corner not in self.majorana_corners():
            raise EncodingError(f"{corner} is not a corner bounding an odd face")
        op = self._arrow_majorana(corner)
        if op is None:  # pragma: no cover - excluded by the orientation rule
            raise EncodingError(f"edges at {corner} are not uniformly oriented")
        return op

    def default_corner(self) -> Vertex:
        corners = self.majorana_corners()
        if not corners:
            raise EncodingError(
                "no corner vertices bound odd faces: only the even-parity sector is encoded"
            )
        return corners[0]

    def inject_majorana(self, corner: Vertex | None = None) -> PauliString:
        """Single Majorana at a corner: ``X`` where arrows point in, ``Y``
        where they point out."""
        return self.corner_operator(corner if corner is not None else self.default_corner())

    def staircase_path(self, start: Vertex, end: Vertex) -> list[Vertex]:
        """Horizontal run to the target column, then vertical run."""
        (x0, y0), (x1, y1) = start, end
        path = [start]
        step = 1 if x1 > x0 else -1
        path += [(x, y0) for x in range(x0 + step, x1 + step, step)] if x1 != x0 else []
        step = 1 if y1 > y0 else -1
        path += [(x1, y) for y in range(y0 + step, y1 + step, step)] if y1 != y0 else []
        return path

    def _check_path(self, path, start, end):
        if not path or path[0] != start or path[-1] != end:
            raise LatticeError(f"path must run from {start} to {end}")

    def majorana(self, site: Vertex, path: Sequence[Vertex] | None = None,
                 corner: Vertex | None = None) -> PauliString:
        """Encoded ``gamma_site``, transported from the injection corner."""
        corner = corner if corner is not None else self.default_corner()
        path = list(path) if path is not None else self.staircase_path(corner, site)
        self._check_path(path, corner, site)
        return self.transport(self.inject_majorana(corner), path)

    def hole_operator(self, site: Vertex, path: Sequence[Vertex] | None = None) -> PauliString:
        """Encoded ``h_site = gamma_site * prod_j V_j``."""
        return self.majorana(site, path) * self.parity_operator()

    def species_corners(self) -> dict[str, Vertex]:
        if self.case is not LatticeCase.III:
            raise EncodingError("Majorana species exist only with four odd corners")
        return dict(zip(SPECIES, self.majorana_corners()))

    def species_operator(self, species: str, site: Vertex,
                         path: Sequence[Vertex] | None = None) -> PauliString:
        corner = self.species_corners()[species]
        path = list(path) if path is not None else self.staircase_path(corner, site)
        self._check_path(path, corner, site)
        return self.transport(self.corner_operator(corner), path)

    def logical_paulis(self, site: Vertex | None = None) -> LogicalQubit:
        """Logical Paulis of the extra qubit from pairs of species at ``site``."""
        corners = self.species_corners()
        site = site if site is not None else corners["A"]
        b, c, d = (self.species_operator(s, site) for s in "BCD")
        return LogicalQubit(x=(c * d).times_i(-1), y=(d * b).times_i(-1), z=(b * c).times_i(-1))
