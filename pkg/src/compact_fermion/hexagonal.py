"""Hexagonal-lattice variant of the compact encoding.

Faces are flat-topped hexagons arranged in ``face_columns`` columns of
``face_rows`` faces, odd columns sitting half a face lower than even ones.
Vertex coordinates are integers: ``x`` in units of half an edge length,
``y`` in units of half a hexagon height, ``y`` growing upwards (so "bottom
edge" and "clockwise" have their usual meaning).  Every face carries a qubit.

An open patch with more than one column needs one extra qubit per odd
column.  The top edge of the highest face in an odd column meets the
slanted edges of the neighbouring columns head to head (or tail to tail),
and in an infinite lattice the face above supplies the letters that make
those pairs anticommute.  That missing face is kept as a *cap*: it gets a
qubit and contributes its letters to the edges it would border.  Each cap
adds one gauge degree of freedom, which a weight-3 check on the bottom of
the same column fixes, so the code space is still the full Fock space.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .encoder import EdgeVertexEncoding, StabilizerGroup
from .errors import EncodingError, LatticeError
from .lattice import DirectedEdge, QubitLayout, Vertex
from .pauli import PauliString, commutes

HexFace = tuple[int, int]  # (column, row), row 0 at the bottom

# corner offsets from the face centre, clockwise from bottom-left
_ROLES = ("BL", "L", "TL", "TR", "R", "BR")
_OFFSETS = {"BL": (-1, -1), "L": (-2, 0), "TL": (-1, 1), "TR": (1, 1), "R": (2, 0), "BR": (1, -1)}


def _role_pairs():
    return [f"{a}-{b}" for a, b in zip(_ROLES, _ROLES[1:] + _ROLES[:1])]


@dataclass(frozen=True)
class HexLattice:
    face_columns: int
    face_rows: int

    kind = "hex"

    def __post_init__(self):
        if self.face_columns < 1 or self.face_rows < 1:
            raise LatticeError("hex lattice needs at least one face")

    def _raw_corners(self, f: HexFace) -> dict[str, Vertex]:
        k, j = f
        lowest = 1 if self.face_columns > 1 else 0  # shift so min y is 0
        cx, cy = 3 * k + 2, 2 * j - (k % 2) + 1 + lowest
        return {r: (cx + dx, cy + dy) for r, (dx, dy) in _OFFSETS.items()}

    @cached_property
    def _geometry(self) -> dict[HexFace, dict[str, Vertex]]:
        return {
            (k, j): self._raw_corners((k, j))
            for k in range(self.face_columns) for j in range(self.face_rows)
        }

    def faces(self) -> list[HexFace]:
        return sorted(self._geometry)

    def has_face(self, f) -> bool:
        return tuple(f) in self._geometry

    def face_corners(self, f: HexFace) -> dict[str, Vertex]:
        try:
            return self._geometry[f]
        except KeyError:
            raise LatticeError(f"{f} is not a face of {self}") from None

    def face_boundary(self, f: HexFace) -> list[Vertex]:
        """Corners clockwise, starting bottom-left."""
        c = self.face_corners(f)
        return [c[r] for r in _ROLES]

    def cap_faces(self) -> list[HexFace]:
        """Virtual faces above the top face of every odd column."""
        return [(k, self.face_rows) for k in range(1, self.face_columns, 2)]

    @cached_property
    def _vertices(self) -> tuple[Vertex, ...]:
        vs = {v for c in self._geometry.values() for v in c.values()}
        return tuple(sorted(vs, key=lambda v: (v[1], v[0])))

    def vertices(self) -> tuple[Vertex, ...]:
        """Sites sorted bottom row first, left to right."""
        return self._vertices

    @property
    def n_modes(self) -> int:
        return len(self._vertices)

    @property
    def n_faces(self) -> int:
        return len(self._geometry)

    def _roles_of(self, faces) -> dict[frozenset, list[tuple[HexFace, str]]]:
        roles: dict[frozenset, list[tuple[HexFace, str]]] = {}
        for f in faces:
            c = self._raw_corners(f)
            for pair in _role_pairs():
                a, b = pair.split("-")
                roles.setdefault(frozenset((c[a], c[b])), []).append((f, pair))
        return roles

    @cached_property
    def _edge_roles(self) -> dict[frozenset, list[tuple[HexFace, str]]]:
        """Undirected edge -> [(face, role of edge in face)], where role is
        the pair of corner roles it joins, e.g. ``"BL-L"``."""
        return self._roles_of(self._geometry)

    @cached_property
    def _cap_roles(self) -> dict[frozenset, list[tuple[HexFace, str]]]:
        return {e: r for e, r in self._roles_of(self.cap_faces()).items() if e in self._edge_roles}

    def edges(self) -> list[tuple[Vertex, Vertex]]:
        key = lambda v: (v[1], v[0])  # noqa: E731
        return sorted((tuple(sorted(e, key=key)) for e in self._edge_roles),
                      key=lambda e: (key(e[0]), key(e[1])))

    def has_vertex(self, v) -> bool:
        return tuple(v) in self._adjacency

    def has_edge(self, u, v) -> bool:
        return frozenset((tuple(u), tuple(v))) in self._edge_roles

    @cached_property
    def _adjacency(self) -> dict[Vertex, list[Vertex]]:
        adj: dict[Vertex, list[Vertex]] = {v: [] for v in self._vertices}
        for e in self._edge_roles:
            a, b = tuple(e)
            adj[a].append(b)
            adj[b].append(a)
        return {v: sorted(ns) for v, ns in adj.items()}

    def neighbors(self, v: Vertex) -> list[Vertex]:
        return self._adjacency[v]

    def edge_roles(self, u: Vertex, v: Vertex, *, with_caps: bool = False) -> list[tuple[HexFace, str]]:
        """Faces bordering ``u``-``v`` with the role the edge plays in each."""
        e = frozenset((tuple(u), tuple(v)))
        if e not in self._edge_roles:
            raise LatticeError(f"{u}-{v} is not an edge of {self}")
        return self._edge_roles[e] + (self._cap_roles.get(e, []) if with_caps else [])

    def orient_edge(self, u: Vertex, v: Vertex) -> DirectedEdge:
        """Clockwise around even-column faces, counterclockwise around odd
        ones, except bottom edges, which point east in even columns and west
        in odd columns."""
        roles = self.edge_roles(u, v)
        bottom = [f for f, r in roles if r == "BR-BL"]
        if bottom:
            c = self._geometry[bottom[0]]
            west, east = c["BL"], c["BR"]
            return DirectedEdge(west, east) if bottom[0][0] % 2 == 0 else DirectedEdge(east, west)
        f, role = roles[0]
        a, b = (self._geometry[f][r] for r in role.split("-"))  # clockwise a -> b
        return DirectedEdge(a, b) if f[0] % 2 == 0 else DirectedEdge(b, a)

    def directed_edges(self) -> list[DirectedEdge]:
        return [self.orient_edge(u, v) for u, v in self.edges()]

    @cached_property
    def _layout(self) -> QubitLayout:
        vq = {v: k for k, v in enumerate(self._vertices)}
        faces = self.faces() + self.cap_faces()
        return QubitLayout(vq, {f: len(vq) + k for k, f in enumerate(faces)})

    def qubit_layout(self) -> QubitLayout:
        """Vertex qubits, then one qubit per face, then the caps."""
        return self._layout

    def to_json(self) -> dict:
        return {"type": "hex", "face_columns": self.face_columns, "face_rows": self.face_rows}

    def __str__(self) -> str:
        return f"HexLattice({self.face_columns}x{self.face_rows} faces)"


class HexEncoding(EdgeVertexEncoding):
    """``X`` on the tail, ``Y`` on the head; a bottom edge adds ``Y`` on its
    face, and the two edges of that face meeting the bottom edge add ``X``.
    Cap faces contribute the same letters as real ones."""

    name = "compact"

    def __init__(self, lattice: HexLattice):
        self.lattice = lattice
        self.layout = lattice.qubit_layout()

    def _oriented_edge_operator(self, e: DirectedEdge) -> PauliString:
        vq, fq = self.layout.vertex_qubit, self.layout.face_qubit
        letters = {vq[e.tail]: "X", vq[e.head]: "Y"}
        for f, role in self.lattice.edge_roles(e.tail, e.head, with_caps=True):
            if role == "BR-BL":
                letters[fq[f]] = "Y"
            elif role in ("BL-L", "R-BR"):
                letters[fq[f]] = "X"
        return self._pauli(letters)

    def face_loops(self) -> dict:
        return {f: self.loop_operator(self.lattice.face_boundary(f)) for f in self.lattice.faces()}

    def gauge_checks(self) -> dict:
        """One check per cap: ``Z Z`` on the bottom edge of the cap's column
        and ``Y`` on that column's bottom face."""
        vq, fq = self.layout.vertex_qubit, self.layout.face_qubit
        checks = {}
        for cap in self.lattice.cap_faces():
            bottom = (cap[0], 0)
            c = self.lattice.face_corners(bottom)
            checks[cap] = self._pauli({vq[c["BL"]]: "Z", vq[c["BR"]]: "Z", fq[bottom]: "Y"})
        return checks

    @cached_property
    def stabilizers(self) -> StabilizerGroup:
        gens = tuple(self.face_loops().values()) + tuple(self.gauge_checks().values())
        return StabilizerGroup(gens, self.n_qubits)

    def majorana_sites(self) -> list[Vertex]:
        """Degree-2 sites whose edges all point in or all point out and
        whose Majorana commutes with every stabilizer generator."""
        gens = self.stabilizers.generators
        out = []
        for v in self.lattice.vertices():
            if len(self.lattice.neighbors(v)) > 2:
                continue
            op = self._arrow_majorana(v)
            if op is not None and all(commutes(op, g) for g in gens):
                out.append(v)
        return sorted(out)

    def inject_majorana(self, site: Vertex | None = None) -> PauliString:
        sites = self.majorana_sites()
        if not sites:  # pragma: no cover - every patch has such sites
            raise EncodingError("no uniformly oriented boundary site")
        site = tuple(site) if site is not None else sites[0]
        if site not in sites:
            raise EncodingError(f"{site} is not a valid injection site")
        return self._arrow_majorana(site)
