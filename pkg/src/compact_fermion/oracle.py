"""Brute-force verification by dense matrices and symplectic checks.

Dense work is capped at :data:`MAX_QUBITS` qubits.  The fermionic reference
spectrum is built from Jordan-Wigner ladder matrices assembled directly with
``numpy.kron``, independently of the Pauli-string code under test.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np
import scipy.sparse.linalg  # noqa: F401  (registers sparse.linalg)
from scipy import sparse

from .encoder import CompactEncoding, EdgeVertexEncoding, StabilizerGroup
from .errors import EncodingError, SizeCapError
from .hamiltonian import FermionicHamiltonian, TermKind, compile_hamiltonian, make_encoding
from .hexagonal import HexEncoding
from .lattice import LatticeCase, SquareLattice
from .pauli import PauliString, PauliSum, commutes

MAX_QUBITS = 14
MAX_MODES = 10
MAX_COUNTEREXAMPLES = 5

_I2 = np.eye(2, dtype=complex)
_Z = np.diag([1.0, -1.0]).astype(complex)
_LOWER = np.array([[0, 1], [0, 0]], dtype=complex)  # |0><1|: removes a particle


def _cap(n: int, limit: int = MAX_QUBITS, what: str = "qubits"):
    if n > limit:
        raise SizeCapError(f"{n} {what} exceeds the dense cap of {limit}")


# -- dense operators ---------------------------------------------------------


def _pauli_action(p: PauliString) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """``(rows, cols, values)`` of the single nonzero entry in each column."""
    n = p.n_qubits
    # basis index: qubit 0 is the most significant bit
    rev = lambda v: int(format(v, f"0{n}b")[::-1], 2) if n else 0  # noqa: E731
    x, z = rev(p.x), rev(p.z)
    cols = np.arange(1 << n)
    parity = np.zeros(cols.size, dtype=np.int64)
    masked = cols & z
    while masked.any():
        parity ^= masked & 1
        masked >>= 1
    phase = 1j ** ((p.phase_exp + p.n_y) % 4)
    return cols ^ x, cols, phase * (1 - 2 * parity)


def _pauli_matrix(p: PauliString) -> np.ndarray:
    rows, cols, vals = _pauli_action(p)
    out = np.zeros((cols.size, cols.size), dtype=complex)
    out[rows, cols] = vals
    return out


def to_matrix(op: PauliString | PauliSum) -> np.ndarray:
    """Dense ``2^n x 2^n`` matrix; qubit 0 is the leftmost tensor factor."""
    _cap(op.n_qubits)
    if isinstance(op, PauliString):
        return _pauli_matrix(op)
    out = np.zeros((1 << op.n_qubits,) * 2, dtype=complex)
    for c, p in op:
        rows, cols, vals = _pauli_action(p)
        out[rows, cols] += c * vals
    return out


def to_sparse(op: PauliString | PauliSum) -> sparse.csr_matrix:
    """Same matrix as :func:`to_matrix`, in compressed sparse form."""
    _cap(op.n_qubits)
    dim = 1 << op.n_qubits
    terms = [(1.0, op)] if isinstance(op, PauliString) else list(op)
    if not terms:
        return sparse.csr_matrix((dim, dim), dtype=complex)
    parts = [_pauli_action(p) for _, p in terms]
    rows = np.concatenate([r for r, _, _ in parts])
    cols = np.concatenate([c for _, c, _ in parts])
    vals = np.concatenate([c * v for (c, _), (_, _, v) in zip(terms, parts)])
    return sparse.csr_matrix((vals, (rows, cols)), shape=(dim, dim))


def _require_commuting(stabs: StabilizerGroup):
    for a, b in itertools.combinations(stabs.generators, 2):
        if not commutes(a, b):
            raise EncodingError(f"generators {a} and {b} do not commute")


def codespace_projector(stabs: StabilizerGroup) -> np.ndarray:
    """Dense ``prod_g (1 + g)/2`` over the generators."""
    _cap(stabs.n_qubits)
    _require_commuting(stabs)
    proj = np.eye(1 << stabs.n_qubits, dtype=complex)
    for g in stabs.generators:
        rows, cols, vals = _pauli_action(g)
        gp = np.empty_like(proj)
        gp[rows] = vals[:, None] * proj[cols]  # g @ proj without a matmul
        proj = (proj + gp) / 2
    return proj


def _sparse_projector(stabs: StabilizerGroup) -> sparse.csc_matrix:
    _cap(stabs.n_qubits)
    _require_commuting(stabs)
    dim = 1 << stabs.n_qubits
    one = sparse.identity(dim, dtype=complex, format="csr")
    proj = one
    for g in stabs.generators:
        proj = proj @ ((one + to_sparse(g)) * 0.5)
    return proj.tocsc()


def projector_rank(proj: np.ndarray) -> int:
    """Integer rank from eigenvalues rounded at 0.5."""
    return int(np.sum(np.linalg.eigvalsh(proj) > 0.5))


def codespace_basis(stabs: StabilizerGroup) -> sparse.csc_matrix:
    """Orthonormal columns spanning the joint +1 eigenspace.

    Each column ``P|b>`` of the projector lives on the orbit of ``b`` under
    the X parts of the group, and columns from one orbit are parallel, so
    one normalised column per orbit gives an orthonormal basis.
    """
    proj = _sparse_projector(stabs)
    dim = proj.shape[0]
    covered = np.zeros(dim, dtype=bool)
    cols = []
    for b in range(dim):
        if covered[b]:
            continue
        col = proj[:, b]
        col.eliminate_zeros()
        norm = sparse.linalg.norm(col)
        covered[b] = True
        if norm > 1e-9:
            covered[col.indices] = True
            cols.append(col / norm)
    if not cols:
        return sparse.csc_matrix((dim, 0), dtype=complex)
    return sparse.hstack(cols, format="csc")


# -- fermionic reference -----------------------------------------------------


def jw_ladder_matrices(n_modes: int) -> list[sparse.csr_matrix]:
    """Sparse annihilation matrices ``a_k`` with a Jordan-Wigner sign string."""
    _cap(n_modes, MAX_MODES, "modes")
    out = []
    for k in range(n_modes):
        factors = [_Z] * k + [_LOWER] + [_I2] * (n_modes - k - 1)
        m = sparse.csr_matrix(np.array([[1.0 + 0j]]))
        for f in factors:
            m = sparse.kron(m, sparse.csr_matrix(f), format="csr")
        out.append(m)
    return out


def fermionic_matrix(ham: FermionicHamiltonian, order=None) -> np.ndarray:
    """Dense Fock-space matrix of ``ham`` from ladder matrices."""
    lattice = ham.lattice
    sites = list(order.order) if order is not None else list(lattice.vertices())
    index = {v: k for k, v in enumerate(sites)}
    a = jw_ladder_matrices(len(sites))
    n = [x.conj().T @ x for x in a]
    dim = 1 << len(sites)
    h = sparse.csr_matrix((dim, dim), dtype=complex)
    for term in ham.terms:
        ks = [index[s] for s in term.sites]
        if term.kind is TermKind.NUMBER:
            h += term.coeff * n[ks[0]]
        elif term.kind is TermKind.COULOMB:
            h += term.coeff * n[ks[0]] @ n[ks[1]]
        else:
            i, j = ks
            hop = a[i].conj().T @ a[j]
            h += term.coeff * (hop + hop.conj().T)
    return h.toarray()


SECTORS = ("full", "even-parity", "doubled")


@dataclass(frozen=True)
class SpectrumReport:
    eigenvalues: tuple[float, ...]
    sector: str

    @property
    def dimension(self) -> int:
        return len(self.eigenvalues)

    def multiplicities(self, tol: float = 1e-8) -> list[tuple[float, int]]:
        out: list[tuple[float, int]] = []
        for e in self.eigenvalues:
            if out and abs(e - out[-1][0]) <= tol:
                out[-1] = (out[-1][0], out[-1][1] + 1)
            else:
                out.append((e, 1))
        return out

    def to_json(self) -> dict:
        return {"sector": self.sector, "dimension": self.dimension,
                "eigenvalues": list(self.eigenvalues)}


def _sorted_real(values) -> tuple[float, ...]:
    return tuple(float(v) for v in np.sort(np.real(values)))


def fermionic_spectrum(ham: FermionicHamiltonian, sector: str = "full") -> SpectrumReport:
    """Eigenvalues of ``ham`` on the Fock space or its even-parity sector."""
    if sector not in ("full", "even-parity"):
        raise ValueError(f"sector must be 'full' or 'even-parity', not {sector!r}")
    _cap(ham.n_modes, MAX_MODES, "modes")
    h = fermionic_matrix(ham)
    if sector == "even-parity":
        occ = np.array([bin(b).count("1") for b in range(h.shape[0])])
        keep = np.flatnonzero(occ % 2 == 0)
        h = h[np.ix_(keep, keep)]
    return SpectrumReport(_sorted_real(np.linalg.eigvalsh(h)), sector)


def encoded_sector(encoding: EdgeVertexEncoding) -> str:
    """Which fermionic spectrum the encoded one should reproduce."""
    if isinstance(encoding, CompactEncoding):
        return {LatticeCase.I: "full", LatticeCase.II: "even-parity",
                LatticeCase.III: "doubled"}[encoding.case]
    return "full"


def encoded_spectrum(ham: FermionicHamiltonian, encoding: EdgeVertexEncoding | None = None) -> SpectrumReport:
    """Eigenvalues of the compiled Hamiltonian restricted to the codespace."""
    enc = encoding if encoding is not None else make_encoding(ham.lattice, "compact")
    _cap(enc.n_qubits)
    h = to_sparse(compile_hamiltonian(ham, enc).pauli_sum)
    q = codespace_basis(enc.stabilizers)
    block = (q.conj().T @ h @ q).toarray()
    return SpectrumReport(_sorted_real(np.linalg.eigvalsh(block)),
                          encoded_sector(enc))


def reference_spectrum(ham: FermionicHamiltonian, sector: str) -> SpectrumReport:
    """Fermionic spectrum the encoded one must match for ``sector``."""
    if sector == "doubled":
        base = fermionic_spectrum(ham, "full").eigenvalues
        return SpectrumReport(tuple(sorted(base + base)), "doubled")
    return fermionic_spectrum(ham, sector)


def spectrum_discrepancy(a: SpectrumReport | Sequence[float], b: SpectrumReport | Sequence[float]) -> float:
    """Largest pairwise gap between sorted spectra; ``inf`` on size mismatch."""
    ea = np.asarray(getattr(a, "eigenvalues", a), dtype=float)
    eb = np.asarray(getattr(b, "eigenvalues", b), dtype=float)
    if ea.shape != eb.shape:
        return float("inf")
    if ea.size == 0:
        return 0.0
    return float(np.max(np.abs(np.sort(ea) - np.sort(eb))))


def doubling_holds(report: SpectrumReport, tol: float = 1e-10) -> bool:
    """Every eigenvalue occurs an even number of times (sorted pairs agree)."""
    e = np.asarray(report.eigenvalues)
    return e.size % 2 == 0 and bool(np.all(np.abs(e[0::2] - e[1::2]) <= tol))


def groundspace_check(encoding, tol: float = 1e-10) -> bool:
    """The ground space of ``-sum(generators)`` equals the codespace."""
    enc = encoding if isinstance(encoding, EdgeVertexEncoding) else make_encoding(encoding)
    stabs = enc.stabilizers
    _cap(stabs.n_qubits)
    dim = 1 << stabs.n_qubits
    h = np.zeros((dim, dim), dtype=complex)
    for g in stabs.generators:
        h -= _pauli_matrix(g)
    w, v = np.linalg.eigh(h)
    ground = v[:, w < w[0] + 0.5]  # generator sums have integer gaps
    p_ground = ground @ ground.conj().T
    if abs(w[0] + len(stabs.generators)) > tol:
        return False
    return float(np.max(np.abs(p_ground - codespace_projector(stabs)))) <= tol


# -- symplectic relation suite ---------------------------------------------


@dataclass
class Check:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)

    def record(self, ok: bool, *example: object):
        self.checked += 1
        if not ok:
            self.failures.append(" ".join(str(e) for e in example))

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "failures": len(self.failures),
            "counterexamples": self.failures[:MAX_COUNTEREXAMPLES],
        }


@dataclass
class RelationReport:
    lattice: dict
    encoding: str
    checks: list[Check]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def check(self, name: str) -> Check:
        return next(c for c in self.checks if c.name == name)

    def to_json(self) -> dict:
        return {
            "format": 1,
            "lattice": self.lattice,
            "encoding": self.encoding,
            "passed": self.passed,
            "checks": [c.to_json() for c in self.checks],
        }


def _shortest_path(lattice, start, end) -> list:
    prev = {start: None}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        if v == end:
            break
        for w in lattice.neighbors(v):
            if w not in prev:
                prev[w] = v
                queue.append(w)
    path = [end]
    while path[-1] != start:
        path.append(prev[path[-1]])
    return path[::-1]


def _cycle_union(c1: list, c2: list) -> list | None:
    """Boundary of two same-sense face cycles sharing exactly one edge."""
    n1, n2 = len(c1), len(c2)
    for k in range(n1):
        a, b = c1[k], c1[(k + 1) % n1]
        if b in c2 and c2[(c2.index(b) + 1) % n2] == a:
            walk = [c1[(k + 1 + s) % n1] for s in range(n1)]  # b ... a
            start = c2.index(a)
            walk += [c2[(start + 1 + s) % n2] for s in range(n2 - 2)]
            return walk
    return None


def _test_loops(enc) -> list[list]:
    """Closed walks beyond single faces: rectangles on the square lattice,
    adjacent face pairs on the hex lattice."""
    lat = enc.lattice
    if isinstance(lat, SquareLattice):
        loops = []
        for x0, x1 in itertools.combinations(range(lat.width), 2):
            for y0, y1 in itertools.combinations(range(lat.height), 2):
                if (x1 - x0, y1 - y0) == (1, 1):
                    continue
                top = [(x, y0) for x in range(x0, x1)]
                right = [(x1, y) for y in range(y0, y1)]
                bottom = [(x, y1) for x in range(x1, x0, -1)]
                left = [(x0, y) for y in range(y1, y0, -1)]
                loops.append(top + right + bottom + left)
        return loops
    loops = []
    faces = lat.faces()
    for f, g in itertools.combinations(faces, 2):
        u = _cycle_union(lat.face_boundary(f), lat.face_boundary(g))
        if u is not None:
            loops.append(u)
    return loops


def _majorana_contract(check: Check, enc, site, op: PauliString, label: str,
                       hermitian: bool = True):
    """``op`` acts like a single Majorana at ``site``: anticommutes exactly
    with ``V_site`` and the edges at ``site`` and commutes with the
    stabilizers.  Holes are anti-hermitian, so hermiticity is optional."""
    for v, vo in enc.vertex_operators.items():
        check.record(commutes(op, vo) == (v != site), label, site, "vs V", v)
    for e, eo in enc.edge_operators.items():
        check.record(commutes(op, eo) == (site not in (e.tail, e.head)), label, site, "vs E", e.key())
    if hermitian:
        check.record(op.is_hermitian(), label, site, "not hermitian", op)
    check.record(enc.stabilizers.commutes_with(op), label, site, "breaks a stabilizer")


def verify_relations(target, *, include_loops: bool = True) -> RelationReport:
    """Exhaustive symplectic checks of an encoding (or of the compact
    encoding of a lattice)."""
    enc = target if isinstance(target, EdgeVertexEncoding) else make_encoding(target, "compact")
    lat = enc.lattice
    n = enc.n_qubits
    ident = PauliString.identity(n)
    edges = list(enc.edge_operators.items())
    verts = list(enc.vertex_operators.items())
    stabs = enc.stabilizers
    checks = []

    c = Check("edge_edge")
    for (e1, o1), (e2, o2) in itertools.combinations(edges, 2):
        share = len({e1.tail, e1.head} & {e2.tail, e2.head})
        c.record(commutes(o1, o2) == (share != 1), e1.key(), e2.key())
    checks.append(c)

    c = Check("edge_vertex")
    for e, eo in edges:
        for v, vo in verts:
            c.record(commutes(eo, vo) == (v not in (e.tail, e.head)), e.key(), v)
    checks.append(c)

    c = Check("vertex_vertex")
    for (v1, o1), (v2, o2) in itertools.combinations(verts, 2):
        c.record(commutes(o1, o2), v1, v2)
    checks.append(c)

    c = Check("hermitian_involution")
    for label, op in [(e.key(), o) for e, o in edges] + [(str(v), o) for v, o in verts]:
        c.record(op.is_hermitian() and op * op == ident, label, op)
    checks.append(c)

    c = Check("stabilizers_commute")
    for a, b in itertools.combinations(stabs.generators, 2):
        c.record(commutes(a, b), a, b)
    for g in stabs.generators:
        for label, op in [(e.key(), o) for e, o in edges] + [(str(v), o) for v, o in verts]:
            c.record(commutes(g, op), g, label)
    checks.append(c)

    c = Check("stabilizers_consistent")
    c.record(len(stabs) == 0 or not stabs.contains(-ident), "-I lies in the stabilizer group")
    c.record(stabs.n_nontrivial == len(stabs), "dependent generators", stabs.n_nontrivial, len(stabs))
    checks.append(c)

    c = Check("face_loops")
    for f, loop in enc.face_loops().items():
        c.record(stabs.contains(loop), "face", f, loop)
    for f, loop in enc.trivial_loops().items():
        c.record(loop == ident, "odd face", f, loop)
    checks.append(c)

    if include_loops:
        c = Check("larger_loops")
        for walk in _test_loops(enc):
            loop = enc.loop_operator(walk)
            c.record(loop == ident or stabs.contains(loop), "loop", walk[0], len(walk), loop)
        checks.append(c)

    checks.extend(_majorana_checks(enc))
    if isinstance(enc, CompactEncoding):
        checks.append(_toric_check(enc))
    return RelationReport(lat.to_json(), enc.name, checks)


def _majorana_checks(enc) -> list[Check]:
    lat = enc.lattice
    parity = enc.parity_operator()
    out = []
    if isinstance(enc, CompactEncoding):
        if enc.case is LatticeCase.II:
            c = Check("even_sector")
            c.record(enc.stabilizers.contains(parity), "parity is not fixed to +1")
            return [c]
        c = Check("majorana")
        h = Check("hole")
        corner = enc.default_corner()
        for site in lat.vertices():
            gam = enc.majorana(site)
            _majorana_contract(c, enc, site, gam, "majorana")
            alt = enc.majorana(site, _vertical_first(corner, site))
            c.record(enc.stabilizers.contains(gam * alt), "path dependence at", site)
            hole = enc.hole_operator(site)
            h.record(hole == gam * parity, "hole", site)
            _majorana_contract(h, enc, site, hole, "hole", hermitian=False)
            h.record(not commutes(hole, gam), "hole commutes with majorana at", site)
        out += [c, h]
        if enc.case is LatticeCase.III:
            out.append(_logical_check(enc))
        return out
    if isinstance(enc, HexEncoding):
        c = Check("majorana")
        start = enc.majorana_sites()[0]
        seed = enc.inject_majorana(start)
        for site in lat.vertices():
            gam = enc.transport(seed, _shortest_path(lat, start, site))
            _majorana_contract(c, enc, site, gam, "majorana")
        out.append(c)
    return out


def _vertical_first(start, end) -> list:
    (x0, y0), (x1, y1) = start, end
    path = [start]
    sy = 1 if y1 > y0 else -1
    path += [(x0, y) for y in range(y0 + sy, y1 + sy, sy)] if y1 != y0 else []
    sx = 1 if x1 > x0 else -1
    path += [(x, y1) for x in range(x0 + sx, x1 + sx, sx)] if x1 != x0 else []
    return path


def _logical_check(enc: CompactEncoding) -> Check:
    c = Check("logical_qubit")
    log = enc.logical_paulis()
    ops = {"X": log.x, "Y": log.y, "Z": log.z}
    for (a, pa), (b, pb) in itertools.combinations(ops.items(), 2):
        c.record(not commutes(pa, pb), a, b, "commute")
    c.record(log.x * log.y == log.z.times_i(1), "XY != iZ")
    for name, p in ops.items():
        c.record(p.is_hermitian() and not enc.stabilizers.contains(p) and not enc.stabilizers.contains(-p),
                 name, "is trivial or not hermitian")
        c.record(enc.stabilizers.commutes_with(p), name, "breaks a stabilizer")
        for e, eo in enc.edge_operators.items():
            c.record(commutes(p, eo), name, "vs E", e.key())
        for v, vo in enc.vertex_operators.items():
            c.record(commutes(p, vo), name, "vs V", v)
    for site in enc.lattice.vertices():
        other = enc.logical_paulis(site)
        for a, p, q in (("X", log.x, other.x), ("Y", log.y, other.y), ("Z", log.z, other.z)):
            c.record(enc.stabilizers.contains(p * q), a, "depends on the site", site)
    return c


def _toric_check(enc: CompactEncoding) -> Check:
    c = Check("toric_factorization")
    for f, g in enc.face_loops().items():
        try:
            face_part, vertex_part = enc.toric_factorization(g)
        except EncodingError as exc:
            c.record(False, f, exc)
            continue
        expected = enc.expected_stabilizer_letters(f)
        got = {q: g.letter(q) for q in g.support()}
        c.record(got == expected and face_part * vertex_part == g, f, g)
    return c
