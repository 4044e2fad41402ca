"""Symbolic lattice Hamiltonians and their compilation to Pauli sums.

Supported terms, with ``n_i = a_i^dag a_i``:

* ``hopping(i, j, t)``: ``t (a_i^dag a_j + a_j^dag a_i)``
* ``coulomb(i, j, U)``: ``U n_i n_j``
* ``number(i, mu)``: ``mu n_i``

Every term is rewritten in edge and vertex operators before encoding:
``n_i = (1 - V_i)/2`` and ``a_i^dag a_j + h.c. = -(i/2)(E_ij V_j + V_i E_ij)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence

import numpy as np

from .encoder import CompactEncoding, EdgeVertexEncoding
from .errors import LatticeError
from .hexagonal import HexEncoding, HexLattice
from .jordan_wigner import JordanWignerEncoding, ModeOrder
from .lattice import QubitLayout, SquareLattice, Vertex
from .pauli import PauliSum

ENCODINGS = ("compact", "jw")


class TermKind(str, Enum):
    HOPPING = "hopping"
    COULOMB = "coulomb"
    NUMBER = "number"


@dataclass(frozen=True)
class FermionicTerm:
    kind: TermKind
    sites: tuple[Vertex, ...]
    coeff: float

    def __post_init__(self):
        object.__setattr__(self, "kind", TermKind(self.kind))
        object.__setattr__(self, "sites", tuple(tuple(s) for s in self.sites))
        expected = 1 if self.kind is TermKind.NUMBER else 2
        if len(self.sites) != expected:
            raise ValueError(f"{self.kind.value} term needs {expected} site(s)")
        if not math.isfinite(self.coeff):
            raise ValueError("term coefficient must be finite")

    @classmethod
    def hopping(cls, i: Vertex, j: Vertex, t: float) -> FermionicTerm:
        return cls(TermKind.HOPPING, (i, j), t)

    @classmethod
    def coulomb(cls, i: Vertex, j: Vertex, u: float) -> FermionicTerm:
        return cls(TermKind.COULOMB, (i, j), u)

    @classmethod
    def number(cls, i: Vertex, mu: float) -> FermionicTerm:
        return cls(TermKind.NUMBER, (i,), mu)

    def to_json(self) -> dict:
        out = {"kind": self.kind.value, "i": list(self.sites[0])}
        if len(self.sites) == 2:
            out["j"] = list(self.sites[1])
        out["coeff"] = self.coeff
        return out

    @classmethod
    def from_json(cls, data: dict) -> FermionicTerm:
        try:
            kind = TermKind(data["kind"])
            sites = [tuple(data["i"])]
            if kind is not TermKind.NUMBER:
                sites.append(tuple(data["j"]))
            return cls(kind, tuple(sites), float(data["coeff"]))
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed term {data!r}") from exc


@dataclass(frozen=True)
class FermionicHamiltonian:
    lattice: SquareLattice | HexLattice
    terms: tuple[FermionicTerm, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))
        for term in self.terms:
            for s in term.sites:
                if not self.lattice.has_vertex(s):
                    raise LatticeError(f"site {s} is not on {self.lattice}")
            if len(term.sites) == 2 and not self.lattice.has_edge(*term.sites):
                raise LatticeError(f"{term.kind.value} sites {term.sites} are not nearest neighbours")

    @property
    def n_modes(self) -> int:
        return self.lattice.n_modes

    def to_json(self) -> dict:
        return {"terms": [t.to_json() for t in self.terms]}

    @classmethod
    def from_json(cls, lattice, data: dict) -> FermionicHamiltonian:
        if not isinstance(data, dict) or not isinstance(data.get("terms"), list):
            raise ValueError("hamiltonian JSON needs a 'terms' list")
        return cls(lattice, tuple(FermionicTerm.from_json(t) for t in data["terms"]))


@dataclass(frozen=True)
class CompiledHamiltonian:
    encoding: str
    pauli_sum: PauliSum = field(compare=False)
    layout: QubitLayout = field(compare=False)

    @property
    def n_qubits(self) -> int:
        return self.pauli_sum.n_qubits

    def max_weight(self) -> int:
        return self.pauli_sum.max_weight()

    def to_json(self) -> dict:
        return {
            "format": 1,
            "encoding": self.encoding,
            "n_qubits": self.n_qubits,
            "terms": self.pauli_sum.to_json(),
        }


def make_encoding(lattice, encoding: str = "compact", order: ModeOrder | None = None) -> EdgeVertexEncoding:
    """Encoding object for ``lattice``: ``"compact"`` or ``"jw"``."""
    if encoding == "jw":
        return JordanWignerEncoding(lattice, order)
    if encoding == "compact":
        if isinstance(lattice, HexLattice):
            return HexEncoding(lattice)
        return CompactEncoding(lattice)
    raise ValueError(f"unknown encoding {encoding!r}; expected one of {ENCODINGS}")


def _resolve(lattice, encoding) -> EdgeVertexEncoding:
    if isinstance(encoding, EdgeVertexEncoding):
        return encoding
    return make_encoding(lattice, encoding)


def compile_term(lattice, term: FermionicTerm, encoding="compact") -> PauliSum:
    """Pauli image of one term; ``encoding`` is a name or an encoding object."""
    enc = _resolve(lattice, encoding)
    for s in term.sites:
        if not lattice.has_vertex(s):
            raise LatticeError(f"site {s} is not on {lattice}")
    n = enc.n_qubits
    one = PauliSum.identity(n)

    def occupation(v):
        return (one - PauliSum.from_pauli(enc.vertex_operator(v))) * 0.5

    if term.kind is TermKind.NUMBER:
        out = occupation(term.sites[0]) * term.coeff
    else:
        i, j = term.sites
        if not lattice.has_edge(i, j):
            raise LatticeError(f"{term.kind.value} sites {i}, {j} are not nearest neighbours")
        if term.kind is TermKind.COULOMB:
            out = occupation(i) * occupation(j) * term.coeff
        else:
            e = enc.edge_operator(i, j)
            pair = PauliSum.from_pauli(e * enc.vertex_operator(j)) + PauliSum.from_pauli(
                enc.vertex_operator(i) * e
            )
            out = pair * (-0.5j * term.coeff)
    return out.simplify()


def compile_hamiltonian(ham: FermionicHamiltonian, encoding="compact") -> CompiledHamiltonian:
    enc = _resolve(ham.lattice, encoding)
    total = PauliSum.zero(enc.n_qubits)
    for term in ham.terms:
        total = total + compile_term(ham.lattice, term, enc)
    return CompiledHamiltonian(enc.name, total.simplify(), enc.layout)


# -- model builders ----------------------------------------------------------


def hubbard(lattice, t: float = 1.0, u: float = 2.0, mu: float = 0.0) -> FermionicHamiltonian:
    """Spinless Hubbard-type model: ``-t`` hopping and ``U`` density
    interaction on every edge, optional chemical potential ``mu``."""
    terms: list[FermionicTerm] = []
    for a, b in lattice.edges():
        terms.append(FermionicTerm.hopping(a, b, -t))
        if u:
            terms.append(FermionicTerm.coulomb(a, b, u))
    if mu:
        terms.extend(FermionicTerm.number(v, mu) for v in lattice.vertices())
    return FermionicHamiltonian(lattice, tuple(terms))


def random_hubbard(lattice, seed: int) -> FermionicHamiltonian:
    """Hubbard-type model with independent random coefficients per edge and
    site, drawn from a seeded generator."""
    rng = np.random.default_rng(seed)
    terms: list[FermionicTerm] = []
    for a, b in lattice.edges():
        terms.append(FermionicTerm.hopping(a, b, float(rng.uniform(-1.5, 1.5))))
        terms.append(FermionicTerm.coulomb(a, b, float(rng.uniform(0.0, 3.0))))
    for v in lattice.vertices():
        terms.append(FermionicTerm.number(v, float(rng.uniform(-1.0, 1.0))))
    return FermionicHamiltonian(lattice, tuple(terms))


# -- weight statistics -------------------------------------------------------


@dataclass(frozen=True)
class WeightReport:
    encoding: str
    n_modes: int
    qubit_total: int
    max_hopping_weight: int
    max_coulomb_weight: int
    encoded_space: str

    @property
    def qubit_to_mode_ratio(self) -> float:
        return self.qubit_total / self.n_modes

    def to_json(self) -> dict:
        return {
            "encoding": self.encoding,
            "n_modes": self.n_modes,
            "qubit_total": self.qubit_total,
            "qubit_to_mode_ratio": self.qubit_to_mode_ratio,
            "max_hopping_weight": self.max_hopping_weight,
            "max_coulomb_weight": self.max_coulomb_weight,
            "encoded_space": self.encoded_space,
        }


def _max_weight(sums: Iterable[PauliSum]) -> int:
    return max((s.max_weight() for s in sums), default=0)


def encoded_space(lattice, encoding: str) -> str:
    if encoding == "compact" and isinstance(lattice, SquareLattice):
        return lattice.classify_case().tag.encoded_space
    return "Full"


def weight_stats(lattice, encoding="compact") -> WeightReport:
    """Qubit count and maximum weights of unit nearest-neighbour hopping and
    Coulomb terms over every edge of the lattice."""
    enc = _resolve(lattice, encoding)
    edges: Sequence = lattice.edges()
    hop = _max_weight(compile_term(lattice, FermionicTerm.hopping(a, b, 1.0), enc) for a, b in edges)
    coul = _max_weight(compile_term(lattice, FermionicTerm.coulomb(a, b, 1.0), enc) for a, b in edges)
    return WeightReport(enc.name, lattice.n_modes, enc.n_qubits, hop, coul,
                        encoded_space(lattice, enc.name))
