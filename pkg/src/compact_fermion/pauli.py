"""Exact Pauli-string algebra over n qubits.

A :class:`PauliString` stores its word symplectically as two integer bitmasks
(bit ``q`` of ``x``/``z`` refers to qubit ``q``) and an exact phase
``i**phase_exp`` in front of the tensor product of letters, where the letter
for ``(x, z) = (1, 1)`` is the genuine Pauli ``Y``.  Phases are never floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import DimensionError

_LETTER = {(0, 0): "I", (1, 0): "X", (0, 1): "Z", (1, 1): "Y"}
_BITS = {v: k for k, v in _LETTER.items()}
_PHASE_PREFIX = {0: "+", 1: "+i", 2: "-", 3: "-i"}
_PREFIX_PHASE = {"+": 0, "+i": 1, "-": 2, "-i": 3, "": 0, "i": 1}
_UNIT = {0: 1, 1: 1j, 2: -1, 3: -1j}


@dataclass(frozen=True)
class PauliString:
    """``i**phase_exp`` times a tensor product of single-qubit Paulis."""

    n_qubits: int
    x: int = 0
    z: int = 0
    phase_exp: int = 0

    def __post_init__(self):
        if self.n_qubits < 0:
            raise ValueError("n_qubits must be non-negative")
        limit = 1 << self.n_qubits
        if not (0 <= self.x < limit and 0 <= self.z < limit):
            raise ValueError("bitmask has bits beyond n_qubits")
        object.__setattr__(self, "phase_exp", self.phase_exp % 4)

    # -- construction -------------------------------------------------------

    @classmethod
    def identity(cls, n_qubits: int) -> PauliString:
        return cls(n_qubits)

    @classmethod
    def from_sparse(
        cls, n_qubits: int, letters: Mapping[int, str], phase_exp: int = 0
    ) -> PauliString:
        """Build from ``{qubit: letter}``; qubits not listed carry identity."""
        x = z = 0
        for q, letter in letters.items():
            if not 0 <= q < n_qubits:
                raise IndexError(f"qubit {q} out of range for {n_qubits} qubits")
            bx, bz = _BITS[letter.upper()]
            x |= bx << q
            z |= bz << q
        return cls(n_qubits, x, z, phase_exp)

    @classmethod
    def from_label(cls, label: str) -> PauliString:
        """Parse ``"-iXIZY"`` style labels (qubit 0 leftmost)."""
        label = label.strip()
        split = len(label) - len(label.lstrip("+-i"))
        prefix, word = label[:split], label[split:]
        if prefix not in _PREFIX_PHASE:
            raise ValueError(f"bad phase prefix {prefix!r}")
        x = z = 0
        for q, letter in enumerate(word):
            if letter not in _BITS:
                raise ValueError(f"bad Pauli letter {letter!r}")
            bx, bz = _BITS[letter]
            x |= bx << q
            z |= bz << q
        return cls(len(word), x, z, _PREFIX_PHASE[prefix])

    # -- inspection ---------------------------------------------------------

    @property
    def x_bits(self) -> tuple[int, ...]:
        return tuple((self.x >> q) & 1 for q in range(self.n_qubits))

    @property
    def z_bits(self) -> tuple[int, ...]:
        return tuple((self.z >> q) & 1 for q in range(self.n_qubits))

    @property
    def word(self) -> str:
        return "".join(self.letter(q) for q in range(self.n_qubits))

    @property
    def phase(self) -> complex:
        return _UNIT[self.phase_exp]

    @property
    def n_y(self) -> int:
        return (self.x & self.z).bit_count()

    def letter(self, qubit: int) -> str:
        return _LETTER[((self.x >> qubit) & 1, (self.z >> qubit) & 1)]

    def support(self) -> list[int]:
        mask = self.x | self.z
        return [q for q in range(self.n_qubits) if (mask >> q) & 1]

    def weight(self) -> int:
        return (self.x | self.z).bit_count()

    def is_identity(self) -> bool:
        """True for the identity word, whatever the phase."""
        return self.x == 0 and self.z == 0

    def is_hermitian(self) -> bool:
        return self.phase_exp % 2 == 0

    def unsigned(self) -> PauliString:
        return PauliString(self.n_qubits, self.x, self.z, 0)

    def to_label(self) -> str:
        return _PHASE_PREFIX[self.phase_exp] + self.word

    def __str__(self) -> str:
        return self.to_label()

    def __repr__(self) -> str:
        return f"PauliString({self.to_label()!r})"

    # -- algebra ------------------------------------------------------------

    def _check(self, other: PauliString):
        if self.n_qubits != other.n_qubits:
            raise DimensionError(
                f"cannot combine {self.n_qubits}-qubit and {other.n_qubits}-qubit Paulis"
            )

    def __mul__(self, other):
        if isinstance(other, PauliString):
            return multiply(self, other)
        return NotImplemented

    def __neg__(self) -> PauliString:
        return self.times_i(2)

    def times_i(self, k: int = 1) -> PauliString:
        """Multiply by ``i**k``."""
        return PauliString(self.n_qubits, self.x, self.z, self.phase_exp + k)

    def inverse(self) -> PauliString:
        # every letter word squares to +I, so only the phase inverts
        return PauliString(self.n_qubits, self.x, self.z, -self.phase_exp)

    adjoint = inverse

    def commutes(self, other: PauliString) -> bool:
        return commutes(self, other)

    def tensor(self, other: PauliString) -> PauliString:
        """``self ⊗ other`` with ``other`` on the higher qubit indices."""
        shift = self.n_qubits
        return PauliString(
            self.n_qubits + other.n_qubits,
            self.x | (other.x << shift),
            self.z | (other.z << shift),
            self.phase_exp + other.phase_exp,
        )

    def restrict(self, qubits: Sequence[int]) -> PauliString:
        """Sub-word on ``qubits`` (in the given order); phase is kept."""
        x = z = 0
        for k, q in enumerate(qubits):
            x |= ((self.x >> q) & 1) << k
            z |= ((self.z >> q) & 1) << k
        return PauliString(len(qubits), x, z, self.phase_exp)


def multiply(a: PauliString, b: PauliString) -> PauliString:
    """Exact group product ``a @ b``."""
    a._check(b)
    x, z = a.x ^ b.x, a.z ^ b.z
    # Y = i X Z; reorder Z^za X^xb = (-1)^{za.xb} X^xb Z^za
    exp = (
        a.phase_exp
        + b.phase_exp
        + a.n_y
        + b.n_y
        + 2 * (a.z & b.x).bit_count()
        - (x & z).bit_count()
    )
    return PauliString(a.n_qubits, x, z, exp)


def product(strings: Iterable[PauliString], n_qubits: int | None = None) -> PauliString:
    """Ordered product of ``strings`` (identity when empty)."""
    it = iter(strings)
    try:
        acc = next(it)
    except StopIteration:
        if n_qubits is None:
            raise ValueError("empty product needs n_qubits") from None
        return PauliString.identity(n_qubits)
    for s in it:
        acc = multiply(acc, s)
    return acc


def commutes(a: PauliString, b: PauliString) -> bool:
    """True iff ``ab == ba``, from the symplectic overlap parity."""
    a._check(b)
    return ((a.x & b.z).bit_count() + (a.z & b.x).bit_count()) % 2 == 0


def weight(a: PauliString) -> int:
    return a.weight()


# -- GF(2) span --------------------------------------------------------------


def _vec(p: PauliString) -> int:
    return p.x | (p.z << p.n_qubits)


def _echelon(generators: Sequence[PauliString]) -> list[tuple[int, int]]:
    """Reduced rows ``(vector, combination mask)`` with distinct pivots."""
    rows: list[tuple[int, int]] = []
    for k, g in enumerate(generators):
        v, combo = _vec(g), 1 << k
        for rv, rc in rows:
            if v ^ rv < v:
                v ^= rv
                combo ^= rc
        if v:
            rows.append((v, combo))
            rows.sort(reverse=True)
    return rows


def symplectic_rank(generators: Sequence[PauliString]) -> int:
    """Number of GF(2)-independent words among ``generators``."""
    return len(_echelon(generators))


def decompose(generators: Sequence[PauliString], target: PauliString) -> list[int] | None:
    """Indices of generators whose product equals ``target`` up to phase.

    Returns ``None`` when the word of ``target`` is outside the span.
    """
    rows = _echelon(generators)
    v, combo = _vec(target), 0
    for rv, rc in rows:
        if v ^ rv < v:
            v ^= rv
            combo ^= rc
    if v:
        return None
    return [k for k in range(len(generators)) if (combo >> k) & 1]


def group_element(generators: Sequence[PauliString], target: PauliString) -> PauliString | None:
    """The element of the group generated by commuting ``generators`` whose
    word matches ``target``, with its exact phase; ``None`` if absent."""
    idx = decompose(generators, target)
    if idx is None:
        return None
    return product((generators[k] for k in idx), target.n_qubits)


def in_group(generators: Sequence[PauliString], target: PauliString) -> bool:
    """Exact membership, phase included, for a group of commuting generators."""
    element = group_element(generators, target)
    return element is not None and element == target


# -- weighted sums -----------------------------------------------------------


def _bit_reverse(v: int, n: int) -> int:
    # qubit 0 becomes the most significant bit, so integer order is
    # lexicographic order on the bit sequence
    return int(format(v, f"0{n}b")[::-1], 2) if n else 0


class PauliSum:
    """Complex linear combination of letter words (phase-free PauliStrings).

    Terms are kept in a dict keyed by ``(x, z)``; instances are treated as
    immutable, every operation returns a new sum.
    """

    __slots__ = ("n_qubits", "_terms")

    def __init__(self, n_qubits: int, terms: Mapping[tuple[int, int], complex] | None = None):
        self.n_qubits = n_qubits
        self._terms: dict[tuple[int, int], complex] = dict(terms or {})

    @classmethod
    def from_pauli(cls, p: PauliString, coeff: complex = 1.0) -> PauliSum:
        return cls(p.n_qubits, {(p.x, p.z): coeff * p.phase})

    @classmethod
    def from_terms(
        cls, n_qubits: int, terms: Iterable[tuple[complex, PauliString]]
    ) -> PauliSum:
        acc: dict[tuple[int, int], complex] = {}
        for c, p in terms:
            if p.n_qubits != n_qubits:
                raise DimensionError("term size does not match the sum")
            key = (p.x, p.z)
            acc[key] = acc.get(key, 0) + c * p.phase
        return cls(n_qubits, acc)

    @classmethod
    def identity(cls, n_qubits: int, coeff: complex = 1.0) -> PauliSum:
        return cls(n_qubits, {(0, 0): coeff})

    @classmethod
    def zero(cls, n_qubits: int) -> PauliSum:
        return cls(n_qubits)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[tuple[complex, PauliString]]:
        for (x, z), c in self._terms.items():
            yield c, PauliString(self.n_qubits, x, z)

    @property
    def terms(self) -> list[tuple[complex, PauliString]]:
        return list(self)

    def coefficient(self, p: PauliString) -> complex:
        """Coefficient of the word of ``p`` (phase of ``p`` ignored)."""
        return self._terms.get((p.x, p.z), 0)

    def simplify(self, eps: float = 1e-12) -> PauliSum:
        n = self.n_qubits
        kept = {k: c for k, c in self._terms.items() if abs(c) > eps}
        order = sorted(kept, key=lambda k: (_bit_reverse(k[1], n), _bit_reverse(k[0], n)))
        return PauliSum(n, {k: kept[k] for k in order})

    def _check(self, other):
        if self.n_qubits != other.n_qubits:
            raise DimensionError("PauliSum size mismatch")

    def __add__(self, other):
        if isinstance(other, PauliString):
            other = PauliSum.from_pauli(other)
        if not isinstance(other, PauliSum):
            return NotImplemented
        self._check(other)
        acc = dict(self._terms)
        for k, c in other._terms.items():
            acc[k] = acc.get(k, 0) + c
        return PauliSum(self.n_qubits, acc)

    __radd__ = __add__

    def __neg__(self) -> PauliSum:
        return PauliSum(self.n_qubits, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, float, complex)):
            return PauliSum(self.n_qubits, {k: c * other for k, c in self._terms.items()})
        if isinstance(other, PauliString):
            other = PauliSum.from_pauli(other)
        if not isinstance(other, PauliSum):
            return NotImplemented
        self._check(other)
        acc: dict[tuple[int, int], complex] = {}
        n = self.n_qubits
        for (xa, za), ca in self._terms.items():
            a = PauliString(n, xa, za)
            for (xb, zb), cb in other._terms.items():
                p = multiply(a, PauliString(n, xb, zb))
                key = (p.x, p.z)
                acc[key] = acc.get(key, 0) + ca * cb * p.phase
        return PauliSum(n, acc)

    def __rmul__(self, other):
        if isinstance(other, (int, float, complex)):
            return self * other
        if isinstance(other, PauliString):
            return PauliSum.from_pauli(other) * self
        return NotImplemented

    def adjoint(self) -> PauliSum:
        return PauliSum(self.n_qubits, {k: c.conjugate() for k, c in self._terms.items()})

    def is_hermitian(self, tol: float = 1e-12) -> bool:
        return all(abs(complex(c).imag) <= tol for c in self._terms.values())

    def max_weight(self) -> int:
        return max(((x | z).bit_count() for x, z in self._terms), default=0)

    def commutes_with(self, p: PauliString) -> bool:
        """Term-by-term commutation with a single Pauli string."""
        return all(commutes(q, p) for _, q in self)

    def equals(self, other: PauliSum, tol: float = 1e-12) -> bool:
        diff = (self - other).simplify(tol)
        return len(diff) == 0

    def to_json(self) -> list[dict]:
        out = []
        for c, p in self.simplify():
            c = complex(c)
            # + 0.0 turns a negative zero into a plain one
            out.append({"re": c.real + 0.0, "im": c.imag + 0.0, "pauli": p.word})
        return out

    def __repr__(self) -> str:
        body = " + ".join(f"({complex(c):g}){p.word}" for c, p in self)
        return f"PauliSum({self.n_qubits}: {body or '0'})"
