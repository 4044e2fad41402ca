"""Independent dense reference for Pauli words, built with ``numpy.kron``."""

from functools import reduce

import numpy as np

SINGLE = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}


def kron_matrix(p) -> np.ndarray:
    """Matrix of a PauliString, qubit 0 as the leftmost factor."""
    mat = reduce(np.kron, [SINGLE[c] for c in p.word], np.eye(1, dtype=complex))
    return p.phase * mat


def word_matrix(word: str, coeff: complex = 1) -> np.ndarray:
    return coeff * reduce(np.kron, [SINGLE[c] for c in word], np.eye(1, dtype=complex))
