import itertools

import numpy as np
import pytest

from compact_fermion import oracle
from compact_fermion.errors import LatticeError
from compact_fermion.hamiltonian import weight_stats
from compact_fermion.jordan_wigner import (
    JordanWignerEncoding,
    ModeOrder,
    jw_edge_vertex,
    jw_ladder,
    jw_majorana,
)
from compact_fermion.lattice import SquareLattice
from compact_fermion.pauli import PauliString
from helpers import kron_matrix


def sum_matrix(s):
    dim = 2 ** s.n_qubits
    return sum((c * kron_matrix(p) for c, p in s), np.zeros((dim, dim), dtype=complex))


def test_majorana_examples():
    assert jw_majorana(0, 3) == PauliString.from_label("XII")
    assert jw_majorana(1, 3, bar=True) == PauliString.from_label("ZYI")
    assert jw_majorana(2, 3).word == "ZZX"
    with pytest.raises(IndexError):
        jw_majorana(3, 3)


def test_ladder_example():
    terms = {p.to_label(): c for c, p in jw_ladder(1, 2, dagger=True)}
    assert terms == {"+ZX": 0.5, "+ZY": -0.5j}


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_ladder_matches_independent_matrices(n):
    ref = oracle.jw_ladder_matrices(n)
    for i in range(n):
        a = sum_matrix(jw_ladder(i, n, dagger=False))
        assert np.allclose(a, ref[i].toarray())
        assert np.allclose(sum_matrix(jw_ladder(i, n, dagger=True)), a.conj().T)


@pytest.mark.parametrize("n", [2, 4, 6])
def test_canonical_anticommutation(n):
    a = [sum_matrix(jw_ladder(i, n, dagger=False)) for i in range(n)]
    eye = np.eye(2 ** n)
    for i, j in itertools.product(range(n), repeat=2):
        ad = a[j].conj().T
        assert np.abs(a[i] @ ad + ad @ a[i] - (i == j) * eye).max() < 1e-12
        assert np.abs(a[i] @ a[j] + a[j] @ a[i]).max() < 1e-12


def test_edge_and_vertex_operators():
    e, v = jw_edge_vertex(0, 2, 3)
    assert v == PauliString.from_label("IIZ")
    assert e == (jw_majorana(0, 3) * jw_majorana(2, 3)).times_i(-1)
    assert e.word == "YZX"
    assert jw_edge_vertex(2, 0, 3)[0] == -e
    m = kron_matrix(jw_majorana(1, 3))
    assert np.allclose(m @ m, np.eye(8))
    with pytest.raises(ValueError):
        jw_edge_vertex(1, 1, 3)


def test_encoding_uses_snake_order():
    lat = SquareLattice(3, 2)
    enc = JordanWignerEncoding(lat)
    assert enc.layout.vertex_qubit[(0, 1)] == 5
    assert enc.stabilizers.generators == ()
    assert enc.n_qubits == 6
    assert enc.edge_operator((0, 0), (1, 0)).weight() == 2
    assert enc.edge_operator((0, 0), (0, 1)).weight() == 6
    assert enc.majorana((2, 1), bar=True).word == "ZZZYII"


def test_order_must_cover_sites():
    lat = SquareLattice(2, 2)
    with pytest.raises(LatticeError):
        JordanWignerEncoding(lat, ModeOrder(((0, 0), (1, 0))))
    with pytest.raises(LatticeError):
        ModeOrder(((0, 0), (0, 0)))
    row = JordanWignerEncoding(lat, ModeOrder.row_major(lat))
    assert row.layout.vertex_qubit[(0, 1)] == 2


def test_vertical_hopping_weight_grows_with_width():
    assert weight_stats(SquareLattice(4, 4), "jw").max_hopping_weight == 8
    assert weight_stats(SquareLattice(2, 2), "jw").max_hopping_weight == 4
