import itertools

import numpy as np
import pytest

from compact_fermion.encoder import CompactEncoding
from compact_fermion.errors import EncodingError, LatticeError
from compact_fermion.lattice import DirectedEdge, LatticeCase, SquareLattice
from compact_fermion.pauli import PauliString, commutes
from helpers import kron_matrix, word_matrix


def encoding(w, h, phase=0, **kw):
    return CompactEncoding(SquareLattice(w, h, phase), **kw)


def letters(enc, op):
    """Map of qubit -> letter, keyed by vertex or face for readability."""
    names = {q: ("v", v) for v, q in enc.layout.vertex_qubit.items()}
    names.update({q: ("f", f) for f, q in enc.layout.face_qubit.items()})
    return {names[q]: op.letter(q) for q in op.support()}


def simple_cycles(lattice, length):
    """All simple cycles of ``length`` vertices, each listed once."""
    seen, out = set(), []
    for start in lattice.vertices():
        stack = [[start]]
        while stack:
            path = stack.pop()
            if len(path) == length:
                if lattice.has_edge(path[-1], start):
                    key = frozenset(zip(path, path[1:] + path[:1])) | frozenset(
                        zip(path[1:] + path[:1], path))
                    if key not in seen:
                        seen.add(key)
                        out.append(path)
                continue
            for w in lattice.neighbors(path[-1]):
                if w not in path:
                    stack.append(path + [w])
    return out


def test_edge_operator_examples():
    enc = encoding(3, 3)
    # horizontal interior edge in row 1 points east; odd face (0,0) above it
    e = enc.lattice.orient_edge((0, 1), (1, 1))
    assert e == DirectedEdge((0, 1), (1, 1))
    op = enc.edge_operators[e]
    assert letters(enc, op) == {("v", (0, 1)): "X", ("v", (1, 1)): "Y", ("f", (0, 0)): "Y"}
    assert op.phase_exp == 0 and op.weight() == 3
    # vertical edge in column 1 points south: +X Y X
    down = enc.edge_operators[DirectedEdge((1, 0), (1, 1))]
    assert letters(enc, down) == {("v", (1, 0)): "X", ("v", (1, 1)): "Y", ("f", (0, 0)): "X"}
    assert down.phase_exp == 0
    # vertical edge in column 0 points north: -X Y X
    up = enc.edge_operators[DirectedEdge((0, 1), (0, 0))]
    assert letters(enc, up) == {("v", (0, 1)): "X", ("v", (0, 0)): "Y", ("f", (0, 0)): "X"}
    assert up.phase_exp == 2


def test_boundary_edges_without_odd_face_have_weight_two():
    enc = encoding(2, 2, 1)
    assert all(op.weight() == 2 for op in enc.edge_operators.values())
    enc = encoding(4, 4, 0)
    for e, op in enc.edge_operators.items():
        expected = 3 if enc.lattice.odd_face_of(e.tail, e.head) else 2
        assert op.weight() == expected


def test_reversed_edge_is_negated():
    enc = encoding(3, 4)
    for e, op in enc.edge_operators.items():
        assert enc.edge_operator(e.head, e.tail) == -op
        assert enc.edge_operator(e.tail, e.head) == op


def test_vertex_operators():
    enc = encoding(3, 3)
    for v, op in enc.vertex_operators.items():
        assert op.weight() == 1 and op.letter(enc.layout.vertex_qubit[v]) == "Z"
    parity = enc.parity_operator()
    assert parity.word == "Z" * 9 + "II"
    with pytest.raises(LatticeError):
        enc.vertex_operator((5, 5))


def test_odd_face_loops_are_identity():
    for w, h, phase in itertools.product(range(2, 7), range(2, 7), (0, 1)):
        enc = encoding(w, h, phase)
        ident = PauliString.identity(enc.n_qubits)
        for loop in enc.trivial_loops().values():
            assert loop == ident


def test_flipped_sign_rule_makes_odd_loops_minus_identity():
    enc = encoding(3, 3, flip_vertical_sign=True)
    minus = -PauliString.identity(enc.n_qubits)
    assert all(loop == minus for loop in enc.trivial_loops().values())


def test_loop_rejects_non_adjacent_steps():
    enc = encoding(3, 3)
    with pytest.raises(LatticeError):
        enc.loop_operator([(0, 0), (1, 1), (0, 1)])


def test_bulk_stabilizer_letter_pattern():
    enc = encoding(5, 5)
    g = enc.face_loop((1, 2))
    assert letters(enc, g) == {
        ("v", (1, 2)): "Z", ("v", (2, 2)): "Z", ("v", (2, 3)): "Z", ("v", (1, 3)): "Z",
        ("f", (1, 1)): "Y", ("f", (1, 3)): "Y", ("f", (0, 2)): "X", ("f", (2, 2)): "X",
    }
    assert g.weight() == 8
    sign = 1j ** g.phase_exp
    m = word_matrix("".join(g.letter(q) for q in g.support()), sign)
    assert np.allclose(m @ m, np.eye(m.shape[0]))


def test_two_by_two_even_face_stabilizer_from_matrices():
    enc = encoding(2, 2, 1)
    (g,) = enc.stabilizers.generators
    # rebuild the loop from hand-written edge matrices: tail X, head Y,
    # minus sign on the upward vertical edge (column 0)
    corners = enc.lattice.face_boundary((0, 0))
    mats = []
    for a, b in zip(corners, corners[1:] + corners[:1]):
        e = enc.lattice.orient_edge(a, b)
        word = ["I"] * 4
        word[enc.layout.vertex_qubit[e.tail]] = "X"
        word[enc.layout.vertex_qubit[e.head]] = "Y"
        sign = -1 if (e.axis == "vertical" and e.head[1] < e.tail[1]) else 1
        if e.tail != a:
            sign = -sign
        mats.append(word_matrix("".join(word), sign))
    loop = (1j ** 4) * mats[0] @ mats[1] @ mats[2] @ mats[3]
    assert np.allclose(kron_matrix(g), loop)
    assert g == PauliString.from_label("+ZZZZ")


def test_stabilizer_counts():
    assert len(encoding(2, 2, 0).stabilizers) == 0
    for w, h, phase in itertools.product(range(2, 7), range(2, 7), (0, 1)):
        enc = encoding(w, h, phase)
        stabs = enc.stabilizers
        assert stabs.n_nontrivial == len(stabs) == len(enc.lattice.even_faces)
        assert all(not g.is_identity() for g in stabs)
        for a, b in itertools.combinations(stabs.generators, 2):
            assert commutes(a, b)


def test_generators_commute_with_all_encoded_operators():
    enc = encoding(5, 4)
    ops = list(enc.edge_operators.values()) + list(enc.vertex_operators.values())
    assert all(enc.stabilizers.commutes_with(op) for op in ops)


@pytest.mark.parametrize("length", [6, 8])
def test_all_short_cycles_lie_in_the_stabilizer_group(length):
    for phase in (0, 1):
        enc = encoding(4, 3, phase)
        cycles = simple_cycles(enc.lattice, length)
        assert cycles
        for c in cycles:
            loop = enc.loop_operator(c)
            assert loop.is_identity() and loop.phase_exp == 0 or enc.stabilizers.contains(loop)


def test_adjacent_face_loops_concatenate():
    enc = encoding(4, 4)
    a = enc.face_loop((1, 1))
    b = enc.face_loop((2, 1))
    merged = enc.loop_operator([(1, 1), (2, 1), (3, 1), (3, 2), (2, 2), (1, 2)])
    assert merged == a * b or merged == b * a


def test_case_two_parity_is_a_stabilizer():
    for w, h in [(2, 2), (4, 4), (2, 4), (6, 4)]:
        enc = encoding(w, h, 1)
        assert enc.case is LatticeCase.II
        assert enc.stabilizers.contains(enc.parity_operator())


def test_case_two_has_no_majorana():
    enc = encoding(2, 2, 1)
    with pytest.raises(EncodingError, match="even-parity"):
        enc.inject_majorana()
    with pytest.raises(EncodingError):
        enc.hole_operator((0, 0))


def test_corner_majorana_follows_arrows():
    enc = encoding(5, 4)
    assert enc.case is LatticeCase.I
    corners = enc.majorana_corners()
    assert len(corners) == 2
    for c in corners:
        op = enc.inject_majorana(c)
        incoming = all(enc.lattice.orient_edge(c, w).head == c for w in enc.lattice.neighbors(c))
        assert op.word.count("I") == enc.n_qubits - 1
        assert op.letter(enc.layout.vertex_qubit[c]) == ("X" if incoming else "Y")


def test_injected_majorana_contract():
    enc = encoding(2, 2, 0)
    assert len(enc.majorana_corners()) == 4
    for c in enc.majorana_corners():
        gam = enc.inject_majorana(c)
        for v, op in enc.vertex_operators.items():
            assert commutes(gam, op) == (v != c)
        for e, op in enc.edge_operators.items():
            assert commutes(gam, op) == (c not in (e.tail, e.head))


def test_transport_along_empty_and_single_edge_paths():
    enc = encoding(3, 3)
    c = enc.default_corner()
    gam = enc.inject_majorana(c)
    assert enc.transport(gam, [c]) == gam
    step = enc.transport(gam, [c, enc.lattice.neighbors(c)[0]])
    assert step.weight() <= 4 and step.is_hermitian()


def test_transport_rejects_broken_path():
    enc = encoding(3, 3)
    with pytest.raises(LatticeError):
        enc.majorana((2, 2), path=[(0, 0), (1, 1), (2, 2)])
    with pytest.raises(LatticeError):
        enc.majorana((2, 2), path=[(0, 1), (1, 1)])


def test_majorana_is_path_independent_modulo_stabilizers():
    enc = encoding(4, 5)
    c = enc.default_corner()
    for site in [(3, 4), (2, 2), (0, 4)]:
        a = enc.majorana(site)
        detour = enc.staircase_path(c, (3, 0)) + enc.staircase_path((3, 0), (3, 3))[1:]
        detour += enc.staircase_path((3, 3), site)[1:]
        b = enc.majorana(site, path=detour)
        assert enc.stabilizers.contains(a * b)


def test_hole_operator():
    enc = encoding(3, 3)
    c = enc.default_corner()
    assert enc.hole_operator(c) == enc.inject_majorana(c) * enc.parity_operator()
    for site in enc.lattice.vertices():
        h = enc.hole_operator(site)
        assert not commutes(h, enc.vertex_operator(site))
        for w in enc.lattice.neighbors(site):
            assert not commutes(h, enc.edge_operator(site, w))
        assert not commutes(h, enc.majorana(site))


def test_species_anticommutation_pattern():
    enc = encoding(4, 4, 0)
    sites = [(0, 0), (2, 1), (3, 3)]
    ops = {(s, i): enc.species_operator(s, i) for s in "ABCD" for i in sites}
    for (s1, i1), (s2, i2) in itertools.combinations(ops, 2):
        anti = (s1 == s2) != (i1 == i2)  # same species/other site, or same site/other species
        assert commutes(ops[s1, i1], ops[s2, i2]) != anti, (s1, i1, s2, i2)


def test_logical_qubit_algebra():
    for w, h in [(2, 2), (4, 4), (4, 2)]:
        enc = encoding(w, h, 0)
        assert enc.case is LatticeCase.III
        log = enc.logical_paulis()
        assert log.x * log.y == log.z.times_i(1)
        for a, b in itertools.combinations((log.x, log.y, log.z), 2):
            assert not commutes(a, b)
        ops = list(enc.edge_operators.values()) + list(enc.vertex_operators.values())
        for p in (log.x, log.y, log.z):
            assert p.is_hermitian()
            assert enc.stabilizers.commutes_with(p)
            assert all(commutes(p, op) for op in ops)


def test_logicals_do_not_depend_on_the_site():
    enc = encoding(4, 4, 0)
    ref = enc.logical_paulis()
    for site in enc.lattice.vertices():
        other = enc.logical_paulis(site)
        for a, b in ((ref.x, other.x), (ref.y, other.y), (ref.z, other.z)):
            assert enc.stabilizers.contains(a * b)


def test_four_by_four_logical_strings():
    enc = encoding(4, 4, 0)
    log = enc.logical_paulis()
    assert log.x.weight() >= 4
    corners = enc.species_corners()
    for species in "CD":
        assert enc.layout.vertex_qubit[corners[species]] in log.x.support()
    # string of Z down the right column with X on its two odd faces
    vq, fq = enc.layout.vertex_qubit, enc.layout.face_qubit
    fig_x = PauliString.from_sparse(21, {**{vq[(3, y)]: "Z" for y in range(4)},
                                         fq[(2, 0)]: "X", fq[(2, 2)]: "X"})
    assert enc.stabilizers.contains(fig_x * log.x) or enc.stabilizers.contains(-(fig_x * log.x))
    # Z along the bottom row with Y on the two bottom odd faces, exactly
    assert log.y == PauliString.from_label("+IIIIIIIIIIIIZZZZIIIYY")


def test_logicals_require_case_three():
    with pytest.raises(EncodingError):
        encoding(3, 3).logical_paulis()


def test_toric_factorization():
    enc = encoding(5, 5)
    for f, g in enc.face_loops().items():
        face_part, vertex_part = enc.toric_factorization(g)
        assert face_part * vertex_part == g
        assert vertex_part.weight() == 4 and vertex_part.x == 0
        assert sorted(face_part.word.replace("I", "")) in (["X", "X", "Y", "Y"], ["X", "Y", "Y"],
                                                           ["X", "X", "Y"], ["X", "Y"], ["Y"], ["X"])
    face_part, _ = enc.toric_factorization(enc.face_loop((1, 2)))
    assert sorted(face_part.word.replace("I", "")) == ["X", "X", "Y", "Y"]
    tiny = encoding(2, 2, 1)
    face_part, vertex_part = tiny.toric_factorization(tiny.stabilizers.generators[0])
    assert face_part.is_identity() and vertex_part.word == "ZZZZ"


def test_toric_factorization_rejects_foreign_operators():
    enc = encoding(3, 3)
    with pytest.raises(EncodingError):
        enc.toric_factorization(enc.edge_operators[DirectedEdge((1, 0), (1, 1))])
