import json
import subprocess
import sys

import pytest

from compact_fermion.cli import main
from compact_fermion.hamiltonian import hubbard
from compact_fermion.lattice import SquareLattice


@pytest.fixture
def files(tmp_path):
    def write(name, data):
        path = tmp_path / name
        path.write_text(json.dumps(data) if not isinstance(data, str) else data)
        return str(path)

    lat = SquareLattice(2, 2, 0)
    return {
        "lattice": write("lat.json", {"type": "square", "width": 2, "height": 2, "checkerboard_phase": 0}),
        "big": write("big.json", {"type": "square", "width": 4, "height": 4}),
        "hex": write("hex.json", {"type": "hex", "face_columns": 1, "face_rows": 1}),
        "ham": write("ham.json", hubbard(lat).to_json()),
        "broken": write("broken.json", "{not json"),
        "unknown": write("unknown.json", {"type": "kagome"}),
        "out": str(tmp_path / "out.json"),
        "write": write,
    }


def run(capsys, *argv):
    status = main(list(argv))
    out = capsys.readouterr()
    return status, out.out, out.err


def test_compile(capsys, files):
    status, out, _ = run(capsys, "compile", "--lattice", files["lattice"], "--hamiltonian", files["ham"])
    assert status == 0
    data = json.loads(out)
    assert data["format"] == 1 and data["encoding"] == "compact" and data["n_qubits"] == 5
    assert {"re", "im", "pauli"} == set(data["terms"][0])


def test_compile_both_encodings(capsys, files):
    status, out, _ = run(capsys, "compile", "--lattice", files["lattice"], "--hamiltonian",
                         files["ham"], "--encoding", "both")
    assert status == 0
    assert [c["encoding"] for c in json.loads(out)["compiled"]] == ["compact", "jw"]


def test_output_is_deterministic(capsys, files):
    argv = ["compile", "--lattice", files["lattice"], "--hamiltonian", files["ham"], "-o", files["out"]]
    assert main(argv) == 0
    first = open(files["out"], "rb").read()
    assert main(argv) == 0
    assert open(files["out"], "rb").read() == first
    assert capsys.readouterr().out == ""


@pytest.mark.parametrize("lattice", ["lattice", "hex"])
def test_verify(capsys, files, lattice):
    status, out, _ = run(capsys, "verify", "--lattice", files[lattice])
    data = json.loads(out)
    assert status == 0 and data["passed"]
    names = {c["name"] for c in data["checks"]}
    assert {"edge_edge", "code_dimension", "hubbard_spectrum"} <= names


def test_verify_large_lattice_skips_dense_checks(capsys, files):
    status, out, _ = run(capsys, "verify", "--lattice", files["big"], "--encoding", "both")
    data = json.loads(out)
    assert status == 0 and data["passed"] and len(data["reports"]) == 2
    assert "code_dimension" not in {c["name"] for c in data["reports"][0]["checks"]}


def test_phase_override(capsys, files):
    _, out, _ = run(capsys, "dump-operators", "--lattice", files["lattice"], "--checkerboard-phase", "1")
    dump = json.loads(out)["operators"][0]
    assert dump["case"] == "II" and dump["stabilizers"] == ["+ZZZZ"]


def test_stats(capsys, files):
    status, out, _ = run(capsys, "stats", "--lattice", files["big"])
    stats = {s["encoding"]: s for s in json.loads(out)["stats"]}
    assert status == 0
    assert stats["compact"]["max_hopping_weight"] == 3 and stats["compact"]["qubit_total"] == 21
    assert stats["jw"]["max_hopping_weight"] == 8


def test_spectrum(capsys, files):
    status, out, _ = run(capsys, "spectrum", "--lattice", files["lattice"], "--hamiltonian", files["ham"])
    data = json.loads(out)
    assert status == 0 and data["passed"] and data["sector"] == "doubled"
    assert len(data["encoded"]) == 32


def test_dump_operators(capsys, files):
    status, out, _ = run(capsys, "dump-operators", "--lattice", files["lattice"], "--encoding", "both")
    compact, jw = json.loads(out)["operators"]
    assert status == 0
    assert compact["case"] == "III" and set(compact["logical"]) == {"X", "Y", "Z"}
    assert len(compact["edges"]) == 4 and len(compact["majorana_corners"]) == 4
    assert jw["encoding"] == "jw" and jw["stabilizers"] == []
    _, out, _ = run(capsys, "dump-operators", "--lattice", files["hex"])
    assert json.loads(out)["operators"][0]["majorana_sites"]


def test_verification_failure_exit_code(capsys, files):
    ham = files["write"]("bad_tol.json", {"type": "square", "width": 2, "height": 2})
    status, _, err = run(capsys, "spectrum", "--lattice", ham, "--hamiltonian", files["ham"], "--tol", "-1")
    assert status == 1 and "verification failed" in err


@pytest.mark.parametrize("key", ["broken", "unknown"])
def test_bad_lattice_exit_code(capsys, files, key):
    status, _, err = run(capsys, "stats", "--lattice", files[key])
    assert status == 2 and err.startswith("error:")


def test_bad_inputs_exit_code(capsys, files):
    assert run(capsys, "compile", "--lattice", files["lattice"])[0] == 2
    assert run(capsys, "stats", "--lattice", files["lattice"] + ".missing")[0] == 2
    off = files["write"]("off.json", {"terms": [{"kind": "number", "i": [7, 7], "coeff": 1}]})
    assert run(capsys, "compile", "--lattice", files["lattice"], "--hamiltonian", off)[0] == 2
    assert run(capsys, "stats", "--lattice", files["lattice"], "--encoding", "parity")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2


def test_size_cap_exit_code(capsys, files):
    ham = files["write"]("big_ham.json", hubbard(SquareLattice(4, 4)).to_json())
    status, _, err = run(capsys, "spectrum", "--lattice", files["big"], "--hamiltonian", ham)
    assert status == 3 and "cap" in err


def test_module_entry_point(files):
    proc = subprocess.run([sys.executable, "-m", "compact_fermion", "stats", "--lattice", files["lattice"]],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["format"] == 1
