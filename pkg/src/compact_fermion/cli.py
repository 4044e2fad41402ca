"""Command-line front end.

Exit status: 0 success, 1 verification failure, 2 invalid input, 3 size cap.
Every payload is JSON with a leading ``"format": 1`` field.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .encoder import CompactEncoding
from .errors import EncodingError, LatticeError, SizeCapError
from .hamiltonian import FermionicHamiltonian, compile_hamiltonian, hubbard, make_encoding, weight_stats
from .hexagonal import HexEncoding, HexLattice
from .lattice import LatticeCase, SquareLattice
from . import oracle

EXIT_OK, EXIT_FAILED, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3

# verification beyond symplectic checks stays below this many qubits
ORACLE_QUBITS = 11


class InputError(Exception):
    pass


def _read_json(path: str):
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc


def load_lattice(data, checkerboard_phase: int | None = None):
    """Lattice from its JSON description; the phase argument overrides the
    file for square lattices."""
    if not isinstance(data, dict):
        raise InputError("lattice JSON must be an object")
    kind = data.get("type")
    try:
        if kind == "square":
            phase = data.get("checkerboard_phase", 0)
            if checkerboard_phase is not None:
                phase = checkerboard_phase
            return SquareLattice(int(data["width"]), int(data["height"]), int(phase))
        if kind == "hex":
            return HexLattice(int(data["face_columns"]), int(data["face_rows"]))
    except KeyError as exc:
        raise InputError(f"lattice JSON is missing {exc}") from exc
    except (TypeError, ValueError) as exc:
        raise InputError(f"bad lattice JSON: {exc}") from exc
    raise InputError(f"unknown lattice type {kind!r}")


def _encodings(choice: str) -> list[str]:
    return ["compact", "jw"] if choice == "both" else [choice]


def _lattice(args):
    return load_lattice(_read_json(args.lattice), args.checkerboard_phase)


def _hamiltonian(args, lattice) -> FermionicHamiltonian:
    if not args.hamiltonian:
        raise InputError("--hamiltonian is required for this command")
    return FermionicHamiltonian.from_json(lattice, _read_json(args.hamiltonian))


def expected_code_dimension(encoding) -> int:
    """``2^(M + OF - EF)`` on square lattices, ``2^M`` otherwise."""
    lat = encoding.lattice
    if isinstance(encoding, CompactEncoding):
        info = lat.classify_case()
        return 2 ** (info.n_modes + info.n_odd - info.n_even)
    return 2 ** lat.n_modes


# -- commands ----------------------------------------------------------------


def cmd_compile(args) -> tuple[dict, int]:
    lattice = _lattice(args)
    ham = _hamiltonian(args, lattice)
    results = [compile_hamiltonian(ham, name).to_json() for name in _encodings(args.encoding)]
    if len(results) == 1:
        return results[0], EXIT_OK
    return {"format": 1, "compiled": results}, EXIT_OK


def _oracle_checks(enc, lattice, tol: float) -> list[dict]:
    checks = []
    dim = oracle.codespace_basis(enc.stabilizers).shape[1]
    expected = expected_code_dimension(enc)
    checks.append({"name": "code_dimension", "passed": dim == expected,
                   "checked": 1, "expected": expected, "found": dim})
    if lattice.n_modes <= oracle.MAX_MODES:
        ham = hubbard(lattice)
        enc_spec = oracle.encoded_spectrum(ham, enc)
        ref = oracle.reference_spectrum(ham, enc_spec.sector)
        gap = oracle.spectrum_discrepancy(enc_spec, ref)
        checks.append({"name": "hubbard_spectrum", "passed": gap <= tol, "checked": 1,
                       "sector": enc_spec.sector, "max_abs_discrepancy": gap})
    return checks


def cmd_verify(args) -> tuple[dict, int]:
    lattice = _lattice(args)
    reports = []
    for name in _encodings(args.encoding):
        enc = make_encoding(lattice, name)
        report = oracle.verify_relations(enc).to_json()
        if enc.n_qubits <= ORACLE_QUBITS:
            report["checks"] += _oracle_checks(enc, lattice, args.tol)
            report["passed"] = all(c["passed"] for c in report["checks"])
        reports.append(report)
    ok = all(r["passed"] for r in reports)
    payload = reports[0] if len(reports) == 1 else {"format": 1, "passed": ok, "reports": reports}
    return payload, EXIT_OK if ok else EXIT_FAILED


def cmd_stats(args) -> tuple[dict, int]:
    lattice = _lattice(args)
    stats = [weight_stats(lattice, name).to_json() for name in _encodings(args.encoding)]
    return {"format": 1, "lattice": lattice.to_json(), "stats": stats}, EXIT_OK


def cmd_spectrum(args) -> tuple[dict, int]:
    lattice = _lattice(args)
    ham = _hamiltonian(args, lattice)
    enc = make_encoding(lattice, "compact")
    encoded = oracle.encoded_spectrum(ham, enc)
    reference = oracle.reference_spectrum(ham, encoded.sector)
    gap = oracle.spectrum_discrepancy(encoded, reference)
    payload = {
        "format": 1,
        "lattice": lattice.to_json(),
        "sector": encoded.sector,
        "passed": gap <= args.tol,
        "max_abs_discrepancy": gap,
        "encoded": list(encoded.eigenvalues),
        "reference": list(reference.eigenvalues),
    }
    return payload, EXIT_OK if gap <= args.tol else EXIT_FAILED


def _site(v) -> str:
    return f"{v[0]},{v[1]}"


def dump_operators(enc) -> dict:
    out = {
        "encoding": enc.name,
        "n_qubits": enc.n_qubits,
        "layout": enc.layout.to_json(),
        "edges": {e.key(): op.to_label() for e, op in enc.edge_operators.items()},
        "vertices": {_site(v): op.to_label() for v, op in enc.vertex_operators.items()},
        "stabilizers": [g.to_label() for g in enc.stabilizers],
    }
    if isinstance(enc, CompactEncoding):
        out["case"] = enc.case.value
        out["encoded_space"] = enc.case.encoded_space
        out["majorana_corners"] = {_site(c): enc.corner_operator(c).to_label()
                                   for c in enc.majorana_corners()}
        if enc.case is LatticeCase.III:
            log = enc.logical_paulis()
            out["logical"] = {"X": log.x.to_label(), "Y": log.y.to_label(), "Z": log.z.to_label()}
    elif isinstance(enc, HexEncoding):
        out["majorana_sites"] = {_site(v): enc.inject_majorana(v).to_label()
                                 for v in enc.majorana_sites()}
    return out


def cmd_dump(args) -> tuple[dict, int]:
    lattice = _lattice(args)
    dumps = [dump_operators(make_encoding(lattice, name)) for name in _encodings(args.encoding)]
    return {"format": 1, "lattice": lattice.to_json(), "operators": dumps}, EXIT_OK


COMMANDS = {
    "compile": (cmd_compile, "compile a Hamiltonian to a Pauli sum"),
    "verify": (cmd_verify, "check operator relations and, for small lattices, spectra"),
    "stats": (cmd_stats, "qubit counts and maximum term weights"),
    "spectrum": (cmd_spectrum, "compare encoded and fermionic spectra"),
    "dump-operators": (cmd_dump, "list encoded edge, vertex and stabilizer operators"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="compact-fermion", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--lattice", required=True, metavar="PATH")
        p.add_argument("--hamiltonian", metavar="PATH")
        p.add_argument("--encoding", choices=("compact", "jw", "both"),
                       default="both" if name == "stats" else "compact")
        p.add_argument("-o", "--output", metavar="PATH")
        p.add_argument("--tol", type=float, default=1e-10)
        p.add_argument("--checkerboard-phase", type=int, choices=(0, 1))
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse reports usage errors with status 2
        return int(exc.code or 0)
    handler = COMMANDS[args.command][0]
    try:
        payload, status = handler(args)
    except SizeCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (InputError, LatticeError, EncodingError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    text = json.dumps(payload, indent=2) + "\n"
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    if status == EXIT_FAILED:
        print("error: verification failed", file=sys.stderr)
    return status


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
