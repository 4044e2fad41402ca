"""Exception types raised across the package."""


class DimensionError(ValueError):
    """Operands act on different numbers of qubits."""


class LatticeError(ValueError):
    """A site, edge or path does not belong to the lattice."""


class EncodingError(ValueError):
    """An encoded operator was requested in a case where it does not exist."""


class SizeCapError(RuntimeError):
    """A dense computation would exceed the hard qubit/mode cap."""
