"""Dense statevector and full-unitary simulation over either backend.

Basis convention: qubit 0 is the most significant bit of the basis index,
so ``amps.reshape((2,) * q)`` puts qubit ``i`` on axis ``i``.  Unitaries are
stored column-major in the sense that column ``i`` is the image of basis
state ``i``; a gate list therefore composes as ``U = U_last @ ... @ U_first``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .circuit import Circuit, Gate, GateKind
from .errors import (
    DimensionCapExceeded,
    DimensionMismatch,
    IndexOutOfRange,
    KeptExceedsTotal,
    QubitOutOfRange,
)
from .gates import BACKENDS, EXACT, FLOAT, gate_matrix_array
from .ring import RING_ONE, RING_ZERO

STATE_AMP_CAP = 2**14
UNITARY_DIM_CAP = 2**12


def _check_backend(backend: str) -> None:
    if backend not in BACKENDS:
        raise ValueError(f"unknown backend {backend!r}")


def zeros(shape, backend: str) -> np.ndarray:
    if backend == EXACT:
        return np.full(shape, RING_ZERO, dtype=object)
    return np.zeros(shape, dtype=complex)


def one(backend: str):
    return RING_ONE if backend == EXACT else complex(1.0)


def to_complex_array(a: np.ndarray) -> np.ndarray:
    """Convert either backend's amplitude array to complex128."""
    if a.dtype != object:
        return np.asarray(a, dtype=complex)
    out = np.empty(a.shape, dtype=complex)
    flat_in, flat_out = a.reshape(-1), out.reshape(-1)
    for i, x in enumerate(flat_in):
        flat_out[i] = x.to_complex()
    return out


def inner(a: np.ndarray, b: np.ndarray):
    """<a|b> on matching backends (conjugate-linear in the first argument)."""
    return np.dot(np.conjugate(a), b)


@dataclass(frozen=True)
class StateVector:
    amps: np.ndarray
    backend: str = FLOAT

    def __post_init__(self):
        _check_backend(self.backend)
        q = int(self.amps.shape[0]).bit_length() - 1
        if self.amps.ndim != 1 or 2**q != self.amps.shape[0]:
            raise DimensionMismatch(f"amplitude count {self.amps.shape} is not a power of two")

    @property
    def num_qubits(self) -> int:
        return self.amps.shape[0].bit_length() - 1

    def norm_sq(self):
        return inner(self.amps, self.amps)

    def to_complex(self) -> np.ndarray:
        return to_complex_array(self.amps)


@dataclass(frozen=True)
class UnitaryMatrix:
    entries: np.ndarray
    backend: str = FLOAT

    def __post_init__(self):
        _check_backend(self.backend)
        if self.entries.ndim != 2 or self.entries.shape[0] != self.entries.shape[1]:
            raise DimensionMismatch(f"unitary must be square, got {self.entries.shape}")

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    def adjoint(self) -> UnitaryMatrix:
        return UnitaryMatrix(np.conjugate(self.entries).T.copy(), self.backend)

    def to_complex(self) -> np.ndarray:
        return to_complex_array(self.entries)


def _cap(value: int | None, default: int) -> int:
    return default if value is None else int(value)


def basis_state(q: int, index: int, backend: str = FLOAT, dim_cap: int | None = None) -> StateVector:
    """Computational basis state |index> on q qubits."""
    _check_backend(backend)
    if q < 0:
        raise IndexOutOfRange(f"qubit count must be nonnegative, got {q}")
    if 2**q > _cap(dim_cap, STATE_AMP_CAP):
        raise DimensionCapExceeded(f"state of {q} qubits exceeds the amplitude cap")
    if not (0 <= index < 2**q):
        raise IndexOutOfRange(f"basis index {index} outside 0..{2**q - 1}")
    amps = zeros(2**q, backend)
    amps[index] = one(backend)
    return StateVector(amps, backend)


def _apply_gate_array(amps: np.ndarray, gate: Gate, num_qubits: int, backend: str) -> np.ndarray:
    """Apply one gate to a (2^q,) vector or (2^q, batch) column block."""
    mat = gate_matrix_array(gate.kind, gate.param, backend)
    k = gate.kind.arity
    batch = amps.shape[1:]
    psi = amps.reshape((2,) * num_qubits + batch)
    src = list(gate.qubits)
    psi = np.moveaxis(psi, src, range(k))
    rest = psi.shape[k:]
    psi = np.dot(mat, psi.reshape(2**k, -1))
    psi = np.moveaxis(psi.reshape((2,) * k + rest), range(k), src)
    return psi.reshape(amps.shape)


def apply_gate(s: StateVector, g: Gate) -> StateVector:
    q = s.num_qubits
    for idx in g.qubits:
        if idx >= q:
            raise QubitOutOfRange(f"gate {g.kind.value} uses qubit {idx} on a {q}-qubit state")
    return StateVector(_apply_gate_array(s.amps, g, q, s.backend), s.backend)


def apply_circuit(s: StateVector, c: Circuit) -> StateVector:
    if s.num_qubits != c.total_qubits:
        raise DimensionMismatch(
            f"state has {s.num_qubits} qubits but circuit acts on {c.total_qubits}"
        )
    amps = s.amps
    for g in c.gates:
        amps = _apply_gate_array(amps, g, c.total_qubits, s.backend)
    return StateVector(amps, s.backend)


def _evolve_block(block: np.ndarray, c: Circuit, backend: str) -> np.ndarray:
    for g in c.gates:
        block = _apply_gate_array(block, g, c.total_qubits, backend)
    return block


def circuit_unitary(c: Circuit, backend: str = FLOAT, dim_cap: int | None = None) -> UnitaryMatrix:
    """Full 2^q x 2^q unitary of the circuit, built column by column."""
    _check_backend(backend)
    q = c.total_qubits
    if 2**q > _cap(dim_cap, UNITARY_DIM_CAP):
        raise DimensionCapExceeded(f"unitary of {q} qubits exceeds the dimension cap")
    dim = 2**q
    if backend == EXACT:
        eye = zeros((dim, dim), EXACT)
        for i in range(dim):
            eye[i, i] = RING_ONE
    else:
        eye = np.eye(dim, dtype=complex)
    return UnitaryMatrix(_evolve_block(eye, c, backend), backend)


def restricted_columns(
    c: Circuit, backend: str = FLOAT, dim_cap: int | None = None, kept: int | None = None
) -> np.ndarray:
    """Images of |i> (x) |0...0> for every basis state i of the kept register.

    ``kept`` defaults to the circuit's input register; the remaining qubits
    are treated as cleared ancillas.  Returns a dense (2^total, 2^kept)
    array whose column i is the circuit applied to |i> with ancillas |0...0>.
    """
    _check_backend(backend)
    q = c.total_qubits
    if 2**q > _cap(dim_cap, UNITARY_DIM_CAP):
        raise DimensionCapExceeded(f"restricted columns of {q} qubits exceed the dimension cap")
    n = c.n_inputs if kept is None else kept
    if not (1 <= n <= q):
        raise KeptExceedsTotal(f"kept register {n} outside 1..{q}")
    m = q - n
    block = zeros((2**q, 2**n), backend)
    unit = one(backend)
    for i in range(2**n):
        block[i * 2**m, i] = unit
    return _evolve_block(block, c, backend)


def measurement_distribution(s: StateVector, hadamard_mask=()) -> np.ndarray:
    """Probability of each basis outcome after H on every masked qubit."""
    q = s.num_qubits
    mask = sorted(set(hadamard_mask))
    for idx in mask:
        if not (0 <= idx < q):
            raise IndexOutOfRange(f"mask qubit {idx} outside 0..{q - 1}")
    amps = s.amps
    for idx in mask:
        amps = _apply_gate_array(amps, Gate(GateKind.H, (idx,)), q, s.backend)
    cx = to_complex_array(amps)
    return np.abs(cx) ** 2
