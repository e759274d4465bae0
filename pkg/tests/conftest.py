"""Shared fixtures and an independent reference simulator.

The reference path builds full 2^q x 2^q gate embeddings by explicit index
arithmetic and multiplies them out, sharing no code with the package's
statevector evolution, so the two can cross-check each other.
"""
from __future__ import annotations

import cmath
import math
import random

import numpy as np
import pytest

from qic.circuit import Circuit, Gate, GateKind

_S2 = 1 / math.sqrt(2)

REF_FIXED = {
    "I1": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
    "H": np.array([[_S2, _S2], [_S2, -_S2]], dtype=complex),
    "S": np.diag([1, 1j]).astype(complex),
    "SDG": np.diag([1, -1j]).astype(complex),
    "T": np.diag([1, cmath.exp(1j * math.pi / 4)]).astype(complex),
    "TDG": np.diag([1, cmath.exp(-1j * math.pi / 4)]).astype(complex),
    "CX": np.array(
        [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex
    ),
    "CZ": np.diag([1, 1, 1, -1]).astype(complex),
    "SWAP": np.array(
        [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex
    ),
}
_ccx = np.eye(8, dtype=complex)
_ccx[[6, 7]] = _ccx[[7, 6]]
REF_FIXED["CCX"] = _ccx


def ref_gate(kind: GateKind, param: float | None = None) -> np.ndarray:
    if kind.value in REF_FIXED:
        return REF_FIXED[kind.value]
    t = param
    if kind is GateKind.RX:
        return np.array(
            [
                [math.cos(t / 2), -1j * math.sin(t / 2)],
                [-1j * math.sin(t / 2), math.cos(t / 2)],
            ],
            dtype=complex,
        )
    if kind is GateKind.RY:
        return np.array(
            [
                [math.cos(t / 2), -math.sin(t / 2)],
                [math.sin(t / 2), math.cos(t / 2)],
            ],
            dtype=complex,
        )
    if kind is GateKind.RZ:
        return np.diag([cmath.exp(-1j * t / 2), cmath.exp(1j * t / 2)]).astype(complex)
    if kind is GateKind.PHASE:
        return np.diag([1, cmath.exp(1j * t)]).astype(complex)
    raise AssertionError(kind)


def ref_embed(mat: np.ndarray, qubits: tuple[int, ...], total: int) -> np.ndarray:
    """Embed a k-qubit matrix on the given qubits (qubit 0 = MSB of the index)."""
    dim = 2**total
    out = np.zeros((dim, dim), dtype=complex)
    shifts = [total - 1 - q for q in qubits]
    rest_mask = (dim - 1) ^ sum(1 << s for s in shifts)
    for r in range(dim):
        lr = 0
        for s in shifts:
            lr = (lr << 1) | ((r >> s) & 1)
        for c in range(dim):
            if (r & rest_mask) != (c & rest_mask):
                continue
            lc = 0
            for s in shifts:
                lc = (lc << 1) | ((c >> s) & 1)
            out[r, c] = mat[lr, lc]
    return out


def ref_unitary(c: Circuit) -> np.ndarray:
    total = c.total_qubits
    u = np.eye(2**total, dtype=complex)
    for g in c.gates:
        u = ref_embed(ref_gate(g.kind, g.param), g.qubits, total) @ u
    return u


def ref_fidelity(c: Circuit, kept_amps: np.ndarray) -> float:
    """|<w, 0...0| C |w, 0...0>|^2 through the reference unitary."""
    total = c.total_qubits
    kept = int(np.log2(len(kept_amps)))
    full = np.zeros(2**total, dtype=complex)
    full[:: 2 ** (total - kept)] = kept_amps
    return float(abs(np.vdot(full, ref_unitary(c) @ full)) ** 2)


CLIFFORD_T_1Q = (
    GateKind.X,
    GateKind.Y,
    GateKind.Z,
    GateKind.H,
    GateKind.S,
    GateKind.SDG,
    GateKind.T,
    GateKind.TDG,
)
CLIFFORD_T_2Q = (GateKind.CX, GateKind.CZ, GateKind.SWAP)


def random_ct_circuit(
    rng: random.Random, n: int, m: int, depth: int, name: str = "rand"
) -> Circuit:
    total = n + m
    gates = []
    for _ in range(depth):
        if total >= 3 and rng.random() < 0.08:
            kind = GateKind.CCX
        elif total >= 2 and rng.random() < 0.35:
            kind = rng.choice(CLIFFORD_T_2Q)
        else:
            kind = rng.choice(CLIFFORD_T_1Q)
        qubits = tuple(rng.sample(range(total), kind.arity))
        gates.append(Gate(kind, qubits))
    return Circuit(name, n, m, tuple(gates))


@pytest.fixture
def rng():
    return random.Random(20240811)
