"""Gate matrices on both amplitude backends.

Conventions: H = (1/sqrt2)[[1,1],[1,-1]], T = diag(1, exp(i*pi/4)), CX flips
its target when the control is 1.  In a multi-qubit matrix the first listed
qubit is the most significant bit of the basis index.
"""
from __future__ import annotations

import cmath
import math

import numpy as np

from .circuit import GateKind
from .errors import UnsupportedOnBackend
from .ring import (
    RING_I,
    RING_INV_SQRT2,
    RING_OMEGA,
    RING_OMEGA_INV,
    RING_ONE,
    RING_ZERO,
    RingElement,
)

FLOAT = "float"
EXACT = "exact"
BACKENDS = (FLOAT, EXACT)

_S2 = 2.0 ** -0.5
_W = cmath.exp(1j * math.pi / 4)

_FLOAT_FIXED = {
    GateKind.I1: np.eye(2, dtype=complex),
    GateKind.X: np.array([[0, 1], [1, 0]], dtype=complex),
    GateKind.Y: np.array([[0, -1j], [1j, 0]], dtype=complex),
    GateKind.Z: np.array([[1, 0], [0, -1]], dtype=complex),
    GateKind.H: np.array([[_S2, _S2], [_S2, -_S2]], dtype=complex),
    GateKind.S: np.array([[1, 0], [0, 1j]], dtype=complex),
    GateKind.SDG: np.array([[1, 0], [0, -1j]], dtype=complex),
    GateKind.T: np.array([[1, 0], [0, _W]], dtype=complex),
    GateKind.TDG: np.array([[1, 0], [0, _W.conjugate()]], dtype=complex),
    GateKind.CX: np.array(
        [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex
    ),
    GateKind.CZ: np.diag([1, 1, 1, -1]).astype(complex),
    GateKind.SWAP: np.array(
        [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex
    ),
    GateKind.CCX: np.eye(8, dtype=complex)[[0, 1, 2, 3, 4, 5, 7, 6]],
}


def _float_param(kind: GateKind, theta: float) -> np.ndarray:
    half = theta / 2.0
    if kind is GateKind.RX:
        return np.array(
            [[math.cos(half), -1j * math.sin(half)], [-1j * math.sin(half), math.cos(half)]],
            dtype=complex,
        )
    if kind is GateKind.RY:
        return np.array(
            [[math.cos(half), -math.sin(half)], [math.sin(half), math.cos(half)]], dtype=complex
        )
    if kind is GateKind.RZ:
        return np.array([[cmath.exp(-1j * half), 0], [0, cmath.exp(1j * half)]], dtype=complex)
    if kind is GateKind.PHASE:
        return np.array([[1, 0], [0, cmath.exp(1j * theta)]], dtype=complex)
    raise AssertionError(kind)


def _ring(rows: list[list[RingElement | int]]) -> np.ndarray:
    out = np.full((len(rows), len(rows[0])), RING_ZERO, dtype=object)
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            out[i, j] = RingElement.from_int(v) if isinstance(v, int) else v
    return out


_NEG_ONE = -RING_ONE
_NEG_I = -RING_I

_EXACT_FIXED = {
    GateKind.I1: _ring([[1, 0], [0, 1]]),
    GateKind.X: _ring([[0, 1], [1, 0]]),
    GateKind.Y: _ring([[RING_ZERO, _NEG_I], [RING_I, RING_ZERO]]),
    GateKind.Z: _ring([[1, 0], [0, -1]]),
    GateKind.H: _ring(
        [[RING_INV_SQRT2, RING_INV_SQRT2], [RING_INV_SQRT2, -RING_INV_SQRT2]]
    ),
    GateKind.S: _ring([[RING_ONE, RING_ZERO], [RING_ZERO, RING_I]]),
    GateKind.SDG: _ring([[RING_ONE, RING_ZERO], [RING_ZERO, _NEG_I]]),
    GateKind.T: _ring([[RING_ONE, RING_ZERO], [RING_ZERO, RING_OMEGA]]),
    GateKind.TDG: _ring([[RING_ONE, RING_ZERO], [RING_ZERO, RING_OMEGA_INV]]),
    GateKind.CX: _ring([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]),
    GateKind.CZ: _ring([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, -1]]),
    GateKind.SWAP: _ring([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]]),
    GateKind.CCX: _ring(
        [[1 if j == (i if i < 6 else 13 - i) else 0 for j in range(8)] for i in range(8)]
    ),
}


def gate_matrix_array(kind: GateKind, param: float | None = None, backend: str = FLOAT) -> np.ndarray:
    """Dense matrix for a gate kind as a raw numpy array (2^arity square)."""
    if backend not in BACKENDS:
        raise ValueError(f"unknown backend {backend!r}")
    if kind.parameterized:
        if backend == EXACT:
            raise UnsupportedOnBackend(f"{kind.value} is not representable on the exact backend")
        if param is None or not math.isfinite(param):
            raise ValueError(f"{kind.value} requires a finite angle")
        return _float_param(kind, float(param))
    if backend == EXACT:
        return _EXACT_FIXED[kind].copy()
    return _FLOAT_FIXED[kind].copy()


def gate_matrix(kind: GateKind, param: float | None = None, backend: str = FLOAT):
    """Gate matrix wrapped as a UnitaryMatrix value."""
    from .simulator import UnitaryMatrix

    return UnitaryMatrix(gate_matrix_array(kind, param, backend), backend)
