"""Circuit intermediate representation.

A circuit is an ordered gate list over ``n_inputs`` input qubits followed by
``n_ancillas`` ancilla qubits (inputs occupy indices ``0..n_inputs-1``).
All types are immutable; transforms return new circuits.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Mapping

from .errors import (
    ArityMismatch,
    DuplicateQubit,
    NonInjectiveMapping,
    QubitOutOfRange,
)


class GateKind(Enum):
    I1 = "I1"
    X = "X"
    Y = "Y"
    Z = "Z"
    H = "H"
    S = "S"
    SDG = "SDG"
    T = "T"
    TDG = "TDG"
    CX = "CX"
    CZ = "CZ"
    SWAP = "SWAP"
    CCX = "CCX"
    RX = "RX"
    RY = "RY"
    RZ = "RZ"
    PHASE = "PHASE"

    @property
    def arity(self) -> int:
        if self in (GateKind.CX, GateKind.CZ, GateKind.SWAP):
            return 2
        if self is GateKind.CCX:
            return 3
        return 1

    @property
    def parameterized(self) -> bool:
        return self in (GateKind.RX, GateKind.RY, GateKind.RZ, GateKind.PHASE)


# Kinds swapped by dagger; everything else is self-inverse or negates its angle.
_ADJOINT_KIND = {
    GateKind.S: GateKind.SDG,
    GateKind.SDG: GateKind.S,
    GateKind.T: GateKind.TDG,
    GateKind.TDG: GateKind.T,
}


@dataclass(frozen=True)
class Gate:
    kind: GateKind
    qubits: tuple[int, ...]
    param: float | None = None

    def __post_init__(self):
        object.__setattr__(self, "qubits", tuple(self.qubits))
        if len(self.qubits) != self.kind.arity:
            raise ArityMismatch(
                f"{self.kind.value} takes {self.kind.arity} qubit(s), got {len(self.qubits)}"
            )
        if len(set(self.qubits)) != len(self.qubits):
            raise DuplicateQubit(f"{self.kind.value} applied to repeated qubit in {self.qubits}")
        if any(q < 0 for q in self.qubits):
            raise QubitOutOfRange(f"negative qubit index in {self.qubits}")
        if self.kind.parameterized:
            if self.param is None or not math.isfinite(self.param):
                raise ArityMismatch(f"{self.kind.value} requires one finite real parameter")
            object.__setattr__(self, "param", float(self.param))
        elif self.param is not None:
            raise ArityMismatch(f"{self.kind.value} takes no parameter")

    def inverse(self) -> Gate:
        kind = _ADJOINT_KIND.get(self.kind, self.kind)
        param = -self.param if self.param is not None else None
        return Gate(kind, self.qubits, param)


@dataclass(frozen=True)
class Circuit:
    name: str
    n_inputs: int
    n_ancillas: int
    gates: tuple[Gate, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "gates", tuple(self.gates))
        if self.n_inputs < 1:
            raise QubitOutOfRange(f"circuit needs at least one input qubit, got {self.n_inputs}")
        if self.n_ancillas < 0:
            raise QubitOutOfRange(f"ancilla count must be nonnegative, got {self.n_ancillas}")
        total = self.total_qubits
        for g in self.gates:
            for q in g.qubits:
                if q >= total:
                    raise QubitOutOfRange(
                        f"gate {g.kind.value} uses qubit {q} but circuit has {total} qubit(s)"
                    )

    @property
    def total_qubits(self) -> int:
        return self.n_inputs + self.n_ancillas

    def __len__(self) -> int:
        return len(self.gates)


def dagger(c: Circuit) -> Circuit:
    """Adjoint circuit: gates reversed and each replaced by its inverse."""
    return Circuit(c.name, c.n_inputs, c.n_ancillas, tuple(g.inverse() for g in reversed(c.gates)))


def remap_qubits(c: Circuit, mapping: Mapping[int, int], new_n: int, new_m: int) -> Circuit:
    """Rewrite gate indices through ``mapping`` onto a new register shape.

    The mapping must be injective on the indices the circuit actually uses;
    indices it never touches need no entry.
    """
    used = sorted({q for g in c.gates for q in g.qubits})
    images = []
    total = new_n + new_m
    for q in used:
        target = mapping.get(q, q)
        if target < 0 or target >= total:
            raise QubitOutOfRange(f"qubit {q} maps to {target}, outside 0..{total - 1}")
        images.append(target)
    if len(set(images)) != len(images):
        raise NonInjectiveMapping(f"mapping is not injective on used qubits {used}")
    gates = tuple(
        Gate(g.kind, tuple(mapping.get(q, q) for q in g.qubits), g.param) for g in c.gates
    )
    return Circuit(c.name, new_n, new_m, gates)
