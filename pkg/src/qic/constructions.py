"""Builders for the three derived circuits used by the checkers.

* doubling: the circuit followed by its adjoint on a fresh copy of the input
  register, sharing the ancillas.  If the source implements U with an
  ancilla, the doubled circuit implements U (x) U-adjoint and returns the
  ancillas to |0...0>, cancelling any global phase.
* equivalence: adjoint-doubled second circuit then doubled first circuit on
  a shared input pair, with separate ancilla blocks.
* reduction: turns an accept-qubit verifier into a circuit that is the
  identity on an extended register exactly when the verifier accepts nothing.
"""
from __future__ import annotations

from dataclasses import dataclass

from .circuit import Circuit, Gate, GateKind, dagger, remap_qubits
from .errors import InputSizeMismatch
from .textfmt import serialize_circuit
from .verifier import ReductionReport, VerifierSpec, max_acceptance_probability


@dataclass(frozen=True)
class RegisterLayout:
    """Named contiguous qubit ranges, in ascending order, covering the circuit."""

    registers: tuple[tuple[str, int, int], ...]  # (name, start, size)

    @property
    def total_qubits(self) -> int:
        return sum(size for _, _, size in self.registers)

    def range(self, name: str) -> range:
        for reg, start, size in self.registers:
            if reg == name:
                return range(start, start + size)
        raise KeyError(name)

    def comment_lines(self) -> tuple[str, ...]:
        return tuple(f"register {name} {start} {size}" for name, start, size in self.registers)


def serialize_with_layout(c: Circuit, layout: RegisterLayout) -> str:
    """Standard text format with the register layout recorded as comments."""
    return serialize_circuit(c, comments=layout.comment_lines())


def build_doubling(u: Circuit) -> tuple[Circuit, RegisterLayout]:
    """Doubled circuit on registers (in, in', a): u on (in, a), adjoint on (in', a)."""
    n, m = u.n_inputs, u.n_ancillas
    anc = {n + j: 2 * n + j for j in range(m)}
    fwd = remap_qubits(u, anc, 2 * n, m)
    bwd = remap_qubits(dagger(u), {i: n + i for i in range(n)} | anc, 2 * n, m)
    layout = RegisterLayout((("in", 0, n), ("in'", n, n), ("a", 2 * n, m)))
    return Circuit(f"z_{u.name}", 2 * n, m, fwd.gates + bwd.gates), layout


def build_equivalence(ux: Circuit, uy: Circuit) -> tuple[Circuit, RegisterLayout]:
    """Comparison circuit on (in, in', a, a'): adjoint-doubled uy, then doubled ux."""
    if ux.n_inputs != uy.n_inputs:
        raise InputSizeMismatch(
            f"input registers differ: {ux.n_inputs} vs {uy.n_inputs}"
        )
    n, mx, my = ux.n_inputs, ux.n_ancillas, uy.n_ancillas
    zx, _ = build_doubling(ux)
    zy, _ = build_doubling(uy)
    # uy's half keeps its own ancilla block, placed after ux's.
    shift_y = {2 * n + j: 2 * n + mx + j for j in range(my)}
    zy_dag = remap_qubits(dagger(zy), shift_y, 2 * n, mx + my)
    zx_wide = remap_qubits(zx, {}, 2 * n, mx + my)
    layout = RegisterLayout(
        (("in", 0, n), ("in'", n, n), ("a", 2 * n, mx), ("a'", 2 * n + mx, my))
    )
    name = f"z_{ux.name}_{uy.name}"
    return Circuit(name, 2 * n, mx + my, zy_dag.gates + zx_wide.gates), layout


def build_reduction(v: VerifierSpec) -> tuple[Circuit, RegisterLayout, ReductionReport]:
    """Extended-register circuit that is the identity iff the verifier accepts nothing.

    One extra qubit (index 0) is prepended.  The verifier runs forward, a
    zero-controlled X from the accept qubit flips the extended qubit, the
    verifier runs backward, and a final X on the extended qubit undoes the
    flip for the never-accepting branch.  The zero-control is realized as an
    X-conjugated CX so no new gate kind is needed.
    """
    u = v.circuit
    n, m = u.n_inputs, u.n_ancillas
    shift = {q: q + 1 for q in range(u.total_qubits)}
    fwd = remap_qubits(u, shift, n + 1, m)
    bwd = remap_qubits(dagger(u), shift, n + 1, m)
    accept = 1 + v.accept_qubit
    middle = (
        Gate(GateKind.X, (accept,)),
        Gate(GateKind.CX, (accept, 0)),
        Gate(GateKind.X, (accept,)),
    )
    gates = fwd.gates + middle + bwd.gates + (Gate(GateKind.X, (0,)),)
    layout = RegisterLayout((("ext", 0, 1), ("in", 1, n), ("a", n + 1, m)))
    circuit = Circuit(f"reduce_{u.name}", n + 1, m, gates)
    return circuit, layout, max_acceptance_probability(v)
