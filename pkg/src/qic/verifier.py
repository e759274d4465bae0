"""Acceptance-probability oracles for circuits and accept-qubit verifiers.

Two distinct notions live here.

``acceptance_probability_exact`` runs the three-register agreement protocol
against a circuit: prepare an entangled triple of input copies (third copy
Hadamard-rotated), run the circuit on copies two and three with cleared
ancillas, measure (computational on the first two registers, rotated basis
on the third) and accept on any disagreeing outcome.  The acceptance
probability is zero exactly when the circuit implements a scaled identity.

``max_acceptance_probability`` treats the circuit as a verifier that accepts
when a designated input qubit measures 1, and maximizes the acceptance
probability over all input states: the top eigenvalue of A*A with
A = P1 . U . (I (x) |0...0>), attained by a pure state.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .circuit import Circuit, Gate, GateKind, remap_qubits
from .errors import DimensionCapExceeded, QubitOutOfRange
from .simulator import (
    FLOAT,
    STATE_AMP_CAP,
    StateVector,
    apply_circuit,
    basis_state,
    measurement_distribution,
    restricted_columns,
)

RNG_ALGORITHM = "numpy-pcg64"


@dataclass(frozen=True)
class VerifierSpec:
    """A circuit read as a verifier: accept when ``accept_qubit`` measures 1."""

    circuit: Circuit
    accept_qubit: int = 0

    def __post_init__(self):
        if not (0 <= self.accept_qubit < self.circuit.n_inputs):
            raise QubitOutOfRange(
                f"accept qubit {self.accept_qubit} outside the input register"
            )


@dataclass(frozen=True)
class VerifierReport:
    acceptance_probability: float
    mode: str  # "exact" | "sampled"
    shots: int | None = None
    seed: int | None = None
    outcome_counts: dict[str, int] | None = None
    rng: str | None = None


@dataclass(frozen=True)
class ReductionReport:
    max_acceptance: float
    witness_state: StateVector


def _prep_gates(n: int) -> list[Gate]:
    gates = [Gate(GateKind.H, (i,)) for i in range(n)]
    for i in range(n):
        gates.append(Gate(GateKind.CX, (i, n + i)))
        gates.append(Gate(GateKind.CX, (i, 2 * n + i)))
    gates.extend(Gate(GateKind.H, (2 * n + i,)) for i in range(n))
    return gates


def prepare_verifier_input(n: int, backend: str = FLOAT, dim_cap: int | None = None) -> StateVector:
    """The protocol input (1/sqrt(2^n)) sum_x |x>|x>|x_+> on 3n qubits.

    Built by the protocol's gate sequence (H row, CX cascade, trailing H row),
    not by direct amplitude assignment.
    """
    cap = STATE_AMP_CAP if dim_cap is None else dim_cap
    if 2 ** (3 * n) > cap:
        raise DimensionCapExceeded(f"protocol input needs {3 * n} qubits, over the cap")
    prep = Circuit("protocol_input", 3 * n, 0, tuple(_prep_gates(n)))
    return apply_circuit(basis_state(3 * n, 0, backend, dim_cap=cap), prep)


def _protocol_circuit(v: VerifierSpec) -> Circuit:
    u = v.circuit
    n, m = u.n_inputs, u.n_ancillas
    gates = _prep_gates(n)
    second = remap_qubits(
        u, {**{i: n + i for i in range(n)}, **{n + j: 3 * n + j for j in range(m)}},
        3 * n, 2 * m,
    )
    third = remap_qubits(
        u, {**{i: 2 * n + i for i in range(n)}, **{n + j: 3 * n + m + j for j in range(m)}},
        3 * n, 2 * m,
    )
    gates.extend(second.gates)
    gates.extend(third.gates)
    return Circuit(f"protocol_{u.name}", 3 * n, 2 * m, tuple(gates))


def verifier_distribution(
    v: VerifierSpec, backend: str = FLOAT, dim_cap: int | None = None
) -> np.ndarray:
    """Joint outcome distribution over the 3n measured qubits.

    Index order is register order: first n bits x, next n bits y, last n
    bits z (already rotated to the measurement basis); ancillas are summed
    out.
    """
    u = v.circuit
    n, m = u.n_inputs, u.n_ancillas
    cap = STATE_AMP_CAP if dim_cap is None else dim_cap
    if 2 ** (3 * n + 2 * m) > cap:
        raise DimensionCapExceeded(
            f"protocol needs {3 * n + 2 * m} qubits, over the amplitude cap"
        )
    state = apply_circuit(
        basis_state(3 * n + 2 * m, 0, backend, dim_cap=cap), _protocol_circuit(v)
    )
    probs = measurement_distribution(state, hadamard_mask=range(2 * n, 3 * n))
    if m:
        probs = probs.reshape(2 ** (3 * n), 2 ** (2 * m)).sum(axis=1)
    return probs


def _agreeing_outcomes(n: int) -> np.ndarray:
    x = np.arange(2**n)
    return (x << (2 * n)) | (x << n) | x


def acceptance_probability_exact(
    v: VerifierSpec, backend: str = FLOAT, dim_cap: int | None = None
) -> VerifierReport:
    """Exact probability that the protocol sees a disagreeing outcome."""
    n = v.circuit.n_inputs
    probs = verifier_distribution(v, backend, dim_cap)
    p_agree = float(probs[_agreeing_outcomes(n)].sum())
    p = min(max(1.0 - p_agree, 0.0), 1.0)
    return VerifierReport(acceptance_probability=p, mode="exact")


def sample_verifier(
    v: VerifierSpec,
    shots: int,
    seed: int,
    backend: str = FLOAT,
    dim_cap: int | None = None,
) -> VerifierReport:
    """Monte Carlo run of the protocol; deterministic for a given seed."""
    if shots < 1:
        raise ValueError(f"shots must be >= 1, got {shots}")
    n = v.circuit.n_inputs
    probs = verifier_distribution(v, backend, dim_cap)
    probs = np.clip(probs, 0.0, None)
    probs = probs / probs.sum()
    rng = np.random.default_rng(seed)
    outcomes = rng.choice(probs.shape[0], size=shots, p=probs)
    agree = set(int(i) for i in _agreeing_outcomes(n))
    accepted = sum(1 for o in outcomes if int(o) not in agree)
    values, counts = np.unique(outcomes, return_counts=True)
    width = 3 * n
    outcome_counts = {format(int(val), f"0{width}b"): int(cnt) for val, cnt in zip(values, counts)}
    return VerifierReport(
        acceptance_probability=accepted / shots,
        mode="sampled",
        shots=shots,
        seed=seed,
        outcome_counts=outcome_counts,
        rng=RNG_ALGORITHM,
    )


def max_acceptance_probability(v: VerifierSpec, dim_cap: int | None = None) -> ReductionReport:
    """Largest acceptance probability over all input states, with its witness.

    Computed as the top eigenvalue of A*A for A = P1 . U . (I (x) |0...0>);
    a pure input state always attains the maximum.
    """
    u = v.circuit
    cols = restricted_columns(u, FLOAT, dim_cap)
    total = u.total_qubits
    bit = total - 1 - v.accept_qubit
    rows = (np.arange(2**total) >> bit) & 1 == 1
    a = cols[rows, :]
    gram = a.conj().T @ a
    evals, evecs = np.linalg.eigh(gram)
    lam = float(min(max(evals[-1].real, 0.0), 1.0))
    witness = evecs[:, -1]
    nz = np.flatnonzero(np.abs(witness) > 1e-12)
    if nz.size:
        witness = witness * np.exp(-1j * np.angle(witness[nz[0]]))
    return ReductionReport(lam, StateVector(witness, FLOAT))
