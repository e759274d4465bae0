import numpy as np
import pytest

from qic.checker import definitional_identity_check
from qic.circuit import Circuit, Gate, GateKind
from qic.constructions import (
    build_doubling,
    build_equivalence,
    build_reduction,
    serialize_with_layout,
)
from qic.errors import InputSizeMismatch
from qic.ring import RING_ONE, RING_ZERO
from qic.simulator import circuit_unitary, restricted_columns
from qic.textfmt import parse_circuit
from qic.verifier import VerifierSpec

from conftest import random_ct_circuit, ref_unitary


def _x(n=1, m=0):
    return Circuit("x", n, m, (Gate(GateKind.X, (0,)),))


def test_doubling_of_x():
    z, layout = build_doubling(_x())
    assert [(g.kind, g.qubits) for g in z.gates] == [(GateKind.X, (0,)), (GateKind.X, (1,))]
    assert z.n_inputs == 2 and z.n_ancillas == 0
    assert layout.range("in") == range(0, 1)
    assert layout.range("in'") == range(1, 2)


def test_doubling_of_empty_with_ancilla():
    z, layout = build_doubling(Circuit("e", 1, 1))
    assert z.gates == ()
    assert z.total_qubits == 3
    assert layout.range("a") == range(2, 3)


def test_doubling_of_t():
    z, _ = build_doubling(Circuit("t", 1, 0, (Gate(GateKind.T, (0,)),)))
    assert [(g.kind, g.qubits) for g in z.gates] == [(GateKind.T, (0,)), (GateKind.TDG, (1,))]


def test_doubling_no_ancilla_is_u_tensor_u_dagger(rng):
    for _ in range(6):
        c = random_ct_circuit(rng, 2, 0, 8)
        u = ref_unitary(c)
        z, _ = build_doubling(c)
        assert np.allclose(
            circuit_unitary(z).to_complex(), np.kron(u, u.conj().T), atol=1e-12
        )


def test_doubling_restricted_action_with_ancilla(rng):
    # cores act on inputs only, suffixes only on the ancilla, so the source
    # implements the core unitary and the doubled circuit must restrict to
    # core (x) core-adjoint with ancillas returning to zero.
    for _ in range(6):
        core = random_ct_circuit(rng, 2, 0, 6)
        suffix = random_ct_circuit(rng, 1, 0, 3)
        gates = core.gates + tuple(Gate(g.kind, (2,), g.param) for g in suffix.gates)
        c = Circuit("impl", 2, 1, gates)
        u = ref_unitary(core)
        z, _ = build_doubling(c)
        cols = restricted_columns(z, kept=4)
        b = cols[:: 2**1, :]
        assert np.allclose(b, np.kron(u, u.conj().T), atol=1e-12)
        leak = np.linalg.norm(cols, axis=0) ** 2 - np.linalg.norm(b, axis=0) ** 2
        assert np.max(np.abs(leak)) < 1e-12


def test_equivalence_same_circuit_is_identity():
    h = Circuit("h", 1, 0, (Gate(GateKind.H, (0,)),))
    z, _ = build_equivalence(h, h)
    assert np.allclose(circuit_unitary(z).to_complex(), np.eye(4), atol=1e-12)
    exact = circuit_unitary(z, backend="exact").entries
    for i in range(4):
        for j in range(4):
            assert exact[i, j] == (RING_ONE if i == j else RING_ZERO)


def test_equivalence_x_vs_empty_is_not_identity():
    z, _ = build_equivalence(_x(), Circuit("e", 1, 0))
    u = circuit_unitary(z).to_complex()
    xx = np.kron(ref_unitary(_x()), ref_unitary(_x()))
    assert np.allclose(u, xx, atol=1e-12)
    assert not np.allclose(u, np.eye(4), atol=0.5)


def test_equivalence_layout_and_ancilla_blocks():
    ux = Circuit("ux", 1, 2, (Gate(GateKind.X, (1,)),))
    uy = Circuit("uy", 1, 1, (Gate(GateKind.X, (1,)),))
    z, layout = build_equivalence(ux, uy)
    assert layout.range("a") == range(2, 4)
    assert layout.range("a'") == range(4, 5)
    assert z.n_ancillas == 3
    used = {q for g in z.gates for q in g.qubits}
    assert used == {2, 4}  # ux ancilla 0 -> 2, uy ancilla 0 -> 4


def test_equivalence_input_size_mismatch():
    with pytest.raises(InputSizeMismatch):
        build_equivalence(_x(), Circuit("wide", 2, 0))


def test_reduction_of_identity_verifier():
    v = VerifierSpec(Circuit("idv", 1, 0), 0)
    z, layout, report = build_reduction(v)
    assert layout.range("ext") == range(0, 1)
    assert layout.range("in") == range(1, 2)
    # ext flips exactly when the input is 1
    want = np.zeros((4, 4))
    want[0, 0] = want[3, 1] = want[2, 2] = want[1, 3] = 1
    assert np.allclose(circuit_unitary(z).to_complex(), want, atol=1e-12)
    assert report.max_acceptance == pytest.approx(1.0, abs=1e-12)
    assert not definitional_identity_check(z, kept=2).is_identity


def test_reduction_of_swap_verifier_is_identity():
    swap = Circuit("swapv", 1, 1, (Gate(GateKind.SWAP, (0, 1)),))
    z, layout, report = build_reduction(VerifierSpec(swap, 0))
    assert layout.range("a") == range(2, 3)
    assert report.max_acceptance == pytest.approx(0.0, abs=1e-12)
    verdict = definitional_identity_check(z, kept=2)
    assert verdict.is_identity


def test_reduction_gate_shape():
    u = Circuit("u", 2, 1, (Gate(GateKind.H, (0,)), Gate(GateKind.CX, (1, 2)),))
    z, _, _ = build_reduction(VerifierSpec(u, 1))
    kinds = [(g.kind, g.qubits) for g in z.gates]
    # forward (shifted), X-conjugated CX onto ext from accept qubit 2, backward, final X
    assert kinds[0] == (GateKind.H, (1,))
    assert kinds[2] == (GateKind.X, (2,))
    assert kinds[3] == (GateKind.CX, (2, 0))
    assert kinds[4] == (GateKind.X, (2,))
    assert kinds[-1] == (GateKind.X, (0,))


def test_layout_comments_round_trip():
    z, layout = build_doubling(Circuit("u", 1, 1, (Gate(GateKind.CX, (0, 1)),)))
    text = serialize_with_layout(z, layout)
    assert "# register in 0 1" in text
    assert "# register a 2 1" in text
    assert parse_circuit(text) == z
