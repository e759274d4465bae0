import numpy as np
import pytest

from qic.checker import check_equivalence, check_identity
from qic.circuit import Circuit, Gate, GateKind
from qic.errors import SearchBudgetExceeded
from qic.minimizer import minimize

from conftest import ref_gate

HST = [GateKind.H, GateKind.S, GateKind.T]
HH = Circuit("hh", 1, 0, (Gate(GateKind.H, (0,)),) * 2)
TT = Circuit("tt", 1, 0, (Gate(GateKind.T, (0,)),) * 2)
X1 = Circuit("x", 1, 0, (Gate(GateKind.X, (0,)),))


def test_hh_minimizes_to_nothing():
    r = minimize(HH, HST + [GateKind.CX])
    assert r.minimal_length == 0
    assert r.minimal_circuit.gates == ()
    assert r.nodes_explored == 1
    assert r.exhausted


def test_tt_minimizes_to_s():
    r = minimize(TT, HST)
    assert r.minimal_length == 1
    assert [g.kind for g in r.minimal_circuit.gates] == [GateKind.S]
    assert r.nodes_explored == 1 + 3


def test_x_needs_four_gates():
    # independent oracle: H S S H = H Z H = X, and exhaustive enumeration of
    # lengths 0..3 over {H,S,T} contains nothing equal to X up to phase
    mats = {k: ref_gate(k) for k in HST}
    x = ref_gate(GateKind.X)
    hssh = mats[GateKind.H] @ mats[GateKind.S] @ mats[GateKind.S] @ mats[GateKind.H]
    assert np.allclose(hssh, x, atol=1e-12)

    import itertools

    for length in range(4):
        for seq in itertools.product(HST, repeat=length):
            u = np.eye(2, dtype=complex)
            for kind in seq:
                u = mats[kind] @ u
            overlap = abs(np.trace(x.conj().T @ u)) / 2
            assert overlap < 1 - 1e-6, f"unexpected equivalent {seq}"

    r = minimize(X1, HST)
    assert r.minimal_length == 4
    assert r.nodes_explored == sum(3**l for l in range(5))
    assert r.exhausted
    assert check_equivalence(r.minimal_circuit, X1).equivalent


def test_target_in_gate_set_short_circuits():
    t = Circuit("t", 1, 0, (Gate(GateKind.T, (0,)),))
    r = minimize(t, HST)
    assert r.minimal_length == 1
    assert r.minimal_circuit == t
    assert r.nodes_explored == 1  # only length 0 enumerated


def test_soundness_recheck(rng):
    from conftest import random_ct_circuit

    for _ in range(5):
        target = random_ct_circuit(rng, 1, 0, 3)
        r = minimize(target, HST, max_len=3)
        if r.minimal_length <= 3 and r.minimal_circuit is not target:
            assert check_equivalence(r.minimal_circuit, target).equivalent


def test_zero_length_iff_identity(rng):
    from conftest import random_ct_circuit

    cases = [HH, TT, X1]
    for _ in range(6):
        cases.append(random_ct_circuit(rng, 1, 0, 4))
    for target in cases:
        r = minimize(target, HST, max_len=2)
        assert (r.minimal_length == 0) == check_identity(target).is_identity


def test_two_qubit_search():
    cxcx = Circuit("cxcx", 2, 0, (Gate(GateKind.CX, (0, 1)),) * 2)
    r = minimize(cxcx, [GateKind.H, GateKind.CX])
    assert r.minimal_length == 0
    swap = Circuit("swap", 2, 0, (Gate(GateKind.SWAP, (0, 1)),))
    r = minimize(swap, [GateKind.CX], max_len=3)
    assert r.minimal_length == 3
    assert [g.kind for g in r.minimal_circuit.gates] == [GateKind.CX] * 3


def test_node_cap_raises():
    with pytest.raises(SearchBudgetExceeded):
        minimize(X1, HST, max_len=8, node_cap=50)


def test_parameterized_kinds_rejected():
    with pytest.raises(ValueError):
        minimize(X1, [GateKind.RZ])


def test_fallback_returns_target_when_nothing_found():
    r = minimize(X1, [GateKind.T], max_len=2)
    assert r.minimal_length == 1
    assert r.minimal_circuit == X1
    assert r.exhausted
    assert r.nodes_explored == 1 + 1 + 1  # lengths 0..2, one placement each
