import random

import pytest

from qic.circuit import Circuit, Gate, GateKind
from qic.errors import (
    ArityMismatch,
    CircuitSyntaxError,
    DuplicateQubit,
    MissingHeader,
    QubitOutOfRange,
    UnknownGate,
)
from qic.textfmt import parse_circuit, serialize_circuit

from conftest import random_ct_circuit

BASIC = "circuit c\ninputs 1\nancillas 0\ngate H 0\nend\n"


def test_parse_basic():
    c = parse_circuit(BASIC)
    assert (c.name, c.n_inputs, c.n_ancillas) == ("c", 1, 0)
    assert c.gates == (Gate(GateKind.H, (0,)),)


def test_serialize_round_trips_basic():
    assert serialize_circuit(parse_circuit(BASIC)) == BASIC


def test_qubit_out_of_range():
    with pytest.raises(QubitOutOfRange) as exc:
        parse_circuit("circuit c\ninputs 1\nancillas 0\ngate CX 0 1\nend\n")
    assert exc.value.line == 4


def test_duplicate_qubit():
    with pytest.raises(DuplicateQubit):
        parse_circuit("circuit c\ninputs 2\nancillas 0\ngate CX 0 0\nend\n")


def test_unknown_gate_names_line():
    with pytest.raises(UnknownGate) as exc:
        parse_circuit("circuit c\ninputs 1\nancillas 0\ngate FOO 0\nend\n")
    assert exc.value.line == 4


def test_arity_mismatch():
    with pytest.raises(ArityMismatch):
        parse_circuit("circuit c\ninputs 2\nancillas 0\ngate CX 0\nend\n")


def test_missing_header_cases():
    with pytest.raises(MissingHeader):
        parse_circuit("")
    with pytest.raises(MissingHeader):
        parse_circuit("inputs 1\nancillas 0\nend\n")
    with pytest.raises(MissingHeader):
        parse_circuit("circuit c\ninputs 1\nancillas 0\ngate H 0\n")  # no end


def test_zero_inputs_rejected():
    with pytest.raises(CircuitSyntaxError):
        parse_circuit("circuit c\ninputs 0\nancillas 1\nend\n")


def test_angle_parsing():
    c = parse_circuit("circuit c\ninputs 1\nancillas 0\ngate RZ(1.5) 0\nend\n")
    assert c.gates[0].param == 1.5
    assert "gate RZ(1.5) 0" in serialize_circuit(c)
    with pytest.raises(CircuitSyntaxError):
        parse_circuit("circuit c\ninputs 1\nancillas 0\ngate RZ 0\nend\n")
    with pytest.raises(CircuitSyntaxError):
        parse_circuit("circuit c\ninputs 1\nancillas 0\ngate RZ(nope) 0\nend\n")
    with pytest.raises(CircuitSyntaxError):
        parse_circuit("circuit c\ninputs 1\nancillas 0\ngate RZ(inf) 0\nend\n")
    with pytest.raises(CircuitSyntaxError):
        parse_circuit("circuit c\ninputs 1\nancillas 0\ngate H(0.5) 0\nend\n")


def test_comments_and_blank_lines_ignored():
    text = "# header comment\n\ncircuit c\ninputs 1\nancillas 0\n# mid comment\ngate H 0  # trailing\n\nend\n"
    c = parse_circuit(text)
    assert len(c.gates) == 1


def test_content_after_end_rejected():
    with pytest.raises(CircuitSyntaxError):
        parse_circuit(BASIC + "gate H 0\n")


def test_empty_gate_list():
    text = serialize_circuit(Circuit("empty", 2, 1))
    assert text == "circuit empty\ninputs 2\nancillas 1\nend\n"
    assert parse_circuit(text) == Circuit("empty", 2, 1)


def test_non_integer_qubit():
    with pytest.raises(CircuitSyntaxError):
        parse_circuit("circuit c\ninputs 1\nancillas 0\ngate H zero\nend\n")


def test_full_precision_angle_round_trip():
    theta = 0.1234567890123456789
    c = Circuit("r", 1, 0, (Gate(GateKind.RX, (0,), theta),))
    assert parse_circuit(serialize_circuit(c)) == c


def test_round_trip_random_circuits():
    rng = random.Random(7)
    for i in range(60):
        c = random_ct_circuit(rng, rng.randint(1, 3), rng.randint(0, 2), rng.randint(0, 12), name=f"r{i}")
        if rng.random() < 0.3:
            c = Circuit(
                c.name, c.n_inputs, c.n_ancillas,
                c.gates + (Gate(GateKind.RZ, (0,), rng.uniform(-7, 7)),),
            )
        assert parse_circuit(serialize_circuit(c)) == c
