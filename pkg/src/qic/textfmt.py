"""Line-oriented circuit text format.

::

    # optional comments anywhere
    circuit <name>
    inputs <n>
    ancillas <m>
    gate <KIND>[(<angle>)] <q0> [<q1> [<q2>]]
    ...
    end

``#`` starts a comment (full-line or trailing), blank lines are ignored,
qubit indices are decimal and 0-based.  Angles serialize via ``repr`` so a
parse/serialize round trip is exact.
"""
from __future__ import annotations

import math
import re

from .circuit import Circuit, Gate, GateKind
from .errors import (
    ArityMismatch,
    CircuitSyntaxError,
    DuplicateQubit,
    MissingHeader,
    QicError,
    QubitOutOfRange,
    UnknownGate,
)

_NAME_RE = re.compile(r"^[^\s#]+$")
_KIND_RE = re.compile(r"^([A-Za-z0-9]+)(?:\(([^()]*)\))?$")
_TOKEN_RE = re.compile(r"\S+")


def _tokens(line: str) -> list[tuple[str, int]]:
    """Tokens with 1-based column positions, comment stripped."""
    hash_pos = line.find("#")
    if hash_pos != -1:
        line = line[:hash_pos]
    return [(m.group(0), m.start() + 1) for m in _TOKEN_RE.finditer(line)]


def _parse_count(tokens, keyword: str, lineno: int) -> int:
    if not tokens or tokens[0][0] != keyword:
        raise MissingHeader(f"expected '{keyword} <count>'", lineno)
    if len(tokens) != 2:
        raise CircuitSyntaxError(f"'{keyword}' takes exactly one value", lineno)
    value, col = tokens[1]
    try:
        return int(value)
    except ValueError:
        raise CircuitSyntaxError(f"'{keyword}' value {value!r} is not an integer", lineno, col)


def _parse_gate(tokens, total: int, lineno: int) -> Gate:
    kind_tok, kind_col = tokens[0]
    m = _KIND_RE.match(kind_tok)
    if m is None:
        raise CircuitSyntaxError(f"malformed gate kind {kind_tok!r}", lineno, kind_col)
    name, angle_text = m.group(1), m.group(2)
    try:
        kind = GateKind(name.upper())
    except ValueError:
        raise UnknownGate(f"unknown gate {name!r}", lineno, kind_col)

    param = None
    if kind.parameterized:
        if angle_text is None:
            raise CircuitSyntaxError(f"{kind.value} requires an angle, e.g. {kind.value}(0.5)", lineno, kind_col)
        try:
            param = float(angle_text)
        except ValueError:
            raise CircuitSyntaxError(f"bad angle {angle_text!r}", lineno, kind_col)
        if not math.isfinite(param):
            raise CircuitSyntaxError(f"angle must be finite, got {angle_text!r}", lineno, kind_col)
    elif angle_text is not None:
        raise CircuitSyntaxError(f"{kind.value} takes no angle", lineno, kind_col)

    if len(tokens) - 1 != kind.arity:
        raise ArityMismatch(
            f"{kind.value} takes {kind.arity} qubit(s), got {len(tokens) - 1}", lineno, kind_col
        )
    qubits = []
    for tok, col in tokens[1:]:
        try:
            q = int(tok)
        except ValueError:
            raise CircuitSyntaxError(f"qubit index {tok!r} is not an integer", lineno, col)
        if q < 0 or q >= total:
            raise QubitOutOfRange(f"qubit {q} outside 0..{total - 1}", lineno, col)
        if q in qubits:
            raise DuplicateQubit(f"qubit {q} listed twice", lineno, col)
        qubits.append(q)
    return Gate(kind, tuple(qubits), param)


def parse_circuit(text: str) -> Circuit:
    """Parse the text format into a Circuit, reporting line/column on errors."""
    lines = [(i + 1, _tokens(raw)) for i, raw in enumerate(text.splitlines())]
    lines = [(no, toks) for no, toks in lines if toks]
    pos = 0

    def next_line():
        nonlocal pos
        if pos >= len(lines):
            raise MissingHeader("unexpected end of input")
        entry = lines[pos]
        pos += 1
        return entry

    lineno, tokens = next_line()
    if tokens[0][0] != "circuit":
        raise MissingHeader("file must start with 'circuit <name>'", lineno)
    if len(tokens) != 2:
        raise CircuitSyntaxError("'circuit' takes exactly one name", lineno)
    name = tokens[1][0]
    if not _NAME_RE.match(name):
        raise CircuitSyntaxError(f"bad circuit name {name!r}", lineno)

    lineno, tokens = next_line()
    n_inputs = _parse_count(tokens, "inputs", lineno)
    if n_inputs < 1:
        raise CircuitSyntaxError(f"inputs must be >= 1, got {n_inputs}", lineno)
    lineno, tokens = next_line()
    n_ancillas = _parse_count(tokens, "ancillas", lineno)
    if n_ancillas < 0:
        raise CircuitSyntaxError(f"ancillas must be >= 0, got {n_ancillas}", lineno)

    total = n_inputs + n_ancillas
    gates: list[Gate] = []
    while True:
        lineno, tokens = next_line()
        head = tokens[0][0]
        if head == "end":
            if len(tokens) != 1:
                raise CircuitSyntaxError("'end' takes no arguments", lineno)
            break
        if head != "gate":
            raise CircuitSyntaxError(f"expected 'gate' or 'end', got {head!r}", lineno, tokens[0][1])
        if len(tokens) < 2:
            raise CircuitSyntaxError("'gate' needs a kind", lineno)
        gates.append(_parse_gate(tokens[1:], total, lineno))

    if pos < len(lines):
        lineno = lines[pos][0]
        raise CircuitSyntaxError("content after 'end'", lineno)

    try:
        return Circuit(name, n_inputs, n_ancillas, tuple(gates))
    except QicError as exc:  # pragma: no cover - per-line checks should catch first
        raise CircuitSyntaxError(str(exc))


def _format_gate(g: Gate) -> str:
    kind = g.kind.value
    if g.param is not None:
        kind = f"{kind}({g.param!r})"
    return f"gate {kind} " + " ".join(str(q) for q in g.qubits)


def serialize_circuit(c: Circuit, comments: tuple[str, ...] = ()) -> str:
    """Canonical text for a circuit; ``parse_circuit`` round-trips it.

    Optional ``comments`` are emitted verbatim (prefixed ``# ``) after the
    header block; parsers ignore them.
    """
    out = [f"circuit {c.name}", f"inputs {c.n_inputs}", f"ancillas {c.n_ancillas}"]
    out.extend(f"# {line}" for line in comments)
    out.extend(_format_gate(g) for g in c.gates)
    out.append("end")
    return "\n".join(out) + "\n"
