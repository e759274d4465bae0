"""Exception hierarchy shared across the package.

Parse-time errors carry the 1-based source line (and column where known);
the same classes double as validation errors for programmatically built
circuits, in which case ``line`` is None.
"""
from __future__ import annotations


class QicError(Exception):
    """Base class for all errors raised by this package."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None:
            loc = f"line {line}" + (f", column {column}" if column is not None else "")
            message = f"{loc}: {message}"
        super().__init__(message)


class CircuitSyntaxError(QicError):
    """Malformed line in the circuit text format."""


class MissingHeader(QicError):
    """Required header line (circuit / inputs / ancillas / end) absent."""


class UnknownGate(QicError):
    """Gate name not in the supported set."""


class ArityMismatch(QicError):
    """Gate applied to the wrong number of qubits."""


class QubitOutOfRange(QicError):
    """Qubit index outside the declared register."""


class DuplicateQubit(QicError):
    """The same qubit listed twice in one gate."""


class NonInjectiveMapping(QicError):
    """Register remapping sends two qubits to the same target."""


class UnsupportedOnBackend(QicError):
    """Operation not available on the selected amplitude backend."""


class DimensionCapExceeded(QicError):
    """Requested simulation exceeds the configured dimension cap."""


class IndexOutOfRange(QicError):
    """Basis-state or qubit index outside the valid range."""


class InputSizeMismatch(QicError):
    """Two circuits compared with different input-register sizes."""


class DimensionMismatch(QicError):
    """Matrix or state dimension does not match the circuit."""


class KeptExceedsTotal(QicError):
    """Kept-register size larger than the circuit's qubit count."""


class SearchBudgetExceeded(QicError):
    """Minimizer enumeration hit the node cap."""
