"""Exact identity and equivalence checking for quantum circuits with ancillas.

A circuit "implements" a unitary when its action on any input with cleared
ancillas factors into that unitary times a fixed ancilla state.  This
package decides, by exact desk-scale simulation, whether a circuit
implements a scalar multiple of the identity, whether two circuits
implement the identical unitary, and exposes the doubling / comparison /
verifier-reduction constructions those decisions rest on -- making it
usable as a translation validator for circuit optimizers.
"""
from .checker import (
    EquivalenceVerdict,
    IdentityVerdict,
    ImplementsResult,
    check_equivalence,
    check_identity,
    definitional_identity_check,
    implements_specific_unitary,
    implements_unitary,
)
from .circuit import Circuit, Gate, GateKind, dagger, remap_qubits
from .constructions import (
    RegisterLayout,
    build_doubling,
    build_equivalence,
    build_reduction,
    serialize_with_layout,
)
from .errors import QicError
from .gates import EXACT, FLOAT, gate_matrix
from .minimizer import MinimizationResult, minimize
from .ring import RingElement, Tolerance, ring_add, ring_conj, ring_mul, ring_to_approx
from .simulator import (
    StateVector,
    UnitaryMatrix,
    apply_circuit,
    apply_gate,
    basis_state,
    circuit_unitary,
    measurement_distribution,
    restricted_columns,
)
from .textfmt import parse_circuit, serialize_circuit
from .verifier import (
    ReductionReport,
    VerifierReport,
    VerifierSpec,
    acceptance_probability_exact,
    max_acceptance_probability,
    prepare_verifier_input,
    sample_verifier,
    verifier_distribution,
)

__version__ = "0.1.0"

__all__ = [
    "Circuit",
    "EXACT",
    "EquivalenceVerdict",
    "FLOAT",
    "Gate",
    "GateKind",
    "IdentityVerdict",
    "ImplementsResult",
    "MinimizationResult",
    "QicError",
    "ReductionReport",
    "RegisterLayout",
    "RingElement",
    "StateVector",
    "Tolerance",
    "UnitaryMatrix",
    "VerifierReport",
    "VerifierSpec",
    "acceptance_probability_exact",
    "apply_circuit",
    "apply_gate",
    "basis_state",
    "build_doubling",
    "build_equivalence",
    "build_reduction",
    "check_equivalence",
    "check_identity",
    "circuit_unitary",
    "dagger",
    "definitional_identity_check",
    "gate_matrix",
    "implements_specific_unitary",
    "implements_unitary",
    "max_acceptance_probability",
    "measurement_distribution",
    "minimize",
    "parse_circuit",
    "prepare_verifier_input",
    "remap_qubits",
    "restricted_columns",
    "ring_add",
    "ring_conj",
    "ring_mul",
    "ring_to_approx",
    "sample_verifier",
    "serialize_circuit",
    "serialize_with_layout",
    "verifier_distribution",
]
