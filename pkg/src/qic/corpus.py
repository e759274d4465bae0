"""Bundled circuit corpus used by tests and as CLI fixtures.

Grouped by expected verdict so CI and the acceptance suite can reference
entries by name.
"""
from __future__ import annotations

from pathlib import Path

from .circuit import Circuit
from .textfmt import parse_circuit

CORPUS_DIR = Path(__file__).parent / "corpus"

IDENTITY_FAMILY = (
    "identity_empty",
    "identity_hh",
    "identity_t8",
    "identity_ssdg",
    "identity_cxcx",
    "identity_xzxz",
    "ancilla_x",
)

NON_IDENTITY_FAMILY = (
    "non_identity_x",
    "non_identity_t",
    "non_identity_cz",
    "non_identity_swap",
    "ancilla_cx",
    "swap_verifier",
)

# name -> expected maximum acceptance probability as a verifier
VERIFIER_FIXTURES = {
    "verifier_identity": 1.0,
    "verifier_h": 1.0,
    "swap_verifier": 0.0,
}

ALL_NAMES = IDENTITY_FAMILY + NON_IDENTITY_FAMILY + ("verifier_identity", "verifier_h")


def corpus_path(name: str) -> Path:
    path = CORPUS_DIR / f"{name}.qc"
    if not path.is_file():
        raise KeyError(f"no corpus circuit named {name!r}")
    return path


def load(name: str) -> Circuit:
    return parse_circuit(corpus_path(name).read_text(encoding="utf-8"))


def load_all() -> dict[str, Circuit]:
    return {name: load(name) for name in ALL_NAMES}
