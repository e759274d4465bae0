"""Command-line frontend.

Exit codes form the CI contract: 0 for identity/equivalent (or plain
success), 1 for non-identity/inequivalent, 2 for any error.  Verdict-style
commands always emit JSON so pipelines can consume them; ``validate`` and
``build`` print plain text unless ``--json`` is given.  All outputs are
stable across runs for fixed inputs and seed.
"""
from __future__ import annotations

import json
import sys
from dataclasses import dataclass
from pathlib import Path

import click
import numpy as np

from .checker import check_equivalence, check_identity
from .circuit import Circuit, GateKind
from .constructions import (
    build_doubling,
    build_equivalence,
    build_reduction,
    serialize_with_layout,
)
from .errors import QicError, UnknownGate
from .minimizer import NODE_CAP, minimize
from .ring import Tolerance
from .textfmt import parse_circuit, serialize_circuit
from .verifier import (
    VerifierSpec,
    acceptance_probability_exact,
    max_acceptance_probability,
    sample_verifier,
)


@dataclass
class CliConfig:
    backend: str
    tol: Tolerance
    dim_cap: int | None
    json: bool
    seed: int
    shots: int


def _echo_json(payload: dict) -> None:
    click.echo(json.dumps(payload, sort_keys=True))


def _amplitudes(amps: np.ndarray) -> list[list[float]]:
    out = []
    for x in np.asarray(amps, dtype=complex):
        out.append([float(x.real), float(x.imag)])
    return out


def _error_exit(exc: QicError, as_json: bool) -> None:
    if as_json:
        err: dict = {"type": type(exc).__name__, "message": str(exc)}
        if exc.line is not None:
            err["line"] = exc.line
        _echo_json({"error": err})
    else:
        click.echo(f"error: {exc}", err=True)
    sys.exit(2)


def _load(path: str, as_json: bool) -> Circuit:
    try:
        return parse_circuit(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        if as_json:
            _echo_json({"error": {"type": "IOError", "message": str(exc)}})
        else:
            click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    except QicError as exc:
        _error_exit(exc, as_json)
        raise AssertionError  # unreachable


@click.group()
@click.option("--backend", type=click.Choice(["float", "exact"]), default="float",
              show_default=True, help="Amplitude backend.")
@click.option("--tol", type=float, default=1e-9, show_default=True,
              help="Float-backend tolerance; ignored on the exact backend.")
@click.option("--json", "json_out", is_flag=True, help="JSON output for all commands.")
@click.option("--dim-cap", type=int, default=None, envvar="QIC_DIM_CAP",
              help="Override the simulation dimension cap (amplitude count).")
@click.option("--seed", type=int, default=0, show_default=True, help="Sampling seed.")
@click.option("--shots", type=int, default=10000, show_default=True, help="Sampling shots.")
@click.pass_context
def main(ctx, backend, tol, json_out, dim_cap, seed, shots):
    """Exact identity / equivalence checking for quantum circuits."""
    try:
        tolerance = Tolerance(tol)
    except ValueError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    ctx.obj = CliConfig(backend, tolerance, dim_cap, json_out, seed, shots)


@main.command()
@click.argument("path")
@click.pass_obj
def validate(cfg: CliConfig, path):
    """Parse a circuit file and report its shape; exit 2 on any parse error."""
    c = _load(path, cfg.json)
    serialize_circuit(c)
    if cfg.json:
        _echo_json(
            {"valid": True, "name": c.name, "inputs": c.n_inputs,
             "ancillas": c.n_ancillas, "gates": len(c.gates)}
        )
    else:
        click.echo(
            f"ok: {c.name} ({c.n_inputs} inputs, {c.n_ancillas} ancillas, {len(c.gates)} gates)"
        )


@main.command("check-identity")
@click.argument("path")
@click.option("--assert-identity", is_flag=True,
              help="Documented CI form: exit 0 iff identity (this is also the default).")
@click.pass_obj
def cmd_check_identity(cfg: CliConfig, path, assert_identity):
    """Decide whether the circuit implements a scalar multiple of the identity."""
    c = _load(path, True)
    try:
        verdict = check_identity(c, cfg.tol, cfg.backend, cfg.dim_cap)
    except QicError as exc:
        _error_exit(exc, True)
        return
    if verdict.is_identity:
        _echo_json({"verdict": "identity"})
        sys.exit(0)
    _echo_json(
        {"verdict": "non-identity",
         "witness": _amplitudes(verdict.witness.to_complex()),
         "fidelity": verdict.fidelity}
    )
    sys.exit(1)


@main.command("check-equiv")
@click.argument("path_a")
@click.argument("path_b", required=False)
@click.option("--against-identity", is_flag=True,
              help="Compare against the empty circuit on the same inputs.")
@click.pass_obj
def cmd_check_equiv(cfg: CliConfig, path_a, path_b, against_identity):
    """Decide whether two circuits implement the identical unitary."""
    ca = _load(path_a, True)
    if against_identity:
        cb = Circuit("identity", ca.n_inputs, 0, ())
    elif path_b is not None:
        cb = _load(path_b, True)
    else:
        _echo_json({"error": {"type": "UsageError",
                              "message": "need a second circuit or --against-identity"}})
        sys.exit(2)
    try:
        verdict = check_equivalence(ca, cb, cfg.tol, cfg.backend, cfg.dim_cap)
    except QicError as exc:
        _error_exit(exc, True)
        return
    if verdict.equivalent:
        _echo_json({"verdict": "equivalent"})
        sys.exit(0)
    _echo_json(
        {"verdict": "inequivalent",
         "witness": _amplitudes(verdict.witness.to_complex()),
         "fidelity": verdict.fidelity}
    )
    sys.exit(1)


@main.command()
@click.argument("kind", type=click.Choice(["z", "equiv", "reduce"]))
@click.argument("paths", nargs=-1)
@click.option("-o", "--output", required=True, help="Output circuit file.")
@click.option("--accept-qubit", type=int, default=0, show_default=True,
              help="Accept qubit for 'reduce'.")
@click.pass_obj
def build(cfg: CliConfig, kind, paths, output, accept_qubit):
    """Emit a doubling (z), comparison (equiv), or verifier-reduction circuit."""
    need = 2 if kind == "equiv" else 1
    if len(paths) != need:
        msg = f"build {kind} takes {need} circuit file(s), got {len(paths)}"
        if cfg.json:
            _echo_json({"error": {"type": "UsageError", "message": msg}})
        else:
            click.echo(f"error: {msg}", err=True)
        sys.exit(2)
    circuits = [_load(p, cfg.json) for p in paths]
    extra = {}
    try:
        if kind == "z":
            built, layout = build_doubling(circuits[0])
        elif kind == "equiv":
            built, layout = build_equivalence(circuits[0], circuits[1])
        else:
            spec = VerifierSpec(circuits[0], accept_qubit)
            built, layout, report = build_reduction(spec)
            extra = {"max_acceptance": report.max_acceptance}
    except QicError as exc:
        _error_exit(exc, cfg.json)
        return
    Path(output).write_text(serialize_with_layout(built, layout), encoding="utf-8")
    if cfg.json:
        payload = {"written": output, "name": built.name,
                   "registers": [list(r) for r in layout.registers]}
        payload.update(extra)
        _echo_json(payload)
    else:
        click.echo(f"wrote {output} ({built.name})")


@main.command()
@click.argument("path")
@click.option("--exact", "exact_mode", is_flag=True,
              help="Exact acceptance probability instead of sampling.")
@click.pass_obj
def verify(cfg: CliConfig, path, exact_mode):
    """Run the three-register agreement protocol against a circuit."""
    c = _load(path, True)
    try:
        spec = VerifierSpec(c, 0)
        if exact_mode:
            report = acceptance_probability_exact(spec, cfg.backend, cfg.dim_cap)
            payload = {"acceptance_probability": report.acceptance_probability,
                       "mode": report.mode}
        else:
            report = sample_verifier(spec, cfg.shots, cfg.seed, cfg.backend, cfg.dim_cap)
            payload = {"acceptance_probability": report.acceptance_probability,
                       "mode": report.mode, "shots": report.shots, "seed": report.seed,
                       "rng": report.rng, "outcome_counts": report.outcome_counts}
    except QicError as exc:
        _error_exit(exc, True)
        return
    _echo_json(payload)


@main.command("max-accept")
@click.argument("path")
@click.option("--accept-qubit", type=int, default=0, show_default=True)
@click.pass_obj
def cmd_max_accept(cfg: CliConfig, path, accept_qubit):
    """Largest probability that the accept qubit measures 1, over all inputs."""
    c = _load(path, True)
    try:
        report = max_acceptance_probability(VerifierSpec(c, accept_qubit), cfg.dim_cap)
    except QicError as exc:
        _error_exit(exc, True)
        return
    _echo_json(
        {"max_acceptance": report.max_acceptance,
         "witness_state": _amplitudes(report.witness_state.amps)}
    )


@main.command("minimize")
@click.argument("path")
@click.option("--gates", required=True,
              help="Comma-separated gate kinds to synthesize from, e.g. H,S,T,CX.")
@click.option("--max-len", type=int, default=8, show_default=True)
@click.option("--node-cap", type=int, default=NODE_CAP, show_default=True)
@click.pass_obj
def cmd_minimize(cfg: CliConfig, path, gates, max_len, node_cap):
    """Exhaustively search for the shortest equivalent circuit."""
    c = _load(path, True)
    kinds = []
    for token in gates.split(","):
        token = token.strip().upper()
        try:
            kinds.append(GateKind(token))
        except ValueError:
            _error_exit(UnknownGate(f"unknown gate {token!r}"), True)
    try:
        result = minimize(c, kinds, max_len, cfg.tol, cfg.backend, node_cap, cfg.dim_cap)
    except QicError as exc:
        _error_exit(exc, True)
        return
    _echo_json(
        {"minimal_length": result.minimal_length,
         "nodes_explored": result.nodes_explored,
         "exhausted": result.exhausted,
         "minimal_circuit": serialize_circuit(result.minimal_circuit)}
    )


if __name__ == "__main__":
    main()
