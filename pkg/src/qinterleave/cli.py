"""Command-line front end: demo, verification sweeps, synthesis, enumeration.

Exit codes: 0 when the report verdict is "pass", 1 on a verification failure,
2 on a usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from importlib import resources
from typing import Callable, Sequence

import numpy as np

from .channel import BranchSet, ErrorBranch, apply_branches
from .codes import (
    StabilizerCode,
    SyndromeCollisionError,
    block_decode,
    build_syndrome_table,
    corrects_error_set,
    encode_blocks,
    encode_phase3,
    five_qubit_code,
    interleaved_code,
    logical_encoder,
    phase3_code,
)
from .interleaver import interleave_permutation, synthesize_swap_network
from .pauli import BURST_KINDS, PauliString, enumerate_bursts
from .statevector import MAX_QUBITS, StateVector

CODES: dict[str, Callable[[], StabilizerCode]] = {
    "phase3": phase3_code,
    "five": five_qubit_code,
}

# Fixed logical coefficients, cycled over blocks.  Chosen away from every
# logical-Pauli eigenstate so that a wrong correction always shows up as a
# fidelity drop.
DEFAULT_COEFFS = ((0.6, 0.8), (0.28, 0.96), (0.96, -0.28))

# The two length-3 phase bursts of the worked example, on the 9-qubit register.
DEMO_BURSTS = ("111000000", "000001110")

FIDELITY_TOL = 1e-10


@dataclass
class Report:
    """Per-item results plus an aggregate verdict; renders as text or JSON."""

    command: str
    parameters: dict
    items: list[dict] = field(default_factory=list)
    elapsed_seconds: float = 0.0

    @property
    def verdict(self) -> str:
        return "pass" if all(item["passed"] for item in self.items) else "fail"

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "parameters": self.parameters,
            "items": self.items,
            "verdict": self.verdict,
            "elapsed_seconds": self.elapsed_seconds,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        lines = [f"command: {self.command}"]
        for key, value in self.parameters.items():
            if isinstance(value, list) and len(str(value)) > 80:
                lines.append(f"  {key} =")
                lines.extend(f"    {element}" for element in value)
                continue
            if isinstance(value, str) and "\n" in value:
                lines.append(f"  {key} =")
                lines.extend(f"    {ln}" for ln in value.rstrip().splitlines())
                continue
            lines.append(f"  {key} = {value}")
        lines.append(f"items: {len(self.items)}")
        for item in self.items:
            status = "pass" if item["passed"] else "FAIL"
            extras = " ".join(f"{k}={v}" for k, v in item.items()
                              if k not in ("label", "passed"))
            lines.append(f"  [{status}] {item['label']}" + (f" | {extras}" if extras else ""))
        lines.append(f"verdict: {self.verdict}")
        lines.append(f"elapsed_seconds: {self.elapsed_seconds:.3f}")
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        return self.to_json() + "\n" if fmt == "json" else self.to_text()


def report_schema() -> dict:
    """The published JSON schema for CLI reports."""
    text = resources.files("qinterleave").joinpath("report_schema.json").read_text()
    return json.loads(text)


def _random_pairs(seed: int, m: int) -> list[tuple[complex, complex]]:
    rng = np.random.default_rng(seed)
    pairs = []
    for _ in range(m):
        raw = rng.normal(size=4)
        raw /= np.linalg.norm(raw)
        pairs.append((complex(raw[0], raw[1]), complex(raw[2], raw[3])))
    return pairs


def _cycled_pairs(m: int) -> list[tuple[complex, complex]]:
    return [DEFAULT_COEFFS[i % len(DEFAULT_COEFFS)] for i in range(m)]


def _decode_and_report(code: StabilizerCode, table, deint: StateVector, m: int,
                       reference: StateVector) -> dict:
    """Block-decode a deinterleaved state and summarize the outcome."""
    fixed, records = block_decode(code, table, deint, m)
    decoded = all(r.ok for r in records)
    fid = fixed.fidelity(reference)
    positions = sorted(
        code.n * r.block + q
        for r in records if r.correction is not None
        for q in (r.correction.x_mask.support() | r.correction.z_mask.support()))
    return {
        "passed": bool(decoded and fid >= 1.0 - FIDELITY_TOL),
        "fidelity": fid,
        "block_syndromes": [list(r.syndrome) for r in records],
        "corrected_positions_0based": positions,
        "corrected_positions_1based": [q + 1 for q in positions],
        "decoded": decoded,
    }


def run_demo(coeffs: Sequence[tuple[complex, complex]] | None = None,
             seed: int | None = None,
             bursts: Sequence[str] | None = None) -> Report:
    """Worked example: three phase-code blocks, interleave, the two-burst
    channel, deinterleave, block-wise correction.

    `bursts` replaces the default branch set with arbitrary 9-qubit Pauli
    strings (one branch per string).
    """
    start = time.perf_counter()
    if coeffs is None:
        coeffs = _random_pairs(seed, 3) if seed is not None else _cycled_pairs(3)
    coeffs = [(complex(a), complex(b)) for a, b in coeffs]
    if len(coeffs) != 3:
        raise ValueError("demo takes exactly 3 logical coefficient pairs")
    if bursts is None:
        paulis = [PauliString.from_masks("0" * 9, mask) for mask in DEMO_BURSTS]
    else:
        paulis = [PauliString.from_label(label) for label in bursts]
        if any(p.n != 9 for p in paulis):
            raise ValueError("demo bursts act on 9 qubits")

    code = phase3_code()
    table = build_syndrome_table(
        code, [PauliString.identity(3)] + enumerate_bursts(3, 1, "phase"))
    encoded = [encode_phase3(a, b) for a, b in coeffs]
    phi_in = encode_blocks(coeffs, encode_phase3)
    perm = interleave_permutation(3, 3)
    interleaved = phi_in.permute_qubits(perm)
    branches = BranchSet(tuple(
        ErrorBranch(p, f"e_{p}") for p in paulis))

    items = []
    for branch, corrupted in apply_branches(branches, interleaved):
        deint = corrupted.permute_qubits(perm.inverse())
        summary = _decode_and_report(code, table, deint, 3, phi_in)
        items.append({"label": branch.label, **summary})

    return Report(
        command="demo",
        parameters={
            "coefficients": [[_fmt_c(a), _fmt_c(b)] for a, b in coeffs],
            "bursts": [str(p) for p in paulis],
            "kind": "phase",
            "fidelity_tolerance": FIDELITY_TOL,
            "block_amplitudes": [
                [list(entry) for entry in block.amplitudes_table()]
                for block in encoded],
        },
        items=items,
        elapsed_seconds=time.perf_counter() - start,
    )


def _fmt_c(z: complex) -> str:
    return f"{z.real:.12g}{z.imag:+.12g}j" if z.imag else f"{z.real:.12g}"


def run_verify(code_name: str, degree: int, burst: int | None = None,
               kind: str = "phase", method: str = "stabilizer",
               seed: int | None = None) -> Report:
    """Exhaustive burst sweep against one interleaved code.

    The stabilizer method checks syndrome-level correctability of the whole
    burst set; the statevector method runs encode -> corrupt -> deinterleave
    -> block-decode -> fidelity for every burst.  Burst lengths beyond the
    register size are clamped.
    """
    start = time.perf_counter()
    if code_name not in CODES:
        raise ValueError(f"unknown code name {code_name!r}")
    if kind not in BURST_KINDS:
        raise ValueError(f"unknown burst kind {kind!r}")
    if method not in ("statevector", "stabilizer"):
        raise ValueError(f"unknown method {method!r}")
    if degree < 1:
        raise ValueError("degree must be >= 1")
    code = CODES[code_name]()
    total = code.n * degree
    requested = burst if burst is not None else code.burst_ability * degree
    effective = min(requested, total)
    errors = enumerate_bursts(total, effective, kind)
    parameters = {
        "code": code_name,
        "degree": degree,
        "burst_requested": requested,
        "burst_effective": effective,
        "kind": kind,
        "method": method,
        "interleaved_code": f"[[{total},{code.k * degree}]]",
        "burst_count": len(errors),
        "code_block": code.to_text(),
    }

    if method == "stabilizer":
        compound = interleaved_code(code, degree)
        parameters["interleaved_code_block"] = compound.to_text()
        result = corrects_error_set(compound, errors)
        item = {
            "label": f"{len(errors)} {kind} bursts of length <= {effective}",
            "passed": result.ok,
        }
        if not result.ok:
            item["witness"] = [str(result.witness[0]), str(result.witness[1])]
        items = [item]
    else:
        if total > MAX_QUBITS:
            raise ValueError(
                f"statevector method needs n*m <= {MAX_QUBITS}, got {total}")
        try:
            table = build_syndrome_table(
                code, [PauliString.identity(code.n)]
                + enumerate_bursts(code.n, code.burst_ability, kind))
        except SyndromeCollisionError as exc:
            items = [{
                "label": f"block decoder for {kind} bursts of length <= "
                         f"{code.burst_ability}",
                "passed": False,
                "reason": str(exc),
            }]
            return Report("verify", parameters, items,
                          time.perf_counter() - start)
        pairs = _random_pairs(seed, degree) if seed is not None else _cycled_pairs(degree)
        encoder = encode_phase3 if code_name == "phase3" else logical_encoder(code)
        phi_in = encode_blocks(pairs, encoder)
        perm = interleave_permutation(code.n, degree)
        interleaved = phi_in.permute_qubits(perm)
        inverse = perm.inverse()
        items = []
        for err in errors:
            deint = interleaved.apply_pauli(err).permute_qubits(inverse)
            summary = _decode_and_report(code, table, deint, degree, phi_in)
            items.append({"label": str(err), **summary})

    return Report("verify", parameters, items, time.perf_counter() - start)


def run_synth(rows: int, cols: int, fmt: str = "plain",
              expand_swaps: bool = False) -> tuple[str, Report]:
    """Synthesize the rows x cols interleaver circuit; returns (circuit text,
    report with gate counts and, for rows == cols, the count assertion)."""
    start = time.perf_counter()
    perm = interleave_permutation(rows, cols)
    circuit = synthesize_swap_network(perm)
    if expand_swaps:
        circuit = circuit.expand_swaps()
    text = circuit.export(fmt)
    count = circuit.cnot_count()
    total = rows * cols
    items = [{
        "label": f"cnot count within 3(nm-1) = {3 * (total - 1)}",
        "passed": count <= 3 * (total - 1) if total > 1 else count == 0,
        "cnot_count": count,
    }]
    if rows == cols:
        expected = 3 * rows * (rows - 1) // 2
        items.insert(0, {
            "label": f"cnot count equals 3n(n-1)/2 = {expected}",
            "passed": count == expected,
            "cnot_count": count,
        })
    report = Report(
        command="synth",
        parameters={
            "rows": rows,
            "cols": cols,
            "format": fmt,
            "expand_swaps": expand_swaps,
            "swap_count": circuit.swap_count,
            "cnot_count": count,
        },
        items=items,
        elapsed_seconds=time.perf_counter() - start,
    )
    return text, report


def run_enumerate(n: int, burst: int, kind: str) -> Report:
    """List every burst of the kind with length <= burst on n qubits."""
    start = time.perf_counter()
    effective = min(burst, n)
    errors = enumerate_bursts(n, effective, kind)
    items = [{"label": str(e), "passed": e.is_quantum_burst(effective),
              "weight": e.weight()} for e in errors]
    return Report(
        command="enumerate",
        parameters={"qubits": n, "burst_requested": burst,
                    "burst_effective": effective, "kind": kind,
                    "count": len(errors)},
        items=items,
        elapsed_seconds=time.perf_counter() - start,
    )


def _parse_coeffs(text: str) -> list[tuple[complex, complex]]:
    values = [float(v) for v in text.split(",")]
    if len(values) != 6:
        raise ValueError("--coeffs takes 6 comma-separated reals (c0,c1 per block)")
    return [(values[2 * i], values[2 * i + 1]) for i in range(3)]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qinterleave",
        description="Quantum burst-error correction by interleaving.")
    sub = parser.add_subparsers(dest="command", required=True)

    demo = sub.add_parser("demo", help="run the 3x3 phase-burst worked example")
    demo.add_argument("--coeffs", type=str, default=None,
                      help="6 comma-separated reals: c0,c1 for each block")
    demo.add_argument("--seed", type=int, default=None,
                      help="randomize logical coefficients")
    demo.add_argument("--bursts", type=str, default=None,
                      help="comma-separated 9-qubit Pauli strings replacing "
                           "the default branch set (e.g. ZZZIIIIII,IIIIIZZZI)")
    demo.add_argument("--output", choices=("text", "json"), default="text",
                      help="report format")

    verify = sub.add_parser("verify", help="exhaustive burst sweep on a code")
    verify.add_argument("--code", choices=sorted(CODES), default="phase3")
    verify.add_argument("--degree", type=int, default=3,
                        help="interleaving degree m")
    verify.add_argument("--burst", type=int, default=None,
                        help="maximum burst length (default: ability * degree)")
    verify.add_argument("--kind", choices=BURST_KINDS, default="phase")
    verify.add_argument("--method", choices=("statevector", "stabilizer"),
                        default="stabilizer")
    verify.add_argument("--seed", type=int, default=None,
                        help="randomize logical coefficients (statevector)")
    verify.add_argument("--output", choices=("text", "json"), default="text")

    synth = sub.add_parser("synth", help="synthesize an interleaver circuit")
    synth.add_argument("rows", type=int, help="block length n")
    synth.add_argument("cols", type=int, help="interleaving degree m")
    synth.add_argument("--format", choices=("plain", "qasm"), default="plain",
                       help="circuit format")
    synth.add_argument("--expand-swaps", action="store_true",
                       help="lower SWAPs to CNOT triples in plain output")
    synth.add_argument("--output", type=str, default=None, metavar="FILE",
                       help="write the circuit to FILE instead of stdout")
    synth.add_argument("--report", choices=("text", "json"), default="text",
                       help="report format")

    enum = sub.add_parser("enumerate", help="list bursts of a given kind")
    enum.add_argument("qubits", type=int, help="register size n")
    enum.add_argument("--burst", type=int, required=True,
                      help="maximum burst length")
    enum.add_argument("--kind", choices=BURST_KINDS, default="phase")
    enum.add_argument("--output", choices=("text", "json"), default="text")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "demo":
            coeffs = _parse_coeffs(args.coeffs) if args.coeffs else None
            bursts = args.bursts.split(",") if args.bursts else None
            report = run_demo(coeffs=coeffs, seed=args.seed, bursts=bursts)
            sys.stdout.write(report.render(args.output))
        elif args.command == "verify":
            report = run_verify(args.code, args.degree, burst=args.burst,
                                kind=args.kind, method=args.method,
                                seed=args.seed)
            sys.stdout.write(report.render(args.output))
        elif args.command == "synth":
            text, report = run_synth(args.rows, args.cols, fmt=args.format,
                                     expand_swaps=args.expand_swaps)
            if args.output:
                with open(args.output, "w", encoding="utf-8") as fh:
                    fh.write(text)
            else:
                sys.stdout.write(text)
            sys.stdout.write(report.render(args.report))
        else:
            report = run_enumerate(args.qubits, args.burst, args.kind)
            sys.stdout.write(report.render(args.output))
    except ValueError as exc:
        parser.exit(2, f"{parser.prog}: error: {exc}\n")
    return 0 if report.verdict == "pass" else 1


if __name__ == "__main__":
    sys.exit(main())
