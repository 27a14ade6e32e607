"""Stabilizer codes, syndrome decoding, and interleaved-code construction.

Two built-in codes are provided: the three-qubit phase-error code with
codewords (|000>+|011>+|101>+|110>)/2 and (|111>+|100>+|010>+|001>)/2,
stabilized by {XXI, IXX}, and the [[5,1]] code with the cyclic generators
XZZXI, IXZZX, XIXZZ, ZXIXZ.  Interleaving a code to degree m pushes each
block's generators and logicals through the block-interleave permutation,
multiplying the declared burst-correcting ability by m.

Correctability of an error set is the standard stabilizer criterion: any two
errors with equal syndromes must differ by a stabilizer element (degenerate
errors are allowed).  Errors are bucketed by syndrome so only intra-bucket
pairs need the GF(2) membership solve, and within a bucket every element is
compared against the lexicographically smallest one, which is equivalent by
linearity of the group membership.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, reduce
from typing import Callable, NamedTuple, Sequence

import numpy as np

from .interleaver import interleave_permutation
from .pauli import PauliString, enumerate_bursts
from .statevector import MAX_QUBITS, StateVector, basis_state

_NORM_TOL = 1e-10


class SyndromeCollisionError(ValueError):
    """Two errors share a syndrome but do not differ by a stabilizer element."""


class UnknownSyndromeError(KeyError):
    """The measured syndrome has no entry in the decoding table."""


class _Gf2Span:
    """Row space over GF(2), rows packed as ints; supports rank and membership."""

    def __init__(self, rows: Sequence[int] = ()) -> None:
        self._pivots: dict[int, int] = {}
        for r in rows:
            self.add(r)

    def reduce(self, row: int) -> int:
        while row:
            top = row.bit_length() - 1
            base = self._pivots.get(top)
            if base is None:
                return row
            row ^= base
        return row

    def add(self, row: int) -> bool:
        row = self.reduce(row)
        if row == 0:
            return False
        self._pivots[row.bit_length() - 1] = row
        return True

    def contains(self, row: int) -> bool:
        return self.reduce(row) == 0

    @property
    def rank(self) -> int:
        return len(self._pivots)


def _symplectic_int(p: PauliString) -> int:
    return (p.x_mask.as_int << p.n) | p.z_mask.as_int


@dataclass(frozen=True)
class StabilizerCode:
    """[[n,k]] code: commuting generators, logical pairs, declared burst ability."""

    n: int
    k: int
    generators: tuple[PauliString, ...]
    logical_xs: tuple[PauliString, ...]
    logical_zs: tuple[PauliString, ...]
    burst_ability: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "logical_xs", tuple(self.logical_xs))
        object.__setattr__(self, "logical_zs", tuple(self.logical_zs))
        if len(self.generators) != self.n - self.k:
            raise ValueError(f"expected {self.n - self.k} generators")
        if len(self.logical_xs) != self.k or len(self.logical_zs) != self.k:
            raise ValueError(f"expected {self.k} logical X/Z pairs")
        for p in (*self.generators, *self.logical_xs, *self.logical_zs):
            if p.n != self.n:
                raise ValueError("operator length does not match code size")
        gens = self.generators
        for i, g in enumerate(gens):
            for h in gens[i + 1:]:
                if g.symplectic_product(h):
                    raise ValueError(f"generators {g} and {h} anticommute")
        span = _Gf2Span([_symplectic_int(g) for g in gens])
        if span.rank != len(gens):
            raise ValueError("generators are not GF(2)-independent")
        for log in (*self.logical_xs, *self.logical_zs):
            for g in gens:
                if log.symplectic_product(g):
                    raise ValueError(f"logical {log} anticommutes with generator {g}")
        for i, lx in enumerate(self.logical_xs):
            for j, lz in enumerate(self.logical_zs):
                want = 1 if i == j else 0
                if lx.symplectic_product(lz) != want:
                    raise ValueError("logical X/Z pairing is wrong")
        for ops in (self.logical_xs, self.logical_zs):
            for i, a in enumerate(ops):
                for b in ops[i + 1:]:
                    if a.symplectic_product(b):
                        raise ValueError("same-type logicals must commute")

    @cached_property
    def _stabilizer_span(self) -> _Gf2Span:
        return _Gf2Span([_symplectic_int(g) for g in self.generators])

    @cached_property
    def _generator_masks(self) -> tuple[tuple[int, int], ...]:
        return tuple((g.x_mask.as_int, g.z_mask.as_int) for g in self.generators)

    def syndrome_of(self, error: PauliString) -> tuple[int, ...]:
        """Commutation bits of the error against each generator (symplectic)."""
        if error.n != self.n:
            raise ValueError("error length does not match code size")
        ex = error.x_mask.as_int
        ez = error.z_mask.as_int
        return tuple(((gx & ez).bit_count() + (gz & ex).bit_count()) & 1
                     for gx, gz in self._generator_masks)

    def in_stabilizer_group(self, p: PauliString) -> bool:
        """Mask-level membership of p in the group generated by the stabilizers."""
        if p.n != self.n:
            raise ValueError("operator length does not match code size")
        return self._stabilizer_span.contains(_symplectic_int(p))

    def to_text(self) -> str:
        lines = [f"[[{self.n},{self.k}]] burst_ability={self.burst_ability}"]
        lines += [f"stabilizer {g}" for g in self.generators]
        lines += [f"logical_x {p}" for p in self.logical_xs]
        lines += [f"logical_z {p}" for p in self.logical_zs]
        return "\n".join(lines) + "\n"


def phase3_code() -> StabilizerCode:
    """Three-qubit code correcting a single phase error (burst ability 1)."""
    return StabilizerCode(
        n=3, k=1,
        generators=(PauliString.from_label("XXI"), PauliString.from_label("IXX")),
        logical_xs=(PauliString.from_label("XXX"),),
        logical_zs=(PauliString.from_label("ZZZ"),),
        burst_ability=1,
    )


def five_qubit_code() -> StabilizerCode:
    """The [[5,1]] code with cyclic generators; corrects any single-qubit error."""
    return StabilizerCode(
        n=5, k=1,
        generators=(
            PauliString.from_label("XZZXI"),
            PauliString.from_label("IXZZX"),
            PauliString.from_label("XIXZZ"),
            PauliString.from_label("ZXIXZ"),
        ),
        logical_xs=(PauliString.from_label("XXXXX"),),
        logical_zs=(PauliString.from_label("ZZZZZ"),),
        burst_ability=1,
    )


def encode_phase3(c0: complex, c1: complex) -> StateVector:
    """c0|C_0> + c1|C_1> with the even/odd-parity codewords of the phase code."""
    if abs(abs(c0) ** 2 + abs(c1) ** 2 - 1.0) > _NORM_TOL:
        raise ValueError("logical coefficients must satisfy |c0|^2 + |c1|^2 = 1")
    amps = np.zeros(8, dtype=np.complex128)
    for label in ("000", "011", "101", "110"):
        amps[int(label, 2)] = 0.5 * c0
    for label in ("111", "100", "010", "001"):
        amps[int(label, 2)] = 0.5 * c1
    return StateVector(3, amps)


def logical_encoder(code: StabilizerCode) -> Callable[[complex, complex], StateVector]:
    """Encoder for a k=1 code, built by projecting |0...0> onto the code space.

    |0_L> is the normalized image of the all-zeros ket under prod (I+g)/2,
    and |1_L> = X_L |0_L>; requires a pure-Z logical Z so that |0...0> lies
    in its +1 eigenspace.
    """
    if code.k != 1:
        raise ValueError("logical_encoder supports k=1 codes only")
    if not code.logical_zs[0].x_mask.is_zero:
        raise ValueError("logical Z must be Z-type for the projector construction")
    amps = basis_state(code.n, [0] * code.n).amps
    for g in code.generators:
        combined = amps + StateVector(code.n, amps).apply_pauli(g).amps
        norm = np.linalg.norm(combined)
        if norm < 1e-9:
            raise ValueError("|0...0> has no component in the code space")
        amps = combined / norm
    zero_l = StateVector(code.n, amps)
    one_l = zero_l.apply_pauli(code.logical_xs[0])

    def encode(c0: complex, c1: complex) -> StateVector:
        if abs(abs(c0) ** 2 + abs(c1) ** 2 - 1.0) > _NORM_TOL:
            raise ValueError("logical coefficients must satisfy |c0|^2 + |c1|^2 = 1")
        return StateVector(code.n, c0 * zero_l.amps + c1 * one_l.amps)

    return encode


def encode_blocks(coeffs: Sequence[tuple[complex, complex]],
                  encoder: Callable[[complex, complex], StateVector]) -> StateVector:
    """Tensor product of per-block encodings, block 0 in the lowest positions."""
    if not coeffs:
        raise ValueError("need at least one block")
    blocks = [encoder(c0, c1) for c0, c1 in coeffs]
    total = sum(b.n for b in blocks)
    if total > MAX_QUBITS:
        raise ValueError(f"{total} qubits exceeds the {MAX_QUBITS}-qubit guard")
    return reduce(lambda a, b: a.tensor(b), blocks)


def extract_syndrome(code: StabilizerCode, s: StateVector) -> tuple[int, ...]:
    """Measured syndrome: bit i is 0 for generator eigenvalue +1, else 1."""
    return tuple(0 if s.stabilizer_eigenvalue(g) == 1 else 1 for g in code.generators)


@dataclass(frozen=True)
class SyndromeTable:
    """Maps syndrome tuples to correction Paulis; zero syndrome maps to identity."""

    corrections: dict[tuple[int, ...], PauliString]

    def __len__(self) -> int:
        return len(self.corrections)

    def lookup(self, syndrome: tuple[int, ...]) -> PauliString:
        try:
            return self.corrections[syndrome]
        except KeyError:
            raise UnknownSyndromeError(syndrome) from None


def build_syndrome_table(code: StabilizerCode,
                         errors: Sequence[PauliString]) -> SyndromeTable:
    """Syndrome -> correction map; raises SyndromeCollisionError when two
    errors share a syndrome without differing by a stabilizer element."""
    identity = PauliString.identity(code.n)
    table: dict[tuple[int, ...], PauliString] = {(0,) * (code.n - code.k): identity}
    for e in errors:
        syn = code.syndrome_of(e)
        existing = table.get(syn)
        if existing is None:
            table[syn] = e
        elif not code.in_stabilizer_group(existing * e):
            raise SyndromeCollisionError(
                f"errors {existing} and {e} share syndrome {syn} but their "
                "product is outside the stabilizer group")
    return SyndromeTable(table)


def correct(code: StabilizerCode, table: SyndromeTable, s: StateVector) -> StateVector:
    """Apply the table's correction for the measured syndrome."""
    return s.apply_pauli(table.lookup(extract_syndrome(code, s)))


def interleaved_code(code: StabilizerCode, m: int) -> StabilizerCode:
    """[[nm,km]] code: every block operator embedded at its block, then pushed
    through the interleave permutation; burst ability scales to b*m."""
    if m < 1:
        raise ValueError("interleaving degree must be >= 1")
    perm = interleave_permutation(code.n, m)
    total = code.n * m

    def place(ops: Sequence[PauliString]) -> tuple[PauliString, ...]:
        return tuple(op.embed(total, i * code.n).permute(perm.images)
                     for i in range(m) for op in ops)

    return StabilizerCode(
        n=total,
        k=code.k * m,
        generators=place(code.generators),
        logical_xs=place(code.logical_xs),
        logical_zs=place(code.logical_zs),
        burst_ability=code.burst_ability * m,
    )


class CorrectabilityResult(NamedTuple):
    ok: bool
    witness: tuple[PauliString, PauliString] | None

    def __bool__(self) -> bool:
        return self.ok


def corrects_error_set(code: StabilizerCode,
                       errors: Sequence[PauliString]) -> CorrectabilityResult:
    """Stabilizer correctability of the error set (identity always included).

    True iff any two errors with equal syndromes have a product inside the
    stabilizer group.  On failure the witness is the offending pair, chosen
    deterministically: buckets are scanned in syndrome order and compared
    against their lexicographically smallest member.
    """
    buckets: dict[tuple[int, ...], list[PauliString]] = {}
    seen: set[tuple[tuple[int, ...], tuple[int, ...]]] = set()
    for e in (PauliString.identity(code.n), *errors):
        key = (e.x_mask.bits, e.z_mask.bits)
        if key in seen:
            continue
        seen.add(key)
        buckets.setdefault(code.syndrome_of(e), []).append(e)
    for syn in sorted(buckets):
        bucket = sorted(buckets[syn], key=lambda p: p.sort_key)
        base = bucket[0]
        for e in bucket[1:]:
            if not code.in_stabilizer_group(base * e):
                return CorrectabilityResult(False, (base, e))
    return CorrectabilityResult(True, None)


def burst_ability_measured(code: StabilizerCode, kind: str) -> int:
    """Largest l for which every burst of the kind with length <= l is correctable."""
    for l in range(1, code.n + 1):
        if not corrects_error_set(code, enumerate_bursts(code.n, l, kind)):
            return l - 1
    return code.n


@dataclass(frozen=True)
class BlockDecode:
    """Outcome of decoding one block of a deinterleaved register."""

    block: int
    syndrome: tuple[int, ...]
    correction: PauliString | None  # None when the syndrome is not in the table

    @property
    def ok(self) -> bool:
        return self.correction is not None


def block_decode(code: StabilizerCode, table: SyndromeTable, s: StateVector,
                 m: int) -> tuple[StateVector, list[BlockDecode]]:
    """Decode m consecutive blocks of a block-major (deinterleaved) state.

    Blocks with an unknown syndrome are left uncorrected and flagged; the
    caller decides whether that counts as failure.
    """
    if s.n != code.n * m:
        raise ValueError("state size must be n*m")
    state = s
    records = []
    for i in range(m):
        syn = tuple(
            0 if state.stabilizer_eigenvalue(g.embed(s.n, i * code.n)) == 1 else 1
            for g in code.generators)
        corr = table.corrections.get(syn)
        if corr is not None and not corr.is_identity:
            state = state.apply_pauli(corr.embed(s.n, i * code.n))
        records.append(BlockDecode(i, syn, corr))
    return state, records
