"""Burst-error channel: deterministic branch superpositions and burst sampling.

A branch set models the system-environment entanglement after a noisy
transmission: each branch pairs a Pauli error with an opaque environment
label.  Distinct labels stand for mutually orthogonal environment states, so
branches decohere and can be corrected independently; amplitudes are carried
as bookkeeping only and play no role in correction.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .pauli import BURST_KINDS, BinaryVector, PauliString
from .statevector import StateVector


@dataclass(frozen=True)
class ErrorBranch:
    pauli: PauliString
    label: str
    amplitude: complex = 1.0 + 0.0j

    def __post_init__(self) -> None:
        if not self.label:
            raise ValueError("branch label must be nonempty")


@dataclass(frozen=True)
class BranchSet:
    branches: tuple[ErrorBranch, ...]

    def __post_init__(self) -> None:
        branches = tuple(self.branches)
        if not branches:
            raise ValueError("branch set must contain at least one branch")
        labels = [b.label for b in branches]
        if len(set(labels)) != len(labels):
            raise ValueError("branch labels must be pairwise distinct")
        object.__setattr__(self, "branches", branches)

    def __len__(self) -> int:
        return len(self.branches)


def apply_branches(bs: BranchSet, s: StateVector) -> list[tuple[ErrorBranch, StateVector]]:
    """One corrupted state per branch, in input order."""
    for b in bs.branches:
        if b.pauli.n != s.n:
            raise ValueError(f"branch {b.label!r} acts on {b.pauli.n} qubits, "
                             f"state has {s.n}")
    return [(b, s.apply_pauli(b.pauli)) for b in bs.branches]


def sample_burst(seed: int, n: int, l: int, kind: str) -> PauliString:
    """Deterministic random non-identity burst of the given kind.

    Exact length is uniform in [1, l], the window start uniform over valid
    positions, and the interior pattern uniform with nonzero endpoints
    (letters uniform over {X,Z,Y} at the window ends for colocated bursts).
    """
    if kind not in BURST_KINDS:
        raise ValueError(f"unknown burst kind {kind!r}; expected one of {BURST_KINDS}")
    if not 1 <= l <= n:
        raise ValueError(f"burst bound l={l} out of range for n={n}")
    rng = random.Random(seed)

    def burst_vector() -> BinaryVector:
        length = rng.randint(1, l)
        start = rng.randint(0, n - length)
        bits = [0] * n
        bits[start] = 1
        bits[start + length - 1] = 1
        for j in range(start + 1, start + length - 1):
            bits[j] = rng.randint(0, 1)
        return BinaryVector(tuple(bits))

    zero = BinaryVector.zeros(n)
    if kind == "bit":
        return PauliString(burst_vector(), zero)
    if kind == "phase":
        return PauliString(zero, burst_vector())
    if kind == "colocated":
        span = rng.randint(1, l)
        start = rng.randint(0, n - span)
        letters = ["I"] * n
        letters[start] = rng.choice("XZY")
        if span > 1:
            for j in range(start + 1, start + span - 1):
                letters[j] = rng.choice("IXZY")
            letters[start + span - 1] = rng.choice("XZY")
        return PauliString.from_label("".join(letters))
    # independent: each mask is empty with probability 1/4, but never both.
    while True:
        x = burst_vector() if rng.random() >= 0.25 else zero
        z = burst_vector() if rng.random() >= 0.25 else zero
        if not (x.is_zero and z.is_zero):
            return PauliString(x, z)
