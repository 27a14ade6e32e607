"""Binary-vector and Pauli-mask algebra.

An n-qubit Pauli operator is stored as a pair of binary vectors (x_mask, z_mask)
and read as the operator X_x Z_z, with the global phase deliberately untracked.
Position 0 is the leftmost symbol of a mask string such as "111000000".

A burst of length l is a vector whose nonzero entries fit in l consecutive
positions with nonzero endpoints; a Pauli string is a quantum burst of length l
when both of its masks are bursts of length l or less.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterable, Iterator, Sequence

BURST_KINDS = ("bit", "phase", "colocated", "independent")

_LETTER_TO_BITS = {"I": (0, 0), "X": (1, 0), "Z": (0, 1), "Y": (1, 1)}
_BITS_TO_LETTER = {v: k for k, v in _LETTER_TO_BITS.items()}


@dataclass(frozen=True)
class BinaryVector:
    """Ordered 0/1 sequence; positions are 0-indexed left to right."""

    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        bits = tuple(self.bits)
        if len(bits) < 1:
            raise ValueError("binary vector must have length >= 1")
        if any(b not in (0, 1) for b in bits):
            raise ValueError("binary vector entries must be 0 or 1")
        object.__setattr__(self, "bits", bits)

    @classmethod
    def zeros(cls, n: int) -> "BinaryVector":
        return cls((0,) * n)

    @classmethod
    def from_string(cls, s: str) -> "BinaryVector":
        return cls(tuple(int(c) for c in s))

    @classmethod
    def from_support(cls, n: int, positions: Iterable[int]) -> "BinaryVector":
        bits = [0] * n
        for p in positions:
            bits[p] = 1
        return cls(tuple(bits))

    def __len__(self) -> int:
        return len(self.bits)

    def __getitem__(self, i: int) -> int:
        return self.bits[i]

    def __iter__(self) -> Iterator[int]:
        return iter(self.bits)

    def __str__(self) -> str:
        return "".join(str(b) for b in self.bits)

    def __xor__(self, other: "BinaryVector") -> "BinaryVector":
        if len(self) != len(other):
            raise ValueError("length mismatch in binary-vector xor")
        return BinaryVector(tuple(a ^ b for a, b in zip(self.bits, other.bits)))

    @cached_property
    def as_int(self) -> int:
        """Integer value with position 0 as the most significant bit."""
        value = 0
        for b in self.bits:
            value = (value << 1) | b
        return value

    @property
    def is_zero(self) -> bool:
        return self.as_int == 0

    def support(self) -> frozenset[int]:
        """Indices carrying a 1."""
        return frozenset(i for i, b in enumerate(self.bits) if b)

    def weight(self) -> int:
        return self.as_int.bit_count()

    def burst_length(self) -> int:
        """Span from the first to the last nonzero position; 0 for the zero vector."""
        v = self.as_int
        if v == 0:
            return 0
        n = len(self.bits)
        first = n - v.bit_length()
        last = n - (v & -v).bit_length()
        return last - first + 1

    def dot(self, other: "BinaryVector") -> int:
        """Inner product mod 2."""
        if len(self) != len(other):
            raise ValueError("length mismatch in binary-vector dot product")
        return (self.as_int & other.as_int).bit_count() & 1


@dataclass(frozen=True)
class PauliString:
    """Phase-free n-qubit Pauli operator X_x Z_z encoded as two masks."""

    x_mask: BinaryVector
    z_mask: BinaryVector

    def __post_init__(self) -> None:
        if len(self.x_mask) != len(self.z_mask):
            raise ValueError("x and z masks must have equal length")

    @classmethod
    def identity(cls, n: int) -> "PauliString":
        return cls(BinaryVector.zeros(n), BinaryVector.zeros(n))

    @classmethod
    def from_masks(cls, x: str | Sequence[int], z: str | Sequence[int]) -> "PauliString":
        xv = BinaryVector.from_string(x) if isinstance(x, str) else BinaryVector(tuple(x))
        zv = BinaryVector.from_string(z) if isinstance(z, str) else BinaryVector(tuple(z))
        return cls(xv, zv)

    @classmethod
    def from_label(cls, label: str) -> "PauliString":
        """Build from a string over {I,X,Z,Y}, e.g. "ZZZIIIIII"."""
        try:
            pairs = [_LETTER_TO_BITS[c] for c in label.upper()]
        except KeyError as exc:
            raise ValueError(f"invalid Pauli letter {exc.args[0]!r}") from None
        return cls(BinaryVector(tuple(p[0] for p in pairs)),
                   BinaryVector(tuple(p[1] for p in pairs)))

    @property
    def n(self) -> int:
        return len(self.x_mask)

    @property
    def is_identity(self) -> bool:
        return self.x_mask.is_zero and self.z_mask.is_zero

    def label(self) -> str:
        return "".join(_BITS_TO_LETTER[x, z]
                       for x, z in zip(self.x_mask.bits, self.z_mask.bits))

    def __str__(self) -> str:
        return self.label()

    def weight(self) -> int:
        """Number of qubits touched: |supp(x) union supp(z)|."""
        return (self.x_mask.as_int | self.z_mask.as_int).bit_count()

    def is_quantum_burst(self, l: int) -> bool:
        """True when the bit mask and the phase mask are each bursts of length <= l."""
        return self.x_mask.burst_length() <= l and self.z_mask.burst_length() <= l

    def symplectic_product(self, other: "PauliString") -> int:
        """0 when the two operators commute, 1 when they anticommute."""
        if self.n != other.n:
            raise ValueError("Pauli strings act on different register sizes")
        return self.x_mask.dot(other.z_mask) ^ self.z_mask.dot(other.x_mask)

    def commutes_with(self, other: "PauliString") -> bool:
        return self.symplectic_product(other) == 0

    def __mul__(self, other: "PauliString") -> "PauliString":
        """Mask-level product: XOR both masks, phase discarded."""
        if self.n != other.n:
            raise ValueError("Pauli strings act on different register sizes")
        return PauliString(self.x_mask ^ other.x_mask, self.z_mask ^ other.z_mask)

    def permute(self, images: Sequence[int]) -> "PauliString":
        """Move the letter at position i to position images[i], in both masks."""
        if len(images) != self.n:
            raise ValueError("permutation size does not match Pauli length")
        x = [0] * self.n
        z = [0] * self.n
        for i, dest in enumerate(images):
            x[dest] = self.x_mask.bits[i]
            z[dest] = self.z_mask.bits[i]
        return PauliString(BinaryVector(tuple(x)), BinaryVector(tuple(z)))

    def embed(self, n_total: int, offset: int) -> "PauliString":
        """Place this operator at [offset, offset+n) of a larger identity register."""
        if offset < 0 or offset + self.n > n_total:
            raise ValueError("embedding window out of range")
        pad_left = (0,) * offset
        pad_right = (0,) * (n_total - offset - self.n)
        return PauliString(
            BinaryVector(pad_left + self.x_mask.bits + pad_right),
            BinaryVector(pad_left + self.z_mask.bits + pad_right),
        )

    @property
    def sort_key(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Lexicographic key on (x bits, z bits); used for deterministic tie-breaks."""
        return (self.x_mask.bits, self.z_mask.bits)


def enumerate_burst_vectors(n: int, l: int) -> list[BinaryVector]:
    """All nonzero length-n vectors with burst length <= l, in (length, start,
    interior pattern) order."""
    if not 1 <= l <= n:
        raise ValueError(f"burst bound l={l} out of range for n={n}")
    out = []
    for length in range(1, l + 1):
        inner = length - 2
        for start in range(n - length + 1):
            if length == 1:
                out.append(BinaryVector.from_support(n, [start]))
                continue
            for pattern in range(1 << max(inner, 0)):
                bits = [0] * n
                bits[start] = 1
                bits[start + length - 1] = 1
                for j in range(inner):
                    bits[start + 1 + j] = (pattern >> (inner - 1 - j)) & 1
                out.append(BinaryVector(tuple(bits)))
    return out


def _colocated_bursts(n: int, l: int) -> list[PauliString]:
    # Minimal window containing supp(x) | supp(z) must have span <= l, so the
    # window endpoints carry a non-identity letter and each string is produced
    # exactly once.
    out = []
    ends = ("X", "Z", "Y")
    full = ("I", "X", "Z", "Y")
    for span in range(1, l + 1):
        for start in range(n - span + 1):
            if span == 1:
                for letter in ends:
                    label = ["I"] * n
                    label[start] = letter
                    out.append(PauliString.from_label("".join(label)))
                continue
            for first in ends:
                for middle in product(full, repeat=span - 2):
                    for last in ends:
                        label = ["I"] * n
                        label[start] = first
                        for j, letter in enumerate(middle):
                            label[start + 1 + j] = letter
                        label[start + span - 1] = last
                        out.append(PauliString.from_label("".join(label)))
    return out


def enumerate_bursts(n: int, l: int, kind: str) -> list[PauliString]:
    """All non-identity Pauli strings of the given burst kind on n qubits.

    bit: x mask is a burst of length <= l, z mask zero.
    phase: mirror image of bit.
    colocated: the minimal window holding both supports spans <= l positions.
    independent: each mask is separately a (possibly empty) burst of length <= l.
    """
    if kind not in BURST_KINDS:
        raise ValueError(f"unknown burst kind {kind!r}; expected one of {BURST_KINDS}")
    if not 1 <= l <= n:
        raise ValueError(f"burst bound l={l} out of range for n={n}")
    zero = BinaryVector.zeros(n)
    if kind == "bit":
        return [PauliString(v, zero) for v in enumerate_burst_vectors(n, l)]
    if kind == "phase":
        return [PauliString(zero, v) for v in enumerate_burst_vectors(n, l)]
    if kind == "colocated":
        return _colocated_bursts(n, l)
    vectors = [zero] + enumerate_burst_vectors(n, l)
    return [PauliString(x, z) for x in vectors for z in vectors
            if not (x.is_zero and z.is_zero)]
