"""Quantum burst-error correction by interleaving.

Builds block-interleaving permutations and their SWAP/CNOT circuits,
simulates Pauli burst errors on encoded multi-block registers, and verifies
burst-correcting ability of interleaved stabilizer codes both by exhaustive
state-vector decoding and by the symplectic correctability criterion.
"""
from .channel import BranchSet, ErrorBranch, apply_branches, sample_burst
from .codes import (
    BlockDecode,
    CorrectabilityResult,
    StabilizerCode,
    SyndromeCollisionError,
    SyndromeTable,
    UnknownSyndromeError,
    block_decode,
    build_syndrome_table,
    burst_ability_measured,
    correct,
    corrects_error_set,
    encode_blocks,
    encode_phase3,
    extract_syndrome,
    five_qubit_code,
    interleaved_code,
    logical_encoder,
    phase3_code,
)
from .interleaver import (
    Circuit,
    Gate,
    Permutation,
    interleave_permutation,
    parse_plain,
    synthesize_swap_network,
)
from .pauli import (
    BURST_KINDS,
    BinaryVector,
    PauliString,
    enumerate_burst_vectors,
    enumerate_bursts,
)
from .statevector import (
    MAX_QUBITS,
    IndeterminateEigenvalueError,
    StateVector,
    basis_state,
)

__version__ = "0.1.0"

__all__ = [
    "BURST_KINDS",
    "BinaryVector",
    "BlockDecode",
    "BranchSet",
    "Circuit",
    "CorrectabilityResult",
    "ErrorBranch",
    "Gate",
    "IndeterminateEigenvalueError",
    "MAX_QUBITS",
    "PauliString",
    "Permutation",
    "StabilizerCode",
    "StateVector",
    "SyndromeCollisionError",
    "SyndromeTable",
    "UnknownSyndromeError",
    "apply_branches",
    "basis_state",
    "block_decode",
    "build_syndrome_table",
    "burst_ability_measured",
    "correct",
    "corrects_error_set",
    "encode_blocks",
    "encode_phase3",
    "enumerate_burst_vectors",
    "enumerate_bursts",
    "extract_syndrome",
    "five_qubit_code",
    "interleave_permutation",
    "interleaved_code",
    "logical_encoder",
    "parse_plain",
    "phase3_code",
    "sample_burst",
    "synthesize_swap_network",
]
