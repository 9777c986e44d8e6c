"""Walker state storage and structured operator application.

The walker lives on three finite position axes (one per player) with a
three-qubit coin register. Amplitudes are stored densely as a complex
array of shape (8, L, L, L) with L = 2*T + 1 sites per axis and the coin
index convention c = 4*b1 + 2*b2 + b3 (b_i = 1 for |R>).

Coin operators are applied as 8x8 matrices on the coin axis; the position
update shifts each axis by the corresponding coin bit. A dense Kronecker
oracle assembles the full round matrix for small lattices so the
structured path can be verified against an independent implementation.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

UNITARY_TOL = 1e-12
NORM_TOL = 1e-10

# ring neighbors, 1-based players: predecessor (i-1) and successor (i+1)
RING_PREV = {1: 3, 2: 1, 3: 2}
RING_NEXT = {1: 2, 2: 3, 3: 1}

_I2 = np.eye(2, dtype=complex)
_P_L = np.array([[1.0, 0.0], [0.0, 0.0]], dtype=complex)
_P_R = np.array([[0.0, 0.0], [0.0, 1.0]], dtype=complex)


class BoundaryOverflowError(RuntimeError):
    """Raised when a shift would push amplitude past the lattice edge.

    Signals an undersized lattice; amplitude is never wrapped silently.
    """


@dataclass(frozen=True)
class PositionLattice:
    """Finite line of 2*T + 1 sites per axis, coordinates -T..T."""

    half_extent: int

    def __post_init__(self) -> None:
        if self.half_extent < 1:
            raise ValueError(f"lattice half_extent must be >= 1, got {self.half_extent}")

    @property
    def size(self) -> int:
        return 2 * self.half_extent + 1

    @property
    def coordinates(self) -> np.ndarray:
        return np.arange(-self.half_extent, self.half_extent + 1)


@dataclass
class WalkerState:
    """Dense amplitude tensor over (coin index, x1, x2, x3)."""

    lattice: PositionLattice
    tensor: np.ndarray  # complex128, shape (8, L, L, L)

    def qubit_view(self) -> np.ndarray:
        """View with the coin index split into per-player bits (2,2,2,L,L,L)."""
        L = self.lattice.size
        return self.tensor.reshape(2, 2, 2, L, L, L)

    def copy(self) -> "WalkerState":
        return WalkerState(self.lattice, self.tensor.copy())

    def coin_marginal(self) -> np.ndarray:
        """Probability of each coin basis state, positions traced out."""
        return np.abs(self.tensor.reshape(8, -1)) ** 2 @ np.ones(self.lattice.size**3)


def _check_coin_unitary(m: np.ndarray, label: str) -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    if m.shape != (2, 2):
        raise ValueError(f"{label} must be a 2x2 matrix, got shape {m.shape}")
    dev = np.max(np.abs(m.conj().T @ m - _I2))
    if dev > UNITARY_TOL:
        raise ValueError(f"{label} is not unitary (deviation {dev:.3e})")
    return m


def _check_player(player: int) -> None:
    if player not in (1, 2, 3):
        raise ValueError(f"player must be 1, 2 or 3, got {player}")


def _kron3(ops: Sequence[np.ndarray]) -> np.ndarray:
    return np.kron(ops[0], np.kron(ops[1], ops[2]))


def init_walker_state(coin_state: np.ndarray, lattice: PositionLattice) -> WalkerState:
    """Place a unit-norm coin vector at the position origin.

    Args:
        coin_state: 8-component complex vector, unit norm to 1e-10.
        lattice: position lattice; must satisfy the caller's headroom needs.

    Raises:
        ValueError: non-normalized coin state or wrong length.
    """
    v = np.asarray(coin_state, dtype=complex).reshape(-1)
    if v.shape != (8,):
        raise ValueError(f"coin_state must have 8 components, got {v.shape}")
    norm = np.linalg.norm(v)
    if abs(norm - 1.0) > NORM_TOL:
        raise ValueError(f"coin_state must have unit norm, got {norm!r}")
    L = lattice.size
    t = np.zeros((8, L, L, L), dtype=complex)
    t[:, lattice.half_extent, lattice.half_extent, lattice.half_extent] = v
    return WalkerState(lattice, t)


def state_norm(state: WalkerState) -> float:
    """Euclidean norm sqrt(sum |amp|^2) of the full amplitude tensor."""
    return float(np.linalg.norm(state.tensor))


def _apply_coin_register_op(state: WalkerState, op8: np.ndarray) -> WalkerState:
    flat = state.tensor.reshape(8, -1)
    return WalkerState(state.lattice, (op8 @ flat).reshape(state.tensor.shape))


def lift_single_coin(m: np.ndarray, player: int) -> np.ndarray:
    """8x8 operator applying a 2x2 matrix to one player's coin qubit."""
    ops = [_I2, _I2, _I2]
    ops[player - 1] = np.asarray(m, dtype=complex)
    return _kron3(ops)


def apply_coin_matrix(state: WalkerState, player: int, m: np.ndarray) -> WalkerState:
    """Toss one player's coin with a 2x2 unitary, identity elsewhere."""
    _check_player(player)
    m = _check_coin_unitary(m, "coin matrix")
    return _apply_coin_register_op(state, lift_single_coin(m, player))


def controlled_coin_operator(
    player: int,
    m_rr: np.ndarray,
    m_rl: np.ndarray,
    m_lr: np.ndarray,
    m_ll: np.ndarray,
) -> np.ndarray:
    """8x8 neighbor-conditioned toss operator for one player.

    The predecessor (i-1) and successor (i+1) on the three-player ring
    select among the four branch matrices: ``m_rr`` when both neighbor
    coins are |R>, ``m_rl`` when the predecessor is |R> and the successor
    |L>, ``m_lr`` for the reverse, ``m_ll`` when both are |L>.
    """
    prev_slot = RING_PREV[player] - 1
    next_slot = RING_NEXT[player] - 1
    op = np.zeros((8, 8), dtype=complex)
    branches = {(1, 1): m_rr, (1, 0): m_rl, (0, 1): m_lr, (0, 0): m_ll}
    for (bp, bn), m in branches.items():
        ops = [None, None, None]
        ops[player - 1] = np.asarray(m, dtype=complex)
        ops[prev_slot] = _P_R if bp else _P_L
        ops[next_slot] = _P_R if bn else _P_L
        op += _kron3(ops)
    return op


def apply_controlled_coin(
    state: WalkerState,
    player: int,
    m_rr: np.ndarray,
    m_rl: np.ndarray,
    m_lr: np.ndarray,
    m_ll: np.ndarray,
) -> WalkerState:
    """Toss one player's coin with the branch selected by its ring neighbors."""
    _check_player(player)
    mats = [
        _check_coin_unitary(m, name)
        for m, name in (
            (m_rr, "m_rr"), (m_rl, "m_rl"), (m_lr, "m_lr"), (m_ll, "m_ll"),
        )
    ]
    return _apply_coin_register_op(state, controlled_coin_operator(player, *mats))


# the position update is a fixed permutation of amplitudes; cache it per size
_SHIFT_PERMUTATIONS: dict[int, np.ndarray] = {}


def _shift_permutation(size: int) -> np.ndarray:
    perm = _SHIFT_PERMUTATIONS.get(size)
    if perm is None:
        idx = np.arange(8 * size**3).reshape(8, size, size, size)
        out = np.empty_like(idx)
        for c in range(8):
            shifts = tuple(1 if (c >> (2 - a)) & 1 else -1 for a in range(3))
            out[c] = np.roll(idx[c], shift=shifts, axis=(0, 1, 2))
        perm = out.reshape(-1)
        _SHIFT_PERMUTATIONS[size] = perm
    return perm


def apply_position_update(state: WalkerState) -> WalkerState:
    """Shift axis i by +1 where player i's coin is |R> and -1 where |L>.

    Raises:
        BoundaryOverflowError: nonzero amplitude sits at the lattice edge
            in the direction of its shift.
    """
    t = state.qubit_view()
    for axis in range(3):
        # the slice about to leave the lattice must be empty
        edge_lo = [slice(None)] * 6
        edge_lo[axis] = 0
        edge_lo[3 + axis] = 0
        edge_hi = [slice(None)] * 6
        edge_hi[axis] = 1
        edge_hi[3 + axis] = -1
        if np.any(t[tuple(edge_lo)] != 0):
            raise BoundaryOverflowError(
                f"amplitude at x{axis + 1} = -{state.lattice.half_extent} cannot shift down"
            )
        if np.any(t[tuple(edge_hi)] != 0):
            raise BoundaryOverflowError(
                f"amplitude at x{axis + 1} = +{state.lattice.half_extent} cannot shift up"
            )
    L = state.lattice.size
    shifted = np.take(state.tensor.reshape(-1), _shift_permutation(L))
    return WalkerState(state.lattice, shifted.reshape(8, L, L, L))


# --- dense verification oracle -------------------------------------------

# a full round matrix has dimension 8 * (2T+1)^3; T=3 is already 2744
MAX_ORACLE_HALF_EXTENT = 3

CoinOpSpec = Sequence  # per player: a 2x2 array, or a 4-tuple (m_rr, m_rl, m_lr, m_ll)


def _dense_shift_matrix(size: int) -> np.ndarray:
    """Cyclic +1 shift; exact while no amplitude touches the lattice edge."""
    s = np.zeros((size, size), dtype=complex)
    for k in range(size):
        s[(k + 1) % size, k] = 1.0
    return s


def dense_round_matrix(lattice: PositionLattice, coin_ops: CoinOpSpec) -> np.ndarray:
    """Full round unitary by Kronecker assembly: tosses 1..3, then the shift.

    ``coin_ops`` holds one entry per player: a plain 2x2 matrix for an
    unconditional toss or a 4-tuple (m_rr, m_rl, m_lr, m_ll) for a
    neighbor-conditioned one.
    """
    if lattice.half_extent > MAX_ORACLE_HALF_EXTENT:
        raise ValueError(
            f"dense oracle supports half_extent <= {MAX_ORACLE_HALF_EXTENT}, "
            f"got {lattice.half_extent}"
        )
    if len(coin_ops) != 3:
        raise ValueError("coin_ops must hold one entry per player")
    L = lattice.size
    eye_pos = np.eye(L, dtype=complex)
    s = _dense_shift_matrix(L)
    dim = 8 * L**3
    u = np.eye(dim, dtype=complex)
    for player, spec in enumerate(coin_ops, start=1):
        if isinstance(spec, tuple) and len(spec) == 4:
            coin_part = np.zeros((8, 8), dtype=complex)
            prev_slot = RING_PREV[player] - 1
            next_slot = RING_NEXT[player] - 1
            branches = {(1, 1): spec[0], (1, 0): spec[1], (0, 1): spec[2], (0, 0): spec[3]}
            for (bp, bn), m in branches.items():
                ops = [None, None, None]
                ops[player - 1] = np.asarray(m, dtype=complex)
                ops[prev_slot] = _P_R if bp else _P_L
                ops[next_slot] = _P_R if bn else _P_L
                coin_part += _kron3(ops)
        else:
            ops = [_I2, _I2, _I2]
            ops[player - 1] = np.asarray(spec, dtype=complex)
            coin_part = _kron3(ops)
        u = np.kron(coin_part, np.kron(eye_pos, np.kron(eye_pos, eye_pos))) @ u
    upos = np.zeros((dim, dim), dtype=complex)
    for c in range(8):
        bits = ((c >> 2) & 1, (c >> 1) & 1, c & 1)
        proj = [_P_R if b else _P_L for b in bits]
        shifts = [s if b else s.conj().T for b in bits]
        upos += np.kron(
            _kron3(proj), np.kron(shifts[0], np.kron(shifts[1], shifts[2]))
        )
    return upos @ u


def dense_step_oracle(state: WalkerState, coin_ops: CoinOpSpec) -> WalkerState:
    """Apply one full round through the explicitly assembled dense matrix.

    Independent of the structured path; intended for small-lattice
    verification. Requires interior support (the cyclic dense shift and
    the structured shift agree exactly away from the boundary).
    """
    u = dense_round_matrix(state.lattice, coin_ops)
    vec = u @ state.tensor.reshape(-1)
    return WalkerState(state.lattice, vec.reshape(state.tensor.shape))
