"""Game schedules and the round-by-round walk engine.

One round applies player 1's coin toss, then player 2's, then player 3's,
then the joint position update. Game A tosses every coin with the same
unconditional unitary; game B tosses each coin with the branch unitary
selected by the live coin states of its ring neighbors.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .coins import (
    CoinParams,
    GameBParams,
    InitialCoin,
    coin_unitary,
    initial_coin_state,
)
from .observables import PayoffSeries, expected_positions
from .state import (
    PositionLattice,
    WalkerState,
    apply_position_update,
    controlled_coin_operator,
    init_walker_state,
    lift_single_coin,
)


@dataclass(frozen=True)
class GameScheme:
    """Game selection per round: pure A, pure B, a random per-round mix,
    or the repeating block A^m B^n."""

    kind: str  # "a" | "b" | "mix" | "periodic"
    m: int = 1
    n: int = 1

    def __post_init__(self) -> None:
        if self.kind not in ("a", "b", "mix", "periodic"):
            raise ValueError(f"unknown scheme kind {self.kind!r}")
        if self.kind == "periodic" and (self.m < 1 or self.n < 1):
            raise ValueError(f"periodic block lengths must be >= 1, got ({self.m},{self.n})")

    @property
    def label(self) -> str:
        if self.kind == "periodic":
            return f"periodic:{self.m},{self.n}"
        return self.kind

    @property
    def is_random(self) -> bool:
        return self.kind == "mix"


PURE_A = GameScheme("a")
PURE_B = GameScheme("b")
RANDOM_MIX = GameScheme("mix")


def periodic(m: int, n: int) -> GameScheme:
    return GameScheme("periodic", m, n)


def parse_scheme(text: str) -> GameScheme:
    """Parse "a", "b", "mix" or "periodic:M,N"."""
    if text in ("a", "b", "mix"):
        return GameScheme(text)
    if text.startswith("periodic:"):
        try:
            m, n = (int(part) for part in text[len("periodic:"):].split(","))
        except ValueError as exc:
            raise ValueError(f"scheme {text!r} is not of the form periodic:M,N") from exc
        return periodic(m, n)
    raise ValueError(f"unknown scheme {text!r}")


@dataclass(frozen=True)
class SimulationConfig:
    initial: InitialCoin
    scheme: GameScheme
    rounds: int = 16
    coin_a: CoinParams = field(default_factory=lambda: CoinParams(0.5))
    game_b: GameBParams = field(default_factory=GameBParams.from_rhos)
    seed: int = 0
    runs: int = 10

    def __post_init__(self) -> None:
        if self.rounds < 1:
            raise ValueError(f"rounds must be >= 1, got {self.rounds}")
        if self.runs < 1:
            raise ValueError(f"runs must be >= 1, got {self.runs}")


def build_schedule(scheme: GameScheme, rounds: int, rng: np.random.Generator) -> list[str]:
    """Round labels "A"/"B" of length ``rounds``.

    Periodic schedules repeat A^m B^n starting with A; the random mix
    draws each round's label independently with probability 1/2.
    """
    if rounds < 1:
        raise ValueError(f"rounds must be >= 1, got {rounds}")
    if scheme.kind == "a":
        return ["A"] * rounds
    if scheme.kind == "b":
        return ["B"] * rounds
    if scheme.kind == "periodic":
        block = ["A"] * scheme.m + ["B"] * scheme.n
        reps = rounds // len(block) + 1
        return (block * reps)[:rounds]
    draws = rng.integers(0, 2, size=rounds)
    return ["A" if d == 0 else "B" for d in draws]


@lru_cache(maxsize=128)
def _round_coin_operator(
    label: str, coin_a: CoinParams, game_b: GameBParams
) -> np.ndarray:
    """Composed 8x8 coin-register operator of one round: the toss of
    player 1, then player 2, then player 3."""
    if label == "A":
        m = coin_unitary(coin_a)
        ops = [lift_single_coin(m, player) for player in (1, 2, 3)]
    elif label == "B":
        mats = tuple(coin_unitary(p) for p in (game_b.ww, game_b.wl, game_b.lw, game_b.ll))
        ops = [controlled_coin_operator(player, *mats) for player in (1, 2, 3)]
    else:
        raise ValueError(f"round label must be 'A' or 'B', got {label!r}")
    return ops[2] @ ops[1] @ ops[0]


def step_round(state: WalkerState, label: str, config: SimulationConfig) -> WalkerState:
    """Advance one round: three sequential tosses, then the position update.

    Equivalent to applying apply_coin_matrix (game A) or
    apply_controlled_coin (game B) for players 1, 2, 3 in turn followed by
    apply_position_update; the three tosses are composed into a single
    coin-register operator before application.
    """
    op = _round_coin_operator(label, config.coin_a, config.game_b)
    flat = state.tensor.reshape(8, -1)
    tossed = WalkerState(state.lattice, (op @ flat).reshape(state.tensor.shape))
    return apply_position_update(tossed)


def _run_indexed(config: SimulationConfig, run_index: int) -> PayoffSeries:
    """One full simulation; the schedule rng is keyed by (seed, run_index)."""
    rng = np.random.default_rng(np.random.SeedSequence((config.seed, run_index)))
    schedule = build_schedule(config.scheme, config.rounds, rng)
    lattice = PositionLattice(config.rounds)
    state = init_walker_state(initial_coin_state(config.initial), lattice)
    per_player = np.zeros((config.rounds + 1, 3))
    for t, label in enumerate(schedule, start=1):
        state = step_round(state, label, config)
        per_player[t] = expected_positions(state)
    return PayoffSeries(per_player=per_player, average_gain=per_player.mean(axis=1))


def run_simulation(config: SimulationConfig) -> PayoffSeries:
    """Run the configured game once; deterministic for a fixed config."""
    return _run_indexed(config, 0)


def run_averaged(config: SimulationConfig) -> PayoffSeries:
    """Mean payoff series over ``config.runs`` independent runs.

    Run k draws its schedule from the seed key (seed, k), so any run is
    reproducible in isolation and the mean does not depend on execution
    order. Standard errors use the sample std across runs (zero for a
    single run or a deterministic schedule).
    """
    series = [_run_indexed(config, k) for k in range(config.runs)]
    per_player = np.mean([s.per_player for s in series], axis=0)
    gains = np.stack([s.average_gain for s in series])
    if config.runs > 1:
        stderr = gains.std(axis=0, ddof=1) / np.sqrt(config.runs)
    else:
        stderr = np.zeros(config.rounds + 1)
    return PayoffSeries(
        per_player=per_player, average_gain=gains.mean(axis=0), stderr=stderr
    )
