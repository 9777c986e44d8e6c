"""Monte Carlo baselines: the original capital-dependent Parrondo pair and
the cooperative neighbor-conditioned variant on a ring of players.

Trial k of a run draws every random number from a generator seeded by the
key (seed, k), so any single trajectory is reproducible in isolation and
aggregate results do not depend on execution order or chunking. Within a
trial the stream is consumed in a fixed order: initial winner flags
(cooperative only), then schedule labels (random mix only), then one win
uniform per play.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .engine import GameScheme, build_schedule


@dataclass(frozen=True)
class OriginalParams:
    """Single-player capital-dependent pair of games.

    Game A wins with probability ``p`` (default 1/2 - epsilon). Game B
    uses coin B1 with win probability ``p1`` when the capital is a
    multiple of 3 and coin B2 with probability ``p2`` otherwise; the
    defaults are 1/10 - epsilon and 3/4 - epsilon.
    """

    epsilon: float = 0.005
    p: float | None = None
    p1: float | None = None
    p2: float | None = None

    def __post_init__(self) -> None:
        if self.epsilon < 0:
            raise ValueError(f"epsilon must be >= 0, got {self.epsilon}")
        for name, value in (("p", self.win_a), ("p1", self.win_b1), ("p2", self.win_b2)):
            if not 0.0 <= value <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1], got {value}")

    @property
    def win_a(self) -> float:
        return 0.5 - self.epsilon if self.p is None else self.p

    @property
    def win_b1(self) -> float:
        return 0.1 - self.epsilon if self.p1 is None else self.p1

    @property
    def win_b2(self) -> float:
        return 0.75 - self.epsilon if self.p2 is None else self.p2


@dataclass(frozen=True)
class CooperativeParams:
    """Ring of players whose game-B win probability depends on whether the
    two neighbors won their last game.

    ``p1`` applies when both neighbors are winners, ``p2`` when the
    predecessor won and the successor lost, ``p3`` for the reverse and
    ``p4`` when both lost. No defaults: the branch probabilities are
    required inputs.
    """

    pa: float
    p1: float
    p2: float
    p3: float
    p4: float
    n_players: int = 3
    update_order: str = "sequential"  # or "synchronous"
    initial_flags: str = "random"  # "random" | "winners" | "losers"

    def __post_init__(self) -> None:
        if self.n_players < 3:
            raise ValueError(f"n_players must be >= 3, got {self.n_players}")
        for name in ("pa", "p1", "p2", "p3", "p4"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1], got {value}")
        if self.update_order not in ("sequential", "synchronous"):
            raise ValueError(f"unknown update_order {self.update_order!r}")
        if self.initial_flags not in ("random", "winners", "losers"):
            raise ValueError(f"unknown initial_flags {self.initial_flags!r}")


@dataclass
class ClassicalState:
    capitals: np.ndarray  # int, one per player
    winner_flags: np.ndarray  # bool, one per player
    time: int = 0


def original_step(
    capital: int, label: str, params: OriginalParams, rng: np.random.Generator
) -> int:
    """One play of the original pair: +1 on a win, -1 on a loss."""
    if label == "A":
        p = params.win_a
    else:
        p = params.win_b1 if capital % 3 == 0 else params.win_b2
    return capital + (1 if rng.random() < p else -1)


def _branch_probability(params: CooperativeParams, prev_won: bool, next_won: bool) -> float:
    if prev_won and next_won:
        return params.p1
    if prev_won:
        return params.p2
    if next_won:
        return params.p3
    return params.p4


def cooperative_step(
    state: ClassicalState,
    label: str,
    params: CooperativeParams,
    rng: np.random.Generator,
) -> ClassicalState:
    """Every player plays once in index order.

    Game B selects the branch probability from the ring neighbors' winner
    flags; with ``update_order="sequential"`` the flags are read live as
    each player finishes, with ``"synchronous"`` from a snapshot taken at
    the start of the round.
    """
    n = params.n_players
    capitals = state.capitals.copy()
    flags = state.winner_flags.copy()
    snapshot = state.winner_flags.copy()
    source = flags if params.update_order == "sequential" else snapshot
    for i in range(n):
        if label == "A":
            p = params.pa
        else:
            p = _branch_probability(params, source[(i - 1) % n], source[(i + 1) % n])
        won = rng.random() < p
        capitals[i] += 1 if won else -1
        flags[i] = won
    return ClassicalState(capitals, flags, state.time + 1)


@dataclass
class ClassicalSeries:
    """Per-round mean average capital gain over trials, with standard errors."""

    mean_gain: np.ndarray  # (rounds + 1,)
    stderr: np.ndarray  # (rounds + 1,)

    @property
    def rounds(self) -> int:
        return len(self.mean_gain) - 1

    @property
    def final_gain(self) -> float:
        return float(self.mean_gain[-1])

    @property
    def final_stderr(self) -> float:
        return float(self.stderr[-1])


def _trial_streams(
    params: OriginalParams | CooperativeParams,
    scheme: GameScheme,
    rounds: int,
    seed: int,
    trial_indices: range,
) -> tuple[np.ndarray, np.ndarray, np.ndarray | None]:
    """Pre-draw per-trial randomness for one chunk of trials."""
    label_b = np.zeros((len(trial_indices), rounds), dtype=bool)
    flags0 = None
    cooperative = isinstance(params, CooperativeParams)
    n = params.n_players if cooperative else 1
    uniforms = np.empty((len(trial_indices), rounds, n))
    if cooperative:
        flags0 = np.empty((len(trial_indices), n), dtype=bool)
    for row, k in enumerate(trial_indices):
        rng = np.random.default_rng(np.random.SeedSequence((seed, k)))
        if cooperative:
            if params.initial_flags == "random":
                flags0[row] = rng.random(n) < 0.5
            else:
                flags0[row] = params.initial_flags == "winners"
        labels = build_schedule(scheme, rounds, rng)
        label_b[row] = [lab == "B" for lab in labels]
        uniforms[row] = rng.random((rounds, n))
    return label_b, uniforms, flags0


def run_classical(
    params: OriginalParams | CooperativeParams,
    scheme: GameScheme,
    rounds: int,
    trials: int,
    seed: int = 0,
) -> ClassicalSeries:
    """Monte Carlo over independent trajectories.

    Returns the per-round mean of the player-averaged capital gain and
    its standard error across trials.
    """
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    if rounds < 1:
        raise ValueError(f"rounds must be >= 1, got {rounds}")
    cooperative = isinstance(params, CooperativeParams)
    n = params.n_players if cooperative else 1
    gain_sum = np.zeros(rounds + 1)
    gain_sq_sum = np.zeros(rounds + 1)
    chunk = max(1, min(trials, 10_000_000 // (rounds * n)))
    for start in range(0, trials, chunk):
        idx = range(start, min(start + chunk, trials))
        label_b, uniforms, flags0 = _trial_streams(params, scheme, rounds, seed, idx)
        m = len(idx)
        capitals = np.zeros((m, n), dtype=np.int64)
        flags = flags0 if cooperative else None
        for t in range(rounds):
            in_b = label_b[:, t]
            if cooperative:
                snapshot = flags.copy()
                source = flags if params.update_order == "sequential" else snapshot
                for i in range(n):
                    prev_won = source[:, (i - 1) % n]
                    next_won = source[:, (i + 1) % n]
                    p_b = np.where(
                        prev_won & next_won,
                        params.p1,
                        np.where(
                            prev_won, params.p2, np.where(next_won, params.p3, params.p4)
                        ),
                    )
                    p = np.where(in_b, p_b, params.pa)
                    won = uniforms[:, t, i] < p
                    capitals[:, i] += np.where(won, 1, -1)
                    flags[:, i] = won
            else:
                p_b = np.where(capitals[:, 0] % 3 == 0, params.win_b1, params.win_b2)
                p = np.where(in_b, p_b, params.win_a)
                won = uniforms[:, t, 0] < p
                capitals[:, 0] += np.where(won, 1, -1)
            gains = capitals.mean(axis=1)
            gain_sum[t + 1] += gains.sum()
            gain_sq_sum[t + 1] += (gains**2).sum()
    mean = gain_sum / trials
    if trials > 1:
        var = (gain_sq_sum - gain_sum**2 / trials) / (trials - 1)
        stderr = np.sqrt(np.maximum(var, 0.0) / trials)
    else:
        stderr = np.zeros(rounds + 1)
    return ClassicalSeries(mean_gain=mean, stderr=stderr)
