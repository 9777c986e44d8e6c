"""Classify an unknown three-coin state as GHZ-like or W-like.

The fair game is a fair test: run the unconditional fair-coin game for a
number of rounds and sum the three expected positions. A GHZ-class input
keeps the summed payoff at zero while a W-class input drives it negative,
so classical addition of the measured payoffs separates the two.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .coins import W, CoinParams, coin_unitary, initial_coin_state
from .observables import expected_position, position_distribution
from .state import (
    PositionLattice,
    apply_coin_matrix,
    apply_position_update,
    init_walker_state,
)


@dataclass(frozen=True)
class DiscriminationResult:
    label: str  # "GHZ" | "W" | "Inconclusive"
    statistic: float
    threshold: float


def _final_state(coin_state: np.ndarray, rounds: int, coin: CoinParams):
    state = init_walker_state(coin_state, PositionLattice(rounds))
    m = coin_unitary(coin)
    for _ in range(rounds):
        for player in (1, 2, 3):
            state = apply_coin_matrix(state, player, m)
        state = apply_position_update(state)
    return state


def _payoff_sum(coin_state: np.ndarray, rounds: int, coin: CoinParams) -> float:
    state = _final_state(coin_state, rounds, coin)
    return sum(expected_position(state, axis) for axis in (1, 2, 3))


def discriminate(
    coin_state: np.ndarray,
    rounds: int = 16,
    mode: str = "expectation",
    shots: int | None = None,
    rng: np.random.Generator | None = None,
    coin: CoinParams = CoinParams(0.5),
) -> DiscriminationResult:
    """Label a coin state from its summed fair-game payoff.

    Expectation mode computes s = sum_i <x_i> exactly; sampled mode draws
    ``shots`` position triples from the final joint distribution and
    averages their coordinate sums. The threshold is half the magnitude
    of the true W state's statistic at the same round count, and the
    label is GHZ for |s| <= threshold, W for s < -threshold, else
    Inconclusive. Meaningful only for inputs promised to be GHZ or W.
    """
    v = np.asarray(coin_state, dtype=complex).reshape(-1)
    if v.shape != (8,):
        raise ValueError(f"coin_state must have 8 components, got {v.shape}")
    if abs(np.linalg.norm(v) - 1.0) > 1e-10:
        raise ValueError("coin_state must have unit norm")
    if rounds < 1:
        raise ValueError(f"rounds must be >= 1, got {rounds}")
    if mode not in ("expectation", "sampled"):
        raise ValueError(f"mode must be 'expectation' or 'sampled', got {mode!r}")

    threshold = abs(_payoff_sum(initial_coin_state(W), rounds, coin)) / 2.0

    if mode == "expectation":
        statistic = _payoff_sum(v, rounds, coin)
    else:
        if shots is None or shots < 1:
            raise ValueError(f"sampled mode requires shots >= 1, got {shots}")
        state = _final_state(v, rounds, coin)
        probs = position_distribution(state).reshape(-1)
        probs = probs / probs.sum()
        if rng is None:
            rng = np.random.default_rng(0)
        coords = state.lattice.coordinates
        L = state.lattice.size
        draws = rng.choice(L**3, size=shots, p=probs)
        x1, x2, x3 = np.unravel_index(draws, (L, L, L))
        statistic = float(np.mean(coords[x1] + coords[x2] + coords[x3]))

    if abs(statistic) <= threshold:
        label = "GHZ"
    elif statistic < -threshold:
        label = "W"
    else:
        label = "Inconclusive"
    return DiscriminationResult(label=label, statistic=statistic, threshold=threshold)
