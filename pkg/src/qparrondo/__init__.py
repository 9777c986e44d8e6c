"""Three-player cooperative quantum Parrondo games.

A discrete-time quantum walk on three position axes with a three-qubit
coin register: game A tosses every coin with one unconditional unitary,
game B conditions each toss on the ring neighbors' coins, and the joint
position update moves each axis by its player's coin. Includes payoff
observables, paradox detection, a classical Monte Carlo baseline, a
GHZ/W discriminator, and sweep drivers with CSV output.
"""

from .classical import (
    ClassicalSeries,
    ClassicalState,
    CooperativeParams,
    OriginalParams,
    cooperative_step,
    original_step,
    run_classical,
)
from .coins import (
    GHZ,
    SEPARABLE,
    W,
    CoinParams,
    GameBParams,
    InitialCoin,
    coin_unitary,
    entangler_j,
    initial_coin_state,
    j_entangled,
)
from .discriminator import DiscriminationResult, discriminate
from .engine import (
    PURE_A,
    PURE_B,
    RANDOM_MIX,
    GameScheme,
    SimulationConfig,
    build_schedule,
    parse_scheme,
    periodic,
    run_averaged,
    run_simulation,
    step_round,
)
from .observables import (
    GameVerdict,
    ParadoxReport,
    PayoffSeries,
    Verdict,
    average_capital_gain,
    classify_game,
    detect_paradox,
    expected_position,
    position_distribution,
)
from .state import (
    BoundaryOverflowError,
    PositionLattice,
    WalkerState,
    apply_coin_matrix,
    apply_controlled_coin,
    apply_position_update,
    dense_round_matrix,
    dense_step_oracle,
    init_walker_state,
    state_norm,
)
from .sweeps import (
    MapRecord,
    SweepRecord,
    emit_map_csv,
    emit_series_csv,
    emit_sweep_csv,
    sweep_entanglement,
    sweep_phase_map,
    sweep_rho4,
)

__all__ = [
    "BoundaryOverflowError",
    "ClassicalSeries",
    "ClassicalState",
    "CoinParams",
    "CooperativeParams",
    "DiscriminationResult",
    "GHZ",
    "GameBParams",
    "GameScheme",
    "GameVerdict",
    "InitialCoin",
    "MapRecord",
    "OriginalParams",
    "PURE_A",
    "PURE_B",
    "ParadoxReport",
    "PayoffSeries",
    "PositionLattice",
    "RANDOM_MIX",
    "SEPARABLE",
    "SimulationConfig",
    "SweepRecord",
    "Verdict",
    "W",
    "WalkerState",
    "apply_coin_matrix",
    "apply_controlled_coin",
    "apply_position_update",
    "average_capital_gain",
    "build_schedule",
    "classify_game",
    "coin_unitary",
    "cooperative_step",
    "dense_round_matrix",
    "dense_step_oracle",
    "detect_paradox",
    "discriminate",
    "emit_map_csv",
    "emit_series_csv",
    "emit_sweep_csv",
    "entangler_j",
    "expected_position",
    "init_walker_state",
    "initial_coin_state",
    "j_entangled",
    "original_step",
    "parse_scheme",
    "periodic",
    "position_distribution",
    "run_averaged",
    "run_classical",
    "run_simulation",
    "state_norm",
    "step_round",
    "sweep_entanglement",
    "sweep_phase_map",
    "sweep_rho4",
]

__version__ = "0.1.0"
