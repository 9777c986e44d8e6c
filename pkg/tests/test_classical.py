import numpy as np
import pytest

from qparrondo import (
    PURE_A,
    PURE_B,
    RANDOM_MIX,
    ClassicalState,
    CooperativeParams,
    OriginalParams,
    cooperative_step,
    original_step,
    run_classical,
)


def test_original_defaults_derive_from_epsilon():
    p = OriginalParams(epsilon=0.005)
    assert p.win_a == pytest.approx(0.495)
    assert p.win_b1 == pytest.approx(0.095)
    assert p.win_b2 == pytest.approx(0.745)


def test_original_params_validation():
    with pytest.raises(ValueError, match="epsilon"):
        OriginalParams(epsilon=-0.1)
    with pytest.raises(ValueError, match="p1"):
        OriginalParams(p1=1.4)


def test_original_step_game_a_sure_win():
    rng = np.random.default_rng(0)
    params = OriginalParams(epsilon=0.0, p=1.0)
    assert original_step(5, "A", params, rng) == 6


def test_original_step_selects_coin_by_capital_mod_3():
    rng = np.random.default_rng(0)
    sure_b1 = OriginalParams(p1=1.0, p2=0.0, epsilon=0.0)
    assert original_step(3, "B", sure_b1, rng) == 4  # multiple of 3 -> B1
    assert original_step(-3, "B", sure_b1, rng) == -2
    assert original_step(4, "B", sure_b1, rng) == 3  # otherwise -> B2


def cooperative(p1=0.5, p2=0.5, p3=0.5, p4=0.5, pa=0.5, **kw):
    return CooperativeParams(pa=pa, p1=p1, p2=p2, p3=p3, p4=p4, **kw)


def test_cooperative_params_validation():
    with pytest.raises(ValueError, match="n_players"):
        cooperative(n_players=2)
    with pytest.raises(ValueError, match="p4"):
        cooperative(p4=-0.2)
    with pytest.raises(ValueError, match="update_order"):
        cooperative(update_order="sideways")


def test_cooperative_step_all_winners_use_p1():
    params = cooperative(p1=1.0, p2=0.0, p3=0.0, p4=0.0)
    state = ClassicalState(np.zeros(3, dtype=int), np.ones(3, dtype=bool))
    rng = np.random.default_rng(1)
    out = cooperative_step(state, "B", params, rng)
    assert np.all(out.capitals == 1)
    assert np.all(out.winner_flags)
    assert out.time == 1


def test_cooperative_step_sure_win_all_branches():
    params = cooperative(p1=1.0, p2=1.0, p3=1.0, p4=1.0)
    state = ClassicalState(np.zeros(3, dtype=int), np.zeros(3, dtype=bool))
    rng = np.random.default_rng(2)
    for _ in range(5):
        state = cooperative_step(state, "B", params, rng)
    assert np.all(state.capitals == 5)


def test_cooperative_step_sequential_reads_live_flags():
    # p-branch of player 2 depends on player 1's fresh result when
    # sequential, on the round-start snapshot when synchronous
    params_seq = cooperative(p1=1.0, p2=1.0, p3=0.0, p4=0.0)
    params_syn = cooperative(p1=1.0, p2=1.0, p3=0.0, p4=0.0, update_order="synchronous")
    # start: player1 loser, players 2,3 winners; player 1 sees (p3 branch
    # prev=loser? prev of 1 is 3=winner, next=2 winner) -> p1=1 -> wins
    start = ClassicalState(np.zeros(3, dtype=int), np.array([False, True, True]))
    rng = np.random.default_rng(0)
    seq = cooperative_step(start, "B", params_seq, rng)
    # sequential: player 2 sees prev=player1 just won -> p1/p2 branch -> wins
    assert seq.capitals[1] == 1
    rng = np.random.default_rng(0)
    syn = cooperative_step(start, "B", params_syn, rng)
    # synchronous: player 2 sees snapshot prev=loser, next=winner -> p3=0 -> loses
    assert syn.capitals[1] == -1


def test_cooperative_game_a_is_fair():
    params = cooperative(pa=0.5)
    series = run_classical(params, PURE_A, rounds=200, trials=500, seed=5)
    assert abs(series.final_gain) <= 3 * series.final_stderr + 1e-12


def test_run_classical_deterministic():
    params = OriginalParams()
    a = run_classical(params, RANDOM_MIX, rounds=100, trials=50, seed=3)
    b = run_classical(params, RANDOM_MIX, rounds=100, trials=50, seed=3)
    assert np.array_equal(a.mean_gain, b.mean_gain)
    assert np.array_equal(a.stderr, b.stderr)


def test_run_classical_matches_stepwise_reference():
    # the vectorized runner must replay exactly what the scalar step
    # functions produce from the same per-trial streams
    params = cooperative(p1=0.9, p2=0.3, p3=0.6, p4=0.1, pa=0.45)
    rounds, trials, seed = 7, 5, 21
    series = run_classical(params, PURE_B, rounds=rounds, trials=trials, seed=seed)
    gains = np.zeros((trials, rounds + 1))
    for k in range(trials):
        rng = np.random.default_rng(np.random.SeedSequence((seed, k)))
        flags = rng.random(3) < 0.5
        uniforms = rng.random((rounds, 3))
        state = ClassicalState(np.zeros(3, dtype=int), flags)
        for t in range(rounds):
            draws = iter(uniforms[t])

            class Replay:
                def random(self):
                    return next(draws)

            state = cooperative_step(state, "B", params, Replay())
            gains[k, t + 1] = state.capitals.mean()
    assert np.max(np.abs(series.mean_gain - gains.mean(axis=0))) < 1e-12


def test_capital_parity():
    params = OriginalParams()
    rng = np.random.default_rng(0)
    capital = 0
    for t in range(1, 50):
        capital = original_step(capital, "B", params, rng)
        assert (capital - t) % 2 == 0


def test_equal_b_coins_reduce_to_biased_walk():
    p = 0.6
    params = OriginalParams(epsilon=0.0, p1=p, p2=p)
    rounds, trials = 2000, 400
    series = run_classical(params, PURE_B, rounds=rounds, trials=trials, seed=11)
    expect = (2 * p - 1) * rounds
    assert abs(series.final_gain - expect) <= 3 * series.final_stderr


def test_original_losing_b_and_winning_mix_smoke():
    params = OriginalParams(epsilon=0.005)
    b = run_classical(params, PURE_B, rounds=2000, trials=400, seed=17)
    assert b.final_gain < -3 * b.final_stderr
    mix = run_classical(params, RANDOM_MIX, rounds=2000, trials=400, seed=17)
    assert mix.final_gain > 3 * mix.final_stderr


def test_run_classical_validation():
    with pytest.raises(ValueError, match="trials"):
        run_classical(OriginalParams(), PURE_A, rounds=10, trials=0)
    with pytest.raises(ValueError, match="rounds"):
        run_classical(OriginalParams(), PURE_A, rounds=0, trials=1)
