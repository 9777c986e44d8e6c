"""Command-line interface.

Subcommands: run, sweep-rho4, sweep-phase, sweep-omega, discriminate,
classical. Shared options may also come from a JSON config file with the
same field names as the flags; explicit flags override file values.
"""
from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from .classical import CooperativeParams, OriginalParams, run_classical
from .coins import (
    GHZ,
    SEPARABLE,
    W,
    CoinParams,
    GameBParams,
    InitialCoin,
    initial_coin_state,
    j_entangled,
)
from .discriminator import discriminate
from .engine import (
    PURE_A,
    PURE_B,
    SimulationConfig,
    parse_scheme,
    run_averaged,
    run_simulation,
)
from .sweeps import (
    DEFAULT_OMEGA_GRID,
    DEFAULT_PHASE_STEP,
    DEFAULT_RHO4_GRID,
    DEFAULT_SCHEMES,
    emit_classical_csv,
    emit_map_csv,
    emit_series_csv,
    emit_sweep_csv,
    sweep_entanglement,
    sweep_phase_map,
    sweep_rho4,
)

HALF_PI = math.pi / 2

SHARED_DEFAULTS = {
    "initial": "ghz",
    "omega": HALF_PI,
    "scheme": "a",
    "rounds": 16,
    "rho0": 0.5,
    "rho1": 0.5,
    "rho2": 0.5,
    "rho3": 0.5,
    "rho4": 0.5,
    "theta": HALF_PI,
    "phi": HALF_PI,
    "seed": 0,
    "runs": 10,
}

CLASSICAL_DEFAULTS = {
    "mode": "original",
    "players": 3,
    "pa": None,
    "p1": None,
    "p2": None,
    "p3": None,
    "p4": None,
    "epsilon": 0.005,
    "trials": 1000,
}


def _add_shared(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", help="JSON file with the same field names as the flags")
    parser.add_argument("--initial", choices=["ghz", "w", "separable", "j"])
    parser.add_argument("--omega", type=float, help="entanglement angle for --initial j")
    parser.add_argument("--scheme", help="a, b, mix or periodic:M,N")
    parser.add_argument("--rounds", type=int)
    for k in range(5):
        parser.add_argument(f"--rho{k}", type=float)
    parser.add_argument("--theta", type=float)
    parser.add_argument("--phi", type=float)
    parser.add_argument("--seed", type=int)
    parser.add_argument("--runs", type=int)
    parser.add_argument("--out", help="output file path")


def _merge(defaults: dict, args: argparse.Namespace) -> tuple[dict, set]:
    """defaults <- config file <- explicit flags; also reports which keys
    were set explicitly (by either source)."""
    merged = dict(defaults)
    explicit = set()
    config_path = getattr(args, "config", None)
    if config_path:
        with open(config_path) as fh:
            loaded = json.load(fh)
        unknown = set(loaded) - set(defaults)
        if unknown:
            raise ValueError(f"unknown config fields: {sorted(unknown)}")
        merged.update(loaded)
        explicit |= set(loaded)
    for key in defaults:
        value = getattr(args, key.replace("-", "_"), None)
        if value is not None:
            merged[key] = value
            explicit.add(key)
    return merged, explicit


def _initial_coin(opts: dict) -> InitialCoin:
    kind = opts["initial"]
    if kind == "ghz":
        return GHZ
    if kind == "w":
        return W
    if kind == "separable":
        return SEPARABLE
    return j_entangled(float(opts["omega"]))


def _sim_config(opts: dict) -> SimulationConfig:
    return SimulationConfig(
        initial=_initial_coin(opts),
        scheme=parse_scheme(opts["scheme"]),
        rounds=int(opts["rounds"]),
        coin_a=CoinParams(float(opts["rho0"]), float(opts["theta"]), float(opts["phi"])),
        game_b=GameBParams.from_rhos(
            float(opts["rho1"]), float(opts["rho2"]), float(opts["rho3"]),
            float(opts["rho4"]), float(opts["theta"]), float(opts["phi"]),
        ),
        seed=int(opts["seed"]),
        runs=int(opts["runs"]),
    )


def _parse_values(text: str, name: str) -> list[float]:
    try:
        return [float(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise ValueError(f"{name} must be a comma-separated list of numbers") from exc


def _parse_schemes(text: str):
    # comma separates schemes, but periodic:M,N itself contains one;
    # re-attach a bare block length to a preceding incomplete periodic
    parts = []
    for part in (p.strip() for p in text.split(",")):
        if not part:
            continue
        if (
            parts
            and parts[-1].startswith("periodic:")
            and "," not in parts[-1]
            and part.isdigit()
        ):
            parts[-1] += "," + part
        else:
            parts.append(part)
    return tuple(parse_scheme(part) for part in parts)


def _sweep_schemes(args: argparse.Namespace, opts: dict, explicit: set):
    """Scheme columns for a sweep: --schemes wins; an explicitly chosen
    --scheme sweeps that scheme (pure games included for paradox flags);
    otherwise the default four."""
    if getattr(args, "schemes", None):
        return _parse_schemes(args.schemes)
    if "scheme" in explicit:
        requested = parse_scheme(opts["scheme"])
        if requested in (PURE_A, PURE_B):
            return (PURE_A, PURE_B)
        return (PURE_A, PURE_B, requested)
    return DEFAULT_SCHEMES


def _cmd_run(args: argparse.Namespace) -> int:
    opts, _ = _merge(SHARED_DEFAULTS, args)
    config = _sim_config(opts)
    series = run_averaged(config) if config.scheme.is_random else run_simulation(config)
    if args.out:
        emit_series_csv(series, args.out)
        print(f"wrote {series.rounds + 1} rows to {args.out}")
    else:
        print("round,gain_avg")
        for t, g in enumerate(series.average_gain):
            print(f"{t},{g:.12g}")
    print(f"final average gain: {series.final_gain:.12g}")
    return 0


def _cmd_sweep_rho4(args: argparse.Namespace) -> int:
    opts, explicit = _merge(SHARED_DEFAULTS, args)
    base = _sim_config(opts)
    values = _parse_values(args.values, "--values") if args.values else DEFAULT_RHO4_GRID
    schemes = _sweep_schemes(args, opts, explicit)
    records = sweep_rho4(base, values, schemes, workers=args.workers)
    if args.out:
        emit_sweep_csv(records, args.out, value_name="rho4")
        print(f"wrote {len(records)} rows to {args.out}")
    else:
        for r in records:
            print(f"rho4={r.value:g} {r.scheme}: gain={r.gain:+.6f} "
                  f"{r.verdict} paradox={int(r.paradox)}")
    return 0


def _cmd_sweep_phase(args: argparse.Namespace) -> int:
    opts, explicit = _merge(SHARED_DEFAULTS, args)
    base = _sim_config(opts)
    schemes = _sweep_schemes(args, opts, explicit)
    step = args.step if args.step is not None else DEFAULT_PHASE_STEP
    records = sweep_phase_map(base, step, schemes, workers=args.workers)
    if args.out:
        emit_map_csv(records, args.out)
        print(f"wrote {len(records)} rows to {args.out}")
    else:
        for r in records[:32]:
            print(f"theta={r.theta:.4f} phi={r.phi:.4f} {r.scheme}: {r.gain:+.6f}")
        if len(records) > 32:
            print(f"... {len(records) - 32} more rows (use --out to keep them)")
    return 0


def _cmd_sweep_omega(args: argparse.Namespace) -> int:
    opts, explicit = _merge(SHARED_DEFAULTS, args)
    base = _sim_config(opts)
    omegas = _parse_values(args.omegas, "--omegas") if args.omegas else DEFAULT_OMEGA_GRID
    schemes = _sweep_schemes(args, opts, explicit)
    records = sweep_entanglement(base, omegas, schemes, workers=args.workers)
    if args.out:
        emit_sweep_csv(records, args.out, value_name="omega")
        print(f"wrote {len(records)} rows to {args.out}")
    else:
        for r in records:
            print(f"omega={r.value:.4f} {r.scheme}: gain={r.gain:+.6f} "
                  f"{r.verdict} paradox={int(r.paradox)}")
    return 0


def _cmd_discriminate(args: argparse.Namespace) -> int:
    opts, _ = _merge(SHARED_DEFAULTS, args)
    coin_state = initial_coin_state(_initial_coin(opts))
    rng = np.random.default_rng(int(opts["seed"]))
    result = discriminate(
        coin_state,
        rounds=int(opts["rounds"]),
        mode=args.mode,
        shots=args.shots if args.mode == "sampled" else None,
        rng=rng,
    )
    print(
        f"label={result.label} statistic={result.statistic:.12g} "
        f"threshold={result.threshold:.12g}"
    )
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(
                {
                    "label": result.label,
                    "statistic": result.statistic,
                    "threshold": result.threshold,
                },
                fh,
                indent=2,
            )
            fh.write("\n")
    return 0


def _cmd_classical(args: argparse.Namespace) -> int:
    opts, _ = _merge({**SHARED_DEFAULTS, **CLASSICAL_DEFAULTS}, args)
    scheme = parse_scheme(opts["scheme"])
    if opts["mode"] == "original":
        params = OriginalParams(
            epsilon=float(opts["epsilon"]),
            p=opts["pa"],
            p1=opts["p1"],
            p2=opts["p2"],
        )
    else:
        missing = [k for k in ("pa", "p1", "p2", "p3", "p4") if opts[k] is None]
        if missing:
            raise ValueError(f"cooperative mode requires --{', --'.join(missing)}")
        params = CooperativeParams(
            pa=float(opts["pa"]),
            p1=float(opts["p1"]),
            p2=float(opts["p2"]),
            p3=float(opts["p3"]),
            p4=float(opts["p4"]),
            n_players=int(opts["players"]),
        )
    series = run_classical(
        params, scheme, rounds=int(opts["rounds"]), trials=int(opts["trials"]),
        seed=int(opts["seed"]),
    )
    if args.out:
        emit_classical_csv(series, args.out)
        print(f"wrote {series.rounds + 1} rows to {args.out}")
    print(
        f"final mean gain: {series.final_gain:.12g} "
        f"(stderr {series.final_stderr:.3g}, {opts['trials']} trials)"
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qparrondo",
        description="Three-player cooperative quantum Parrondo games on a "
        "three-axis discrete-time quantum walk",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="single simulation, series CSV output")
    _add_shared(p_run)
    p_run.set_defaults(func=_cmd_run)

    p_rho = sub.add_parser("sweep-rho4", help="sweep the loser-loser branch rho4")
    _add_shared(p_rho)
    p_rho.add_argument("--values", help="comma-separated rho4 values (default 0.1..0.9)")
    p_rho.add_argument("--schemes", help="comma-separated schemes (default a,b,periodic:2,2,mix)")
    p_rho.add_argument("--workers", type=int, default=None)
    p_rho.set_defaults(func=_cmd_sweep_rho4)

    p_phase = sub.add_parser("sweep-phase", help="map final gain over the (theta, phi) grid")
    _add_shared(p_phase)
    p_phase.add_argument("--step", type=float, help="grid step in radians (default pi/8)")
    p_phase.add_argument("--schemes", help="comma-separated schemes")
    p_phase.add_argument("--workers", type=int, default=None)
    p_phase.set_defaults(func=_cmd_sweep_phase)

    p_omega = sub.add_parser("sweep-omega", help="sweep the initial entanglement angle")
    _add_shared(p_omega)
    p_omega.add_argument("--omegas", help="comma-separated omega values (default 0..pi/2)")
    p_omega.add_argument("--schemes", help="comma-separated schemes")
    p_omega.add_argument("--workers", type=int, default=None)
    p_omega.set_defaults(func=_cmd_sweep_omega)

    p_disc = sub.add_parser("discriminate", help="label a coin state as GHZ-like or W-like")
    _add_shared(p_disc)
    p_disc.add_argument("--mode", choices=["expectation", "sampled"], default="expectation")
    p_disc.add_argument("--shots", type=int, default=100_000)
    p_disc.set_defaults(func=_cmd_discriminate)

    p_cls = sub.add_parser("classical", help="Monte Carlo classical baseline")
    _add_shared(p_cls)
    p_cls.add_argument("--mode", choices=["original", "cooperative"])
    p_cls.add_argument("--players", type=int)
    p_cls.add_argument("--pa", type=float)
    for k in range(1, 5):
        p_cls.add_argument(f"--p{k}", type=float)
    p_cls.add_argument("--epsilon", type=float)
    p_cls.add_argument("--trials", type=int)
    p_cls.set_defaults(func=_cmd_classical)

    return parser


def cli_main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(cli_main(sys.argv[1:]))
