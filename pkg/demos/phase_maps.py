"""
Phase-angle maps
================

All five coins share one (theta, phi) phase pair. Mapping the final gain
over the phase plane shows which games react to the phases at all: from
the GHZ state the unconditional game stays exactly fair everywhere and
game B stays losing everywhere, while from the W state both pure games
are constant over the whole plane.

The full map uses a pi/8 step (16 x 16 points). This demo runs a pi/4
grid to stay quick; pass --full for the pi/8 resolution.

Run: python demos/phase_maps.py [--full]   (writes demo_out/phase_map_<state>.csv)
"""
import math
import pathlib
import sys

import numpy as np

from qparrondo import (
    GHZ,
    PURE_A,
    PURE_B,
    W,
    GameBParams,
    SimulationConfig,
    emit_map_csv,
    sweep_phase_map,
)

step = math.pi / 8 if "--full" in sys.argv[1:] else math.pi / 4
OUT = pathlib.Path("demo_out")
OUT.mkdir(exist_ok=True)

for name, initial in [("ghz", GHZ), ("w", W)]:
    base = SimulationConfig(
        initial=initial,
        scheme=PURE_A,
        game_b=GameBParams.from_rhos(rho4=0.7),
        seed=0,
        runs=10,
    )
    records = sweep_phase_map(base, step=step, schemes=(PURE_A, PURE_B), workers=4)
    path = OUT / f"phase_map_{name}.csv"
    emit_map_csv(records, path)

    a = np.array([r.gain for r in records if r.scheme == "a"])
    b = np.array([r.gain for r in records if r.scheme == "b"])
    print(f"--- initial state: {name} ({int(math.tau / step)}x{int(math.tau / step)} grid)")
    print(f"  game A: min {a.min():+.6f}  max {a.max():+.6f}  spread {a.max() - a.min():.2e}")
    print(f"  game B: min {b.min():+.6f}  max {b.max():+.6f}  spread {b.max() - b.min():.2e}")
    print(f"  (written to {path})")
