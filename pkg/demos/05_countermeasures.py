"""What stops the DLL attack.

Same budget as the undefended attack, three variants: random stalls in the
victim's first round, a 10 kHz cap on sensor reads, and clock jitter on the
sensor.
"""
from pathlib import Path

from delaysca.config import preset
from delaysca.scenarios import run_scenario

root = Path(__file__).parent / "out" / "countermeasures"
budget = 100_000

for name, label, overrides in [
    ("none", "no countermeasure", {}),
    ("random_delays", "random delays (+-4 samples)", {"random_delays": True}),
    ("throttle", "sensor reads capped at 10 kHz", {"throttle": True}),
    ("jitter", "sensor clock jitter", {"jitter": True}),
]:
    cfg = preset("ap_vs_ap", n_acq=budget, **overrides)
    art = run_scenario(cfg, root / name)
    rep = art.report
    print(f"{label:32s} {rep.n_recovered:2d}/16 bytes at rank 1, worst rank {int(rep.ranks.max()):3d}")
