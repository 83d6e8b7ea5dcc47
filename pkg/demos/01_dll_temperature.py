"""A DLL command register as a thermometer.

Three cooling shots drop the die temperature by 10 K each. The element
delay shrinks, so the loop lowers its command, then drifts back as the die
warms up again.
"""
from pathlib import Path

from delaysca.config import preset
from delaysca.scenarios import run_temp_demo

out = Path(__file__).parent / "out" / "temperature"
cfg = preset("temp_demo")
art = run_temp_demo(cfg, out)
t, cmd = art.result.times, art.result.values

baseline = cmd[t < cfg.temp_first_s].mean()
print(f"{len(cmd)} averaged points, {cfg.temp_readings_per_point} reads each, baseline {baseline:.1f}")

for i in range(cfg.temp_steps):
    t0 = cfg.temp_first_s + i * cfg.temp_spacing_s
    win = (t >= t0) & (t < t0 + cfg.temp_spacing_s)
    trough = cmd[win].min()
    back = cmd[win][-10:].mean()
    print(f"shot {i + 1} at {t0:4.1f} s: trough {trough:7.1f} ({trough - baseline:+.1f} LSB), "
          f"back to {back:7.1f} before the next shot")

# a coarse text plot, one row per second
for sec in range(int(cfg.temp_duration_s)):
    v = cmd[(t >= sec) & (t < sec + 1)].mean()
    print(f"{sec:3d} s {v:8.2f} " + "#" * int(round(2 * (v - baseline + 12))))
print(f"csv: {art.extra['temp_csv']}")
