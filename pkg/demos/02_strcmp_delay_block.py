"""A delay-block sees a busy core.

The victim alternates empty loops with string compares. Averaged over
5000 runs the decoded delay steps up while strcmp runs: the heavier load
pulls the rail down and the line slows.
"""
from pathlib import Path

from delaysca.config import preset
from delaysca.scenarios import run_strcmp_demo

out = Path(__file__).parent / "out" / "strcmp"
cfg = preset("strcmp_demo")
art = run_strcmp_demo(cfg, out)
res = art.result

print(f"idle   {res.idle_mean:8.3f} +- {res.idle_se:.4f}")
print(f"strcmp {res.strcmp_mean:8.3f} +- {res.strcmp_se:.4f}")
print(f"separation: {res.separation_se:.0f} standard errors")

# the averaged trace, every 8th DMA sample
avg = res.average
lo, hi = avg.min(), avg.max()
for i in range(0, len(avg), 8):
    label = {0: "loop  ", 1: "strcmp", -1: "      "}[int(res.phase[i])]
    print(f"{i:4d} {label} {avg[i]:7.3f} " + "#" * int(round(40 * (avg[i] - lo) / (hi - lo))))
print(f"csv: {art.extra['strcmp_csv']}")
