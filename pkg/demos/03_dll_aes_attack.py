"""Key recovery through the DLL command register.

The attacker reads the command of a DDR DLL at 16 MHz while a neighbouring
core runs T-table AES at 667 MHz. Each encryption spans 21 samples. CPA on
the first-round T-table words recovers the key.
"""
from pathlib import Path

import numpy as np

from delaysca.config import preset
from delaysca.scenarios import in_window_samples, run_scenario

out = Path(__file__).parent / "out" / "ap_vs_ap"
cfg = preset("ap_vs_ap")
print(f"{in_window_samples(cfg)} samples per encryption, {cfg.n_acq} encryptions")

art = run_scenario(cfg, out)
rep = art.report
print(f"acquired and attacked in {art.compute_s:.0f} s")
print(f"true key {cfg.true_key}")
print(f"best key {rep.best_key.hex()}  ({rep.n_recovered}/16 bytes at rank 1)")

# the key emerges progressively; the 4/sqrt(n) line is the noise envelope
print("\ntraces   bytes at rank 1   median rho   envelope")
for n in sorted(rep.progressive):
    ranks = rep.progressive_ranks[n]
    rho = np.median([rep.progressive[n][b, cfg.key_bytes[b]] for b in range(16)])
    print(f"{n:7d}   {int((ranks == 1).sum()):14d}   {rho:10.4f}   {4 / np.sqrt(n):8.4f}")

print(f"\nleak samples per byte: {[rep.leak_sample(b) for b in range(16)]}")
print(f"artifacts in {out}")
