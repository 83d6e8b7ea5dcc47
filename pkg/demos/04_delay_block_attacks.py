"""Key recovery through a memory-controller delay-block.

Two targets: an MCU at 200 MHz (about 110 samples per encryption) and an
application core at 650 MHz under Linux (about 20 samples, interrupts).
The faster target is under-sampled, so some lookups fall between DMA reads.
Shifting the encryption by half a sample period moves which bytes suffer.
"""
from pathlib import Path

import numpy as np

from delaysca.config import preset
from delaysca.scenarios import in_window_samples, run_phase_shift_experiment, run_scenario

root = Path(__file__).parent / "out"

mcu = run_scenario(preset("ap_vs_mcu"), root / "ap_vs_mcu")
print(f"200 MHz target: {in_window_samples(preset('ap_vs_mcu'))} samples per encryption, "
      f"{mcu.report.n_recovered}/16 bytes, median rho {np.median(mcu.report.rho_max()):.4f}")

ap = run_scenario(preset("mcu_vs_ap"), root / "mcu_vs_ap")
acq = ap.acquisition
print(f"650 MHz target: {in_window_samples(preset('mcu_vs_ap'))} samples per encryption, "
      f"{acq.retained_fraction:.1%} of {len(acq)} kept by the cycle-count filter, "
      f"{ap.report.n_recovered}/16 bytes, median rho {np.median(ap.report.rho_max()):.4f}")
print("weakest bytes at 650 MHz:", np.argsort(ap.report.rho_max())[:4].tolist())

# a smaller budget without interrupts where single runs fall short
cfg = preset("mcu_vs_ap", interrupt_probability=0.0, n_acq=30_000)
res = run_phase_shift_experiment(cfg, 21, root / "phase_shift")
print(f"\nphase shift at {cfg.n_acq} traces:")
print(f"  unshifted        {res.base.report.n_recovered}/16, weakest {np.argsort(res.base.report.rho_max())[:4].tolist()}")
print(f"  shifted 21 cyc   {res.shifted.report.n_recovered}/16, weakest {np.argsort(res.shifted.report.rho_max())[:4].tolist()}")
print(f"  either run       {res.n_recovered}/16")
print(res.merged_report.read_text())
