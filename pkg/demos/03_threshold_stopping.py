"""
Stopping at a target distortion
===============================

While sampling, the sampler tracks a smoothed distortion between each new
measurement and its value predicted just before. A calibration table maps a
desired TD to the level of this signal at which the true TD typically
reaches it; runs then stop once the signal drops below that level.
"""
import numpy as np

from slads import (
    SamplerConfig,
    Threshold,
    beta_for_size,
    build_training_db,
    calibrate_stopping,
    fit_theta,
    slads_run,
    trace_td,
)
from slads.harness.synthetic import grain_corpus

images = grain_corpus(12, 48, 48, grains=6, labels=6, seed=3)
train, test = images[:6], images[6:]
model = fit_theta(build_training_db(train, c=8.0, seed=0))
beta = beta_for_size(48 * 48)

# %%
# Calibration runs sample each training image well past the targets and
# record the stopping signal where the true TD first falls to each level.
targets = (0.02, 0.01, 0.005)
cal = calibrate_stopping(train, model, targets, beta=beta, max_fraction=40.0)
for T, T_tilde in cal.entries:
    print(f"T = {T:<6g} -> threshold {T_tilde:.4f}")

# %%
# Threshold-stopped runs on unseen images. The mean true TD at the stop is
# the quantity that should track the target; single runs scatter around it.
for T in targets:
    stop = Threshold(cal.threshold(T), beta=beta, min_fraction=3.0, max_fraction=40.0)
    tds, fracs = [], []
    for X in test:
        tr = slads_run(X, SamplerConfig(model, stop=stop, beta=beta))
        tds.append(trace_td(X, tr, [len(tr)])[0])
        fracs.append(100.0 * len(tr) / X.size)
    print(f"T = {T:<6g} mean TD {np.mean(tds):.4f} (std {np.std(tds):.4f}), "
          f"mean sampled {np.mean(fracs):.1f}%")
