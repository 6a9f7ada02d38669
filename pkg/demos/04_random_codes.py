"""
Random codes fall short
=======================

Grow a code by drawing random macrobonds until one breaks the threshold, 100
times per setting, and compare with the polynomial construction.
"""

# %%
from geocodes import TrialConfig, l_con, run_experiment, u_ran

print(f"{'mode':>15} {'n':>3} {'lam':>3} {'ave':>7} {'med':>6} {'stddev':>7} {'max':>5} {'l_con':>7} {'u_ran':>6}")
for mode in ("uniform", "one_per_column"):
    for n, lam in [(5, 2), (5, 3), (5, 4), (7, 3), (7, 4), (11, 4), (11, 5)]:
        st = run_experiment(TrialConfig(n, lam, mode=mode, trials=100, master_seed=0))
        print(f"{mode:>15} {n:>3} {lam:>3} {st.ave:>7.1f} {st.med:>6g} {st.stddev:>7.1f} "
              f"{st.max:>5} {l_con(n, lam):>7} {u_ran(n, lam):>6}")

# %%
# Per-trial sizes are kept, e.g. for a histogram.
import numpy as np

st = run_experiment(TrialConfig(5, 4, trials=100, master_seed=0))
counts, edges = np.histogram(st.per_trial_sizes, bins=8)
for c, lo, hi in zip(counts, edges, edges[1:]):
    print(f"{lo:6.0f}-{hi:<6.0f} {'*' * int(c)}")
