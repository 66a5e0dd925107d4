"""
=============================
Simulation as a sanity check
=============================

The discrete-event simulator runs M/M/m with FIFO service and M/M/m/m with
lost calls. Its estimates should bracket the analytic values.
"""

# %%
# Setup
# -----
from erlangkit import QueueSpec, SimConfig, erlang_b, simulate, waiting_time

# %%
# Waiting times for the reference configurations
# ----------------------------------------------
for m in (1, 2, 3, 4, 8, 16, 32):
    spec = QueueSpec.from_traffic(m, 0.75 * m)
    est = simulate(SimConfig(spec, seed=2024))
    w = waiting_time(spec)
    print(f"m={m:2d}  simulated W={est.mean_w:.5f} +- {est.ci_half_width:.5f}"
          f"  analytic={w:.5f}  {'ok' if est.contains_w(w) else 'miss'}")

# %%
# Lost calls
# ----------
# The fraction of blocked arrivals and the time-averaged probability that all
# servers are busy both estimate Erlang B (Poisson arrivals see time averages).
for m, a in ((1, 0.75), (2, 1.5), (4, 3.0), (8, 6.0)):
    est = simulate(SimConfig(QueueSpec.from_traffic(m, a), "loss", seed=2024))
    print(f"m={m} a={a}  blocked={est.loss_frac:.5f}  all-busy={est.all_busy_frac:.5f}"
          f"  B={erlang_b(m, a):.5f}")
