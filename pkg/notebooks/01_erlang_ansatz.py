"""
=========================================
Waiting time from Erlang B in three steps
=========================================

Erlang B, the loss probability of an M/M/m/m system, is cheap to compute by
recurrence. This script shows how the ansatz ``B / (1 - (1 - B) rho)`` turns it
into the probability of waiting in M/M/m. It also shows how that probability
scales the residence time of an m-times faster M/M/1.
"""

# %%
# Setup
# -----
from erlangkit import (
    QueueSpec,
    erlang_b_poisson,
    erlang_b_recurrence,
    erlang_c,
    fast_server_view,
    metrics,
    phi_b,
)

# %%
# Two routes to Erlang B
# ----------------------
# The recurrence and the Poisson pmf/cdf ratio give the same blocking
# probability.
for m in (1, 2, 3, 4, 8, 16, 32):
    a = 0.75 * m
    print(f"m={m:2d} a={a:5.2f}  recurrence={erlang_b_recurrence(m, a):.8f}"
          f"  poisson={erlang_b_poisson(m, a):.8f}")

# %%
# From B to C
# -----------
# ``phi_b`` uses only B and rho. ``erlang_c`` evaluates the canonical
# factorial-sum form (in Poisson-scaled arithmetic). They agree to rounding.
worst = 0.0
for m in range(1, 65):
    for k in range(1, 100):
        a = m * k / 100
        worst = max(worst, abs(phi_b(m, a) - erlang_c(m, a)) / erlang_c(m, a))
print(f"largest relative gap between phi_b and Erlang C: {worst:.2e}")

# %%
# Waiting time as a fraction of a fast M/M/1
# ------------------------------------------
spec = QueueSpec.from_traffic(8, 6.0)
view = fast_server_view(spec)
print(f"fast residence time R1 = {view.r1_fast:.6f}")
print(f"fraction phi_b         = {view.phi_b:.6f}")
print(f"waiting time W         = {view.w:.8f}")
print(metrics(spec))

# %%
# Light and heavy traffic
# -----------------------
# At low load nobody waits. Near saturation, W approaches the fast M/M/1
# residence time.
for rho in (1e-6, 0.5, 0.9, 0.999, 1 - 1e-6):
    s = QueueSpec.from_traffic(4, 4 * rho)
    v = fast_server_view(s)
    print(f"rho={rho:<10g} W={v.w:12.6g}  W/R1={v.phi_b:.7f}")
