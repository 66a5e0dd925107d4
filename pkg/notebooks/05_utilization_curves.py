"""
=========================================
Per-server utilization with and without a queue
=========================================

With lost calls the servers see only ``(1 - B) a`` of the offered load and
approach full utilization slowly. With a waiting line every call is served,
so utilization is ``a / m`` and hits 1 at ``a = m``.
"""

# %%
# Setup
# -----
import numpy as np

from erlangkit import utilization_loss, utilization_sweep_empirical

m = 2
loads = np.linspace(0.0, 8.0, 9)

# %%
# Analytic curves
# ---------------
for a in loads:
    delay = f"{a / m:.4f}" if a < m else "  -   "
    print(f"a={a:4.1f}  loss={utilization_loss(m, a):.4f}  delay={delay}")

# %%
# Measured utilization
# --------------------
for pt in utilization_sweep_empirical(m, loads[1:], "loss", seed=5):
    print(f"a={pt.a:4.1f}  measured={pt.utilization:.4f} +- {pt.ci_half_width:.4f}"
          f"  analytic={utilization_loss(m, pt.a):.4f}")
