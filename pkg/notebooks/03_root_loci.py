"""
=============================
Zeros of the two denominators
=============================

Zeros of ``1 - z**m`` are roots of unity on the unit circle. The correction
polynomials share the zero at ``z = 1`` (saturation). Their other zeros sit
inside the disk and drift toward the Szego curve ``|z exp(1 - z)| = 1``.
Set ``PLOT = True`` to save a figure (needs matplotlib).
"""

# %%
# Setup
# -----
import numpy as np

from erlangkit import corrected_roots, morphing_roots, szego_curve

PLOT = False

# %%
# Moduli of the corrected zeros
# -----------------------------
for m in range(1, 9):
    loc = corrected_roots(m)
    inner = np.sort(np.abs(loc.interior()))[::-1]
    print(f"m={m}  |z| off z=1: {np.round(inner, 4)}  scaled residual {loc.scaled_residual:.1e}")

# %%
# Szego curve
# -----------
curve = szego_curve(512).points
print(f"curve spans re in [{curve.real.min():.6f}, {curve.real.max():.6f}],"
      f" im in [{curve.imag.min():.6f}, {curve.imag.max():.6f}]")

# %%
# Figure
# ------
if PLOT:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(6, 6))
    t = np.linspace(0, 2 * np.pi, 400)
    ax.plot(np.cos(t), np.sin(t), color="0.7", lw=0.8)
    ax.plot(np.append(curve.real, 1), np.append(curve.imag, 0), color="red")
    for m in range(1, 9):
        z = morphing_roots(m).roots
        ax.plot(z.real, z.imag, "o", color="green", ms=3)
        z = corrected_roots(m).roots
        ax.plot(z.real, z.imag, "o", color="blue", ms=3)
    ax.set_aspect("equal")
    fig.savefig("root_loci.png", dpi=120)
