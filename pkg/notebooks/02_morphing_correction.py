"""
=====================================
Morphing approximation and correction
=====================================

The morphing formula ``S / (1 - rho**m)`` is exact for one and two servers
and underestimates the residence time beyond that. The integer correction
polynomials restore the exact answer, and the morphing error stays below
``ln(m**0.25) / (1 + ln m)``.
"""

# %%
# Setup
# -----
import numpy as np

from erlangkit import correction_polynomials, morph_metrics, morphing_error_bound

rhos = np.arange(1, 100) / 100

# %%
# Error versus bound
# ------------------
print(" m   max rel error   bound")
for m in range(1, 9):
    worst = max(morph_metrics(m, r).rel_error for r in rhos)
    print(f"{m:2d}   {worst:12.5f}   {morphing_error_bound(m):.5f}")

# %%
# The bound creeps toward 25% only very slowly.
for m in (10, 10**3, 10**6, 10**9, 10**12):
    print(f"m={m:<14g} bound={morphing_error_bound(m):.5f}")

# %%
# Correction polynomials
# ----------------------
# Dropping the leading term gives the deflated polynomial used in the
# corrected residence time. The corrected and exact values agree to rounding.
for poly in correction_polynomials():
    worst = max(abs(morph_metrics(poly.m, r).r_corrected - morph_metrics(poly.m, r).r_exact)
                / morph_metrics(poly.m, r).r_exact for r in rhos)
    print(f"m={poly.m}  coeffs={poly.coeffs}  max rel diff={worst:.1e}")

# %%
# The m=3 case at rho = 0.75
mm = morph_metrics(3, 0.75)
print(f"morphing {mm.r_morph:.6f}, exact {mm.r_exact:.6f}, corrected {mm.r_corrected:.6f}, "
      f"error {mm.rel_error:.4f}")
