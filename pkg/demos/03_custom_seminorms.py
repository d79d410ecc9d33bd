#!/usr/bin/env python3
"""The two concrete seminorm families beyond the A-operator norm.

The alpha family interpolates between the A-norm and the A-numerical
radius but its generalized radius always collapses back to w_A.  The
Omega seminorm maximizes over coefficient pairs (alpha T + beta T#) and
scales the radius by exactly sqrt(2).
"""

import math

import numpy as np

import shnr

SQRT2 = math.sqrt(2.0)

ctx = shnr.build_context(shnr.random_psd(3, 3, seed=1))
T = shnr.random_member(ctx, seed=2, unit_norm=True)

# alpha = 0 gives the A-norm, alpha = 1 the A-numerical radius.
print("alpha sweep of |T|_{A,alpha}:")
for alpha in (0.0, 0.25, 0.5, 0.75, 1.0):
    desc = shnr.a_alpha_seminorm(alpha)
    print(f"  alpha={alpha:4.2f}  value={desc.evaluate(ctx, T):.10f}")
print("  |T|_A =", shnr.a_operator_norm(ctx, T))
print("  w_A   =", shnr.omega_a(ctx, T))

# Yet the induced generalized radius is alpha-independent.
w_ref = shnr.omega_a(ctx, T)
print("\nradius collapse:")
for alpha in (0.0, 0.5, 1.0):
    w = shnr.generalized_radius(ctx, shnr.a_alpha_seminorm(alpha), T)
    print(f"  alpha={alpha:4.2f}  w={w:.12f}  (w_A={w_ref:.12f})")

# Omega: supremum of |alpha T + beta T#|_A over the unit coefficient ball.
om = shnr.big_omega_seminorm()
omega_val = om.evaluate(ctx, T)
gamma_val = shnr.gamma_a(ctx, T)
na = shnr.a_operator_norm(ctx, T)
print("\nOmega chain: |T|_A <= Omega <= gamma <= sqrt(2)|T|_A")
print(f"  {na:.6f} <= {omega_val:.6f} <= {gamma_val:.6f} <= {SQRT2 * na:.6f}")

# Two independent computations of Omega agree: coefficient grid + ascent
# versus the pair supremum over A-unit vectors.
print("pair-form oracle:", shnr.big_omega_pair_form(ctx, T))

# The scaling law for the induced radius.
w_om = shnr.generalized_radius(ctx, om, T)
print("\nw_Omega =", w_om, " sqrt(2) w_A =", SQRT2 * w_ref)

# The pinned 3x3 instance: both equal 2 sqrt(2) although T is not A-normal,
# so normality is sufficient but not necessary for the equality.
ctx3 = shnr.build_context(np.eye(3))
T3 = np.array([[0, 1, 0], [0, 0, 0], [0, 0, 2]], dtype=complex)
print("\npinned instance: Omega =", om.evaluate(ctx3, T3),
      " w_Omega =", shnr.generalized_radius(ctx3, om, T3),
      " A-normal?", shnr.is_a_normal(ctx3, T3))

# Empirical property probe: declared flags versus measured violations.
report = shnr.probe_properties(ctx, shnr.a_norm_seminorm(), trials=200, seed=0)
print("\nprobe of the A-norm over 200 trials:")
for name, val in sorted(report.violations.items()):
    print(f"  {name:24s} max violation {val:.2e}")
