#!/usr/bin/env python3
"""Tour of the semi-Hilbertian structure induced by a positive matrix A.

Walks through the objects everything else is built on: the semi-inner
product, the membership test for A-adjointable operators, the distinguished
A-adjoint, and the compression that turns A-geometry into plain geometry.
"""

import numpy as np

import shnr

np.set_printoptions(precision=4, suppress=True)

# A degenerate A: rank 2 out of 3. Its kernel direction is invisible to
# every A-quantity, which is exactly what makes this setting interesting.
A = np.diag([2.0, 0.5, 0.0])
ctx = shnr.build_context(A)
print("A =\n", A)
print("rank of A:", ctx.rank)
print("projector onto range(A):\n", ctx.proj.real)

# The semi-inner product <x, y>_A = y* A x degenerates on ker A.
x = np.array([1.0, 2.0, 5.0])
e3 = np.array([0.0, 0.0, 1.0])
print("\n<x, x>_A      =", shnr.a_inner(ctx, x, x).real)
print("|e3|_A        =", shnr.a_norm_vec(ctx, e3), "(kernel direction)")

# Not every operator plays along: T must keep ker A invariant to admit an
# A-adjoint. The second matrix funnels the kernel into the range and is
# rejected.
T_good = np.array([[1.0, 0.0, 0.0], [2.0, 3.0, 0.0], [0.0, 0.0, 4.0]])
T_bad = np.array([[0.0, 0.0, 1.0], [0.0, 0.0, 0.0], [0.0, 0.0, 0.0]])
print("\nmember?", shnr.is_member(ctx, T_good), "residual",
      shnr.membership_residual(ctx, T_good))
print("member?", shnr.is_member(ctx, T_bad), "residual",
      shnr.membership_residual(ctx, T_bad))

# The A-adjoint solves A X = T* A. It is not the conjugate transpose, and
# applying it twice does not return T, only its two-sided compression.
adj = shnr.a_adjoint(ctx, T_good)
print("\nT# =\n", adj.real)
print("defining equation residual:",
      shnr.spectral_norm(ctx.a @ adj - T_good.conj().T @ ctx.a))
dbl = shnr.a_adjoint(ctx, adj)
print("(T#)# equals P T P:",
      np.allclose(dbl, ctx.proj @ T_good @ ctx.proj, atol=1e-10))

# The compression T~ = A^(1/2) T (A^(1/2))^+ carries all A-quantities:
# the A-operator seminorm is its largest singular value.
tt = shnr.compress(ctx, T_good)
print("\ncompression T~ =\n", tt.real)
print("|T|_A =", shnr.a_operator_norm(ctx, T_good))
print("sigma_max(T~) =", shnr.spectral_norm(tt))

# Operator classes relative to A.
sa = shnr.random_a_selfadjoint(ctx, seed=1)
print("\nrandom A-selfadjoint passes predicate:", shnr.is_a_selfadjoint(ctx, sa))
un = shnr.random_a_unitary(ctx, seed=2)
print("random A-unitary passes predicate:   ", shnr.is_a_unitary(ctx, un))
