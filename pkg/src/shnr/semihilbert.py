"""The semi-Hilbertian structure induced by a positive operator A.

A non-zero Hermitian PSD matrix ``A`` induces the semi-inner product
``<x, y>_A = <Ax, y> = y* A x`` and with it a whole parallel operator
theory: A-adjoints, A-selfadjoint/positive/normal/unitary classes, the
A-operator seminorm and the A-numerical radius.  This module builds the
precomputed context (square root, pseudoinverses, range projector) and
exposes those primitives.

Every A-quantity is computed through the compression

    T~  =  A^{1/2} . T . (A^{1/2})^+,

the ordinary-Hilbert-space shadow of ``T``: for A-adjointable ``T`` the
map ``x -> A^{1/2} x`` sends A-unit vectors onto unit vectors of the range
of A and intertwines ``T`` with ``T~``, so A-seminorms of ``T`` become
classical norms of ``T~``.

Only operators with ``range(T* A)`` inside ``range(A)`` admit A-adjoints;
in finite dimension that is exactly the kernel condition
``T(ker A) <= ker A`` and coincides with A-boundedness, so one membership
predicate serves both classes.  Non-members are rejected (``NotMemberError``)
rather than silently compressed: their compression is finite but means
nothing.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .exceptions import (
    DimensionMismatchError,
    NotMemberError,
    NotPositiveError,
    ZeroOperatorError,
)
from .linalg import DEFAULT_RTOL, as_matrix, as_vector, herm, require_square


@dataclass(frozen=True)
class SemiHilbertContext:
    """Precomputed data for one inducing operator A.

    Immutable after construction; safe to share across threads.
    """

    a: np.ndarray            # the inducing Hermitian PSD matrix
    half: np.ndarray         # A^{1/2}
    half_pinv: np.ndarray    # (A^{1/2})^+
    a_pinv: np.ndarray       # A^+
    proj: np.ndarray         # orthogonal projector onto range(A)
    rank: int                # numerical rank of A
    rtol: float              # relative tolerance for all predicates
    scale: float             # largest eigenvalue of A
    eigenvalues: np.ndarray = field(repr=False)   # ascending spectrum of A
    eigenvectors: np.ndarray = field(repr=False)  # matching eigenvector columns

    @property
    def dim(self) -> int:
        return self.a.shape[0]

    def tol(self, operator_scale: float = 0.0) -> float:
        """Relative tolerance rtol * scale * (1 + |T|)."""
        return self.rtol * self.scale * (1.0 + operator_scale)


def build_context(a, rtol: float = DEFAULT_RTOL) -> SemiHilbertContext:
    """Validate A and precompute every derived matrix.

    Raises ``NotHermitianError`` / ``NotPositiveError`` / ``ZeroOperatorError``
    when A is not a non-zero Hermitian PSD matrix within tolerance.
    """
    a = require_square(as_matrix(a, "A"), "A")
    w, v, lam_max = linalg._psd_spectrum(a, rtol, "A")
    if lam_max <= 0.0:
        raise ZeroOperatorError("A must be a non-zero positive operator")
    keep = w > rtol * lam_max
    wk = w[keep]
    vk = v[:, keep]
    half = herm((vk * np.sqrt(wk)) @ vk.conj().T)
    half_pinv = herm((vk / np.sqrt(wk)) @ vk.conj().T)
    a_pinv = herm((vk / wk) @ vk.conj().T)
    proj = herm(vk @ vk.conj().T)
    return SemiHilbertContext(
        a=herm(a),
        half=half,
        half_pinv=half_pinv,
        a_pinv=a_pinv,
        proj=proj,
        rank=int(np.count_nonzero(keep)),
        rtol=rtol,
        scale=lam_max,
        eigenvalues=w,
        eigenvectors=v,
    )


def a_inner(ctx: SemiHilbertContext, x, y) -> complex:
    """Semi-inner product <x, y>_A = y* A x."""
    x = as_vector(x, "x")
    y = as_vector(y, "y")
    if x.shape[0] != ctx.dim or y.shape[0] != ctx.dim:
        raise DimensionMismatchError(
            f"vectors of length {x.shape[0]}, {y.shape[0]} vs A of dim {ctx.dim}"
        )
    return complex(y.conj() @ (ctx.a @ x))


def a_norm_vec(ctx: SemiHilbertContext, x) -> float:
    """Vector seminorm |x|_A = sqrt(<x, x>_A)."""
    val = a_inner(ctx, x, x)
    return float(np.sqrt(max(val.real, 0.0)))


def membership_residual(ctx: SemiHilbertContext, t) -> float:
    """Spectral norm of (I - P) T* A, zero iff T admits an A-adjoint."""
    t = _check_shape(ctx, t)
    return linalg.spectral_norm((np.eye(ctx.dim) - ctx.proj) @ t.conj().T @ ctx.a)


def is_member(ctx: SemiHilbertContext, t) -> bool:
    """Whether range(T* A) <= range(A), i.e. T admits an A-adjoint.

    Finite dimension collapses the range condition and A-boundedness into
    the single kernel-invariance predicate tested here.
    """
    t = _check_shape(ctx, t)
    return membership_residual(ctx, t) <= ctx.tol(linalg.spectral_norm(t))


def _check_shape(ctx: SemiHilbertContext, t) -> np.ndarray:
    t = require_square(as_matrix(t, "T"), "T")
    if t.shape[0] != ctx.dim:
        raise DimensionMismatchError(f"T has dim {t.shape[0]}, A has dim {ctx.dim}")
    return t


def require_member(ctx: SemiHilbertContext, t) -> np.ndarray:
    t = _check_shape(ctx, t)
    res = membership_residual(ctx, t)
    if res > ctx.tol(linalg.spectral_norm(t)):
        raise NotMemberError(
            f"operator is not A-adjointable: range residual {res:.3e}"
        )
    return t


def a_adjoint(ctx: SemiHilbertContext, t) -> np.ndarray:
    """The distinguished A-adjoint A^+ T* A.

    Solves A X = T* A with range(X) inside range(A); requires membership.
    """
    t = require_member(ctx, t)
    return ctx.a_pinv @ t.conj().T @ ctx.a


def re_a(ctx: SemiHilbertContext, t) -> np.ndarray:
    """A-real part (T + T#)/2; always A-selfadjoint."""
    t = require_member(ctx, t)
    return (t + a_adjoint(ctx, t)) / 2.0


def im_a(ctx: SemiHilbertContext, t) -> np.ndarray:
    """A-imaginary part (T - T#)/2i; always A-selfadjoint."""
    t = require_member(ctx, t)
    return (t - a_adjoint(ctx, t)) / 2.0j


def compress(ctx: SemiHilbertContext, t) -> np.ndarray:
    """Compression T~ = A^{1/2} T (A^{1/2})^+ of a member operator.

    Satisfies <Tx, x>_A = <T~ y, y> with y = A^{1/2} x, and
    compress(T#) = compress(T)*.
    """
    t = require_member(ctx, t)
    return ctx.half @ t @ ctx.half_pinv


def uncompress(ctx: SemiHilbertContext, m) -> np.ndarray:
    """Left inverse of compress on range-supported matrices.

    Maps M to (A^{1/2})^+ M A^{1/2}; compress(uncompress(M)) = P M P.
    Useful for constructing members with a prescribed compression
    (Hermitian compression -> A-selfadjoint operator, PSD -> A-positive,
    normal -> A-normal up to the kernel block).
    """
    m = _check_shape(ctx, m)
    return ctx.half_pinv @ m @ ctx.half


def a_operator_norm(ctx: SemiHilbertContext, t) -> float:
    """A-operator seminorm |T|_A = sigma_max of the compression.

    Equals sup |<Tx, y>_A| over A-unit x, y, and sup |Tx|_A / |x|_A over
    the range of A.  Raises ``NotMemberError`` outside the A-bounded class
    (where the supremum is infinite).
    """
    return linalg.spectral_norm(compress(ctx, t))


def omega_a(ctx: SemiHilbertContext, t, cfg=None) -> float:
    """A-numerical radius sup |<Tx, x>_A| over A-unit vectors.

    Computed as the classical numerical radius of the compression via the
    angle-sweep engine in :mod:`shnr.radius`.
    """
    from . import radius  # local import: radius builds on this module

    return radius.omega_a_fast(ctx, t, cfg)


def is_a_selfadjoint(ctx: SemiHilbertContext, t) -> bool:
    """Whether A T = T* A within tolerance."""
    t = _check_shape(ctx, t)
    dev = linalg.spectral_norm(ctx.a @ t - t.conj().T @ ctx.a)
    return dev <= ctx.tol(linalg.spectral_norm(t))


def is_a_positive(ctx: SemiHilbertContext, t) -> bool:
    """Whether A T is Hermitian PSD within tolerance."""
    t = _check_shape(ctx, t)
    if not is_a_selfadjoint(ctx, t):
        return False
    w = np.linalg.eigvalsh(herm(ctx.a @ t))
    return bool(w.size == 0 or w[0] >= -ctx.tol(linalg.spectral_norm(t)))


def is_a_normal(ctx: SemiHilbertContext, t) -> bool:
    """Whether T# T = T T# within tolerance (requires membership)."""
    t = require_member(ctx, t)
    ts = a_adjoint(ctx, t)
    dev = linalg.spectral_norm(ts @ t - t @ ts)
    return dev <= ctx.tol(linalg.spectral_norm(t) ** 2)


def is_a_unitary(ctx: SemiHilbertContext, t) -> bool:
    """Whether |Tx|_A = |T# x|_A = |x|_A for all x (requires membership).

    Tested on the compression: both T~* T~ and T~ T~* must equal the range
    projector.
    """
    tt = compress(ctx, t)
    tol = ctx.tol(linalg.spectral_norm(tt) ** 2)
    return (
        linalg.spectral_norm(tt.conj().T @ tt - ctx.proj) <= tol
        and linalg.spectral_norm(tt @ tt.conj().T - ctx.proj) <= tol
    )
