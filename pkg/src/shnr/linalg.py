"""Dense complex linear-algebra kernels.

Everything downstream (semi-inner products, adjoints, seminorms, radii)
reduces to the handful of spectral primitives in this module: Hermitian
eigendecomposition, singular values, Moore-Penrose pseudoinverse, PSD
square root and the orthogonal projector onto a range.  Matrices are plain
``numpy`` arrays of ``complex128``; sizes of interest are desk scale
(n up to a few dozen), so dense LAPACK-backed routines are the right tool.

Conventions kept throughout:

* eigenvalues ascending, singular values descending (byte-stable reports),
* one relative tolerance ``rtol`` (default ``1e-10``) drives every rank
  decision, measured against the largest eigenvalue / singular value,
* inputs are validated (finite entries, shape, symmetry) at the boundary
  and errors name the violated precondition.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .exceptions import (
    DimensionMismatchError,
    NonSquareError,
    NotHermitianError,
    NotPositiveError,
)

#: Relative tolerance used for every rank decision unless overridden.
DEFAULT_RTOL = 1e-10


class HermitianEigen(NamedTuple):
    """Spectral decomposition of a Hermitian matrix.

    ``eigenvalues`` are real and ascending; ``eigenvectors`` holds the
    corresponding orthonormal eigenvectors as columns.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def as_matrix(data, name: str = "matrix") -> np.ndarray:
    """Coerce input to a 2-D complex128 array with finite entries."""
    m = np.asarray(data, dtype=np.complex128)
    if m.ndim == 1:
        m = m.reshape(1, -1)
    if m.ndim != 2:
        raise DimensionMismatchError(f"{name} must be 2-dimensional, got ndim={m.ndim}")
    if not np.all(np.isfinite(m.real)) or not np.all(np.isfinite(m.imag)):
        raise DimensionMismatchError(f"{name} contains non-finite entries")
    return m


def as_vector(data, name: str = "vector") -> np.ndarray:
    """Coerce input to a 1-D complex128 array with finite entries."""
    v = np.asarray(data, dtype=np.complex128).reshape(-1)
    if not np.all(np.isfinite(v.real)) or not np.all(np.isfinite(v.imag)):
        raise DimensionMismatchError(f"{name} contains non-finite entries")
    return v


def require_square(m: np.ndarray, name: str = "matrix") -> np.ndarray:
    if m.shape[0] != m.shape[1]:
        raise NonSquareError(f"{name} must be square, got shape {m.shape}")
    return m


def herm(m: np.ndarray) -> np.ndarray:
    """Hermitian part (M + M*)/2."""
    return (m + m.conj().T) / 2.0


def hermitian_deviation(m: np.ndarray) -> float:
    """Max-entry distance of M from its conjugate transpose."""
    return float(np.max(np.abs(m - m.conj().T))) if m.size else 0.0


def hermitian_eig(m, tol: float = 1e-8) -> HermitianEigen:
    """Full spectral decomposition of a Hermitian (up to ``tol``) matrix.

    The input is symmetrized as (M + M*)/2 before factorization, so the
    returned pair reconstructs the symmetrized matrix to machine accuracy
    and the original one to within its Hermitian deviation.

    Raises ``NonSquareError`` / ``NotHermitianError`` on bad input.
    """
    m = require_square(as_matrix(m))
    dev = hermitian_deviation(m)
    if dev > tol:
        raise NotHermitianError(
            f"Hermitian deviation {dev:.3e} exceeds tolerance {tol:.3e}"
        )
    w, v = np.linalg.eigh(herm(m))
    return HermitianEigen(w, v)


def singular_values(m) -> np.ndarray:
    """Singular values, descending. sigma_max is the operator 2-norm."""
    m = as_matrix(m)
    if m.size == 0:
        return np.zeros(0)
    return np.linalg.svd(m, compute_uv=False)


def spectral_norm(m) -> float:
    """Operator 2-norm (largest singular value)."""
    m = as_matrix(m)
    if m.size == 0 or not m.any():
        return 0.0
    return float(np.linalg.svd(m, compute_uv=False)[0])


def pseudo_inverse(m, rtol: float = DEFAULT_RTOL) -> np.ndarray:
    """Moore-Penrose pseudoinverse via SVD truncation.

    Singular values at or below ``rtol * sigma_max`` are treated as exact
    zeros; the zero matrix maps to the zero matrix.  The result satisfies
    the four Penrose identities to roughly ``rtol`` relative accuracy.
    """
    m = as_matrix(m)
    if rtol <= 0:
        raise ValueError("rtol must be positive")
    if not m.any():
        return np.zeros((m.shape[1], m.shape[0]), dtype=np.complex128)
    u, s, vh = np.linalg.svd(m, full_matrices=False)
    cutoff = rtol * s[0]
    inv = np.where(s > cutoff, 1.0 / np.where(s > cutoff, s, 1.0), 0.0)
    return (vh.conj().T * inv) @ u.conj().T


def _psd_spectrum(a, rtol: float, what: str):
    """Eigendecomposition of a Hermitian PSD matrix with clamped spectrum."""
    a = require_square(as_matrix(a), what)
    dev = hermitian_deviation(a)
    scale = float(np.max(np.abs(a))) if a.size else 0.0
    if dev > 10 * rtol * max(scale, 1e-300):
        raise NotHermitianError(
            f"{what}: Hermitian deviation {dev:.3e} too large for tolerance {rtol:.3e}"
        )
    w, v = np.linalg.eigh(herm(a))
    lam_max = float(w[-1]) if w.size else 0.0
    if w.size and float(w[0]) < -rtol * max(lam_max, 0.0) - rtol:
        raise NotPositiveError(
            f"{what}: eigenvalue {w[0]:.3e} below PSD tolerance (lam_max={lam_max:.3e})"
        )
    w = np.maximum(w, 0.0)
    return w, v, lam_max


def psd_sqrt(a, rtol: float = DEFAULT_RTOL) -> np.ndarray:
    """Hermitian PSD square root.

    Eigenvalues within ``rtol * lam_max`` of zero are clamped to zero
    before taking roots; this is deliberate policy so that rank decisions
    match :func:`range_projector` exactly.
    """
    w, v, _ = _psd_spectrum(a, rtol, "psd_sqrt")
    root = herm((v * np.sqrt(w)) @ v.conj().T)
    return root


def range_projector(a, rtol: float = DEFAULT_RTOL) -> np.ndarray:
    """Orthogonal projector onto the span of eigenvectors above cutoff.

    The cutoff is ``rtol * lam_max``; the projector rank equals the
    numerical rank of ``a``.
    """
    w, v, lam_max = _psd_spectrum(a, rtol, "range_projector")
    keep = w > rtol * lam_max
    vk = v[:, keep]
    return herm(vk @ vk.conj().T)


def numerical_rank(a, rtol: float = DEFAULT_RTOL) -> int:
    """Number of eigenvalues of a Hermitian PSD matrix above cutoff."""
    w, _, lam_max = _psd_spectrum(a, rtol, "numerical_rank")
    return int(np.count_nonzero(w > rtol * lam_max))


def require_same_shape(a: np.ndarray, b: np.ndarray, what: str = "operands"):
    if a.shape != b.shape:
        raise DimensionMismatchError(f"{what}: shapes {a.shape} and {b.shape} differ")
