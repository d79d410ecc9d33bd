"""Independent oracles used by the test suite.

Each oracle reaches the same quantity as the library through a different
algorithm (characteristic polynomial roots, power iteration, dense sphere
sampling, direct vector ascent) so that agreement is evidence, not
tautology.  They are deliberately slow and simple.
"""

import numpy as np

from shnr import compress


def char_poly_coeffs(m: np.ndarray) -> np.ndarray:
    """Characteristic polynomial coefficients via the Faddeev-LeVerrier
    recursion (matrix products and traces only, no eigensolver)."""
    n = m.shape[0]
    coeffs = np.zeros(n + 1, dtype=np.complex128)
    coeffs[0] = 1.0
    work = np.zeros_like(m)
    for k in range(1, n + 1):
        work = m @ work + coeffs[k - 1] * np.eye(n)
        coeffs[k] = -np.trace(m @ work) / k
    return coeffs


def eigenvalues_by_charpoly(m: np.ndarray) -> np.ndarray:
    """Hermitian eigenvalues as roots of the characteristic polynomial."""
    roots = np.roots(char_poly_coeffs(m))
    return np.sort(roots.real)


def power_iteration_sigma_max(m: np.ndarray, iters: int = 2000, seed: int = 0) -> float:
    """Largest singular value via power iteration on M* M."""
    rng = np.random.default_rng(seed)
    gram = m.conj().T @ m
    v = rng.standard_normal(m.shape[1]) + 1j * rng.standard_normal(m.shape[1])
    v /= np.linalg.norm(v)
    lam = 0.0
    for _ in range(iters):
        w = gram @ v
        nw = np.linalg.norm(w)
        if nw == 0.0:
            return 0.0
        v = w / nw
        lam = float(np.real(np.vdot(v, gram @ v)))
    return float(np.sqrt(max(lam, 0.0)))


def random_unit_sphere(n: int, samples: int, rng) -> np.ndarray:
    """Uniform complex unit vectors, one per row."""
    z = rng.standard_normal((samples, n)) + 1j * rng.standard_normal((samples, n))
    return z / np.linalg.norm(z, axis=1)[:, None]


def sampling_sigma_max(m: np.ndarray, samples: int, rng) -> float:
    """max |M v| over random unit vectors: a statistical lower bound."""
    ys = random_unit_sphere(m.shape[1], samples, rng)
    return float(np.max(np.linalg.norm(ys @ m.T, axis=1)))


def vector_ascent_omega(ctx, t, n_starts: int = 16, iters: int = 400,
                        seed: int = 11) -> float:
    """sup |<T x, x>_A| by direct ascent over vectors, no angle sweep.

    Works in compressed coordinates: repeatedly aligns the phase and jumps
    to the top eigenvector of the aligned Hermitian part, which cannot
    decrease |y* T~ y|.  Independent of the theta-grid engine.
    """
    tt = compress(ctx, t)
    n = tt.shape[0]
    rng = np.random.default_rng(seed)
    best = 0.0
    for s in range(n_starts):
        y = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        y /= np.linalg.norm(y)
        prev = -1.0
        for _ in range(iters):
            q = np.vdot(y, tt @ y)
            r = abs(q)
            if r <= prev * (1 + 1e-14) + 1e-30:
                break
            prev = r
            phase = np.conj(q) / r if r > 0 else 1.0
            h = (phase * tt + np.conj(phase) * tt.conj().T) / 2.0
            _, vecs = np.linalg.eigh(h)
            y = vecs[:, -1]
        best = max(best, prev)
    return best


def sampling_alpha_norm(ctx, t, alpha: float, samples: int, rng) -> float:
    """Dense-sphere lower bound for the alpha seminorm (small n only)."""
    tt = compress(ctx, t)
    ys = random_unit_sphere(tt.shape[0], samples, rng)
    ty = ys @ tt.T
    q = np.einsum("ij,ij->i", ys.conj(), ty)
    vals = alpha * np.abs(q) ** 2 + (1 - alpha) * np.einsum(
        "ij,ij->i", ty.conj(), ty
    ).real
    return float(np.sqrt(np.max(vals)))


def sampling_omega_pairs(ctx, t, samples: int, rng) -> float:
    """Dense-sphere lower bound for Omega_A via random unit pairs."""
    tt = compress(ctx, t)
    n = tt.shape[0]
    xs = random_unit_sphere(n, samples, rng)
    ys = random_unit_sphere(n, samples, rng)
    z1 = np.einsum("ij,ij->i", ys.conj(), xs @ tt.T)
    z2 = np.einsum("ij,ij->i", ys.conj(), xs @ np.conj(tt))
    return float(np.max(np.hypot(np.abs(z1), np.abs(z2))))
