"""Executable catalog of the semi-Hilbertian radius theorems.

Every inequality and equality the library implements is written down once
here as a :class:`CheckSpec`: an executable predicate over random (or
pinned) instances, tagged with the seminorm property flags it needs.  The
seeded runner :func:`run_suite` draws instances across dimensions and rank
profiles of A (rank-deficient A is a first-class citizen: the projector,
the failure of (T#)# = T, and the adjoint twist are all invisible when A
is invertible), evaluates both sides, and reports per-check violation
counts, the minimum slack (how close the bound came to equality, i.e.
sharpness), and the worst witness instance in replayable form.

Slack bookkeeping: for an obligation lhs <= rhs the relative slack is
(rhs - lhs) / max(rhs, 1e-300); equalities use the symmetric deviation
-|lhs - rhs| / max(|lhs|, |rhs|, 1e-300).  An instance counts as a
violation when any of its slacks drops below -tol_rel.  Conditional
equivalences record how often their premise held, so a run where it never
fired is visibly vacuous rather than silently green.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from . import radius, semihilbert, seminorms, serialize
from .exceptions import RankOutOfRangeError, ShnrError
from .linalg import DEFAULT_RTOL, herm, spectral_norm
from .radius import ThetaOptConfig
from .semihilbert import a_adjoint, a_operator_norm, build_context, im_a, re_a

__version__ = "0.1.0"

_SLACK_FLOOR = 1e-300
_SQRT2 = math.sqrt(2.0)
_PROFILE_RANKS = {
    "full": lambda n: n,
    "n-1": lambda n: max(1, n - 1),
    "half": lambda n: (n + 1) // 2,
}

# ---------------------------------------------------------------------------
# instance generation


def _resolve_rng(seed=None, rng=None):
    if rng is not None:
        return rng
    return np.random.default_rng(seed)


def _random_unitary(n, rng):
    g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    q, r = np.linalg.qr(g)
    d = np.diagonal(r)
    ph = d / np.abs(np.where(d == 0, 1.0, d))
    return q * ph.conj()


def _ginibre(n, rng):
    return (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / math.sqrt(2.0)


def random_psd(n: int, rank: int, seed=None, rng=None) -> np.ndarray:
    """Random Hermitian PSD matrix with exactly ``rank`` nonzero eigenvalues.

    Built from a Haar-ish unitary and a clamped spectrum normalized to
    lam_max = 1, so context tolerances behave uniformly across draws.
    """
    if not 1 <= rank <= n:
        raise RankOutOfRangeError(f"rank {rank} not in 1..{n}")
    rng = _resolve_rng(seed, rng)
    q = _random_unitary(n, rng)
    vals = rng.uniform(0.2, 1.0, size=rank)
    vals /= vals.max()
    qr_cols = q[:, :rank]
    return herm((qr_cols * vals) @ qr_cols.conj().T)


def random_member(ctx, seed=None, rng=None, unit_norm: bool = False) -> np.ndarray:
    """Random A-adjointable operator.

    A Ginibre draw is made block lower-triangular with respect to
    range(A) + ker(A) by removing its range-to-kernel block, which forces
    the kernel of A to be invariant, hence membership.
    """
    rng = _resolve_rng(seed, rng)
    g = _ginibre(ctx.dim, rng)
    t = g - ctx.proj @ g @ (np.eye(ctx.dim) - ctx.proj)
    if unit_norm:
        s = spectral_norm(t)
        if s > 0:
            t = t / s
    return t


def random_a_selfadjoint(ctx, seed=None, rng=None, unit_norm: bool = False) -> np.ndarray:
    """Random A-selfadjoint operator (Hermitian compression lifted back)."""
    rng = _resolve_rng(seed, rng)
    m = ctx.proj @ herm(_ginibre(ctx.dim, rng)) @ ctx.proj
    t = semihilbert.uncompress(ctx, m)
    if unit_norm:
        s = spectral_norm(t)
        if s > 0:
            t = t / s
    return t


def random_a_positive(ctx, seed=None, rng=None, unit_norm: bool = False) -> np.ndarray:
    """Random A-positive operator (PSD compression lifted back)."""
    rng = _resolve_rng(seed, rng)
    g = _ginibre(ctx.dim, rng)
    m = ctx.proj @ (g @ g.conj().T) @ ctx.proj
    t = semihilbert.uncompress(ctx, m)
    if unit_norm:
        s = spectral_norm(t)
        if s > 0:
            t = t / s
    return t


def _range_kernel_bases(ctx):
    n, r = ctx.dim, ctx.rank
    u = ctx.eigenvectors  # ascending eigenvalues: kernel first, range last
    return u[:, n - r :], u[:, : n - r]


def random_a_normal(ctx, seed=None, rng=None, unit_norm: bool = False) -> np.ndarray:
    """Random A-normal operator: normal compression plus a free kernel block."""
    rng = _resolve_rng(seed, rng)
    ur, uk = _range_kernel_bases(ctx)
    r = ctx.rank
    v = _random_unitary(r, rng)
    d = rng.standard_normal(r) + 1j * rng.standard_normal(r)
    m = ur @ ((v * d) @ v.conj().T) @ ur.conj().T
    t = semihilbert.uncompress(ctx, m)
    if uk.shape[1]:
        t = t + uk @ _ginibre(uk.shape[1], rng) @ uk.conj().T
    if unit_norm:
        s = spectral_norm(t)
        if s > 0:
            t = t / s
    return t


def random_a_unitary(ctx, seed=None, rng=None) -> np.ndarray:
    """Random A-unitary operator: unitary compression plus identity on ker A."""
    rng = _resolve_rng(seed, rng)
    ur, uk = _range_kernel_bases(ctx)
    wr = _random_unitary(ctx.rank, rng)
    u_op = semihilbert.uncompress(ctx, ur @ wr @ ur.conj().T)
    if uk.shape[1]:
        u_op = u_op + uk @ uk.conj().T
    return u_op


def random_nilpotent(n: int, rng) -> np.ndarray:
    """Random rank-one square-zero matrix x y* with x orthogonal to y, unit norm."""
    x = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    x /= np.linalg.norm(x)
    y = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    y -= x * (x.conj() @ y)
    y /= np.linalg.norm(y)
    return np.outer(x, y.conj())


def _range_nilpotent(ctx, rng) -> np.ndarray:
    """Nilpotent member supported on range(A), so that A T^2 = 0 exactly."""
    ur, _ = _range_kernel_bases(ctx)
    m = ur @ random_nilpotent(ctx.rank, rng) @ ur.conj().T
    t = semihilbert.uncompress(ctx, m)
    s = spectral_norm(t)
    return t / s if s > 0 else t


def _unit_vector(n, rng):
    v = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    return v / np.linalg.norm(v)


# ---------------------------------------------------------------------------
# check specification and outcomes


@dataclass
class InstanceOutcome:
    """Obligations produced by one check on one instance."""

    pairs: list                      # (lhs, rhs) obligations
    premise_held: Optional[bool] = None


@dataclass(frozen=True)
class CheckSpec:
    """One theorem as an executable predicate."""

    id: str
    statement: str
    kind: str                        # inequality | equality | conditional
    arity: str
    required_flags: frozenset
    seminorm_ids: tuple
    generator: str
    evaluator: Callable
    max_instances: Optional[int] = None


@dataclass
class CheckResult:
    id: str
    statement: str
    kind: str
    seminorms: list
    instances_run: int = 0
    incomplete: int = 0
    violations: int = 0
    premise_held: Optional[int] = None
    max_violation: float = 0.0
    min_slack: Optional[float] = None
    worst_witness: Optional[dict] = None

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "statement": self.statement,
            "kind": self.kind,
            "seminorms": list(self.seminorms),
            "instances_run": self.instances_run,
            "incomplete": self.incomplete,
            "violations": self.violations,
            "premise_held": self.premise_held,
            "max_violation": self.max_violation,
            "min_slack": self.min_slack,
            "worst_witness": self.worst_witness,
        }


@dataclass
class InstanceGenConfig:
    """Configuration of one suite run; fully determines its output."""

    dims: tuple = (2, 3, 4)
    rank_profiles: tuple = ("full", "n-1", "half")
    instances_per_check: int = 200
    seed: int = 42
    tol_rel: float = 1e-6
    rtol: float = DEFAULT_RTOL

    def __post_init__(self):
        if not self.dims or min(self.dims) < 2:
            raise ValueError("dims must all be at least 2")
        if self.instances_per_check < 1:
            raise ValueError("instances_per_check must be at least 1")
        for p in self.rank_profiles:
            if p not in _PROFILE_RANKS:
                raise ValueError(f"unknown rank profile {p!r}")


@dataclass
class SuiteReport:
    version: str
    config: dict
    checks: list
    violations_total: int
    incomplete_total: int

    def to_dict(self) -> dict:
        return {
            "tool": "shnr",
            "version": self.version,
            "config": self.config,
            "checks": [c.to_dict() for c in self.checks],
            "violations_total": self.violations_total,
            "incomplete_total": self.incomplete_total,
        }


def _ineq_slack(lhs: float, rhs: float) -> float:
    if lhs == rhs:
        return 0.0
    return (rhs - lhs) / max(rhs, _SLACK_FLOOR)


def _eq_slack(lhs: float, rhs: float) -> float:
    d = abs(lhs - rhs)
    if d == 0.0:
        return 0.0
    return -d / max(abs(lhs), abs(rhs), _SLACK_FLOOR)


def _slack(kind: str, lhs: float, rhs: float) -> float:
    return _ineq_slack(lhs, rhs) if kind == "inequality" else _eq_slack(lhs, rhs)


# ---------------------------------------------------------------------------
# evaluators: one per check, shared helpers first

_CFG64 = ThetaOptConfig(grid_points=64, refine_tol=1e-7, max_refine_iters=120)
_A_NORM = seminorms.a_norm_seminorm()


def _w(ctx, n_desc, t, cfg):
    return radius.generalized_radius(ctx, n_desc, t, cfg)


def _re_im(ctx, t):
    return re_a(ctx, t), im_a(ctx, t)


def _combo_re(r0, i0, th):
    return math.cos(th) * r0 - math.sin(th) * i0


def _combo_im(r0, i0, th):
    return math.cos(th) * i0 + math.sin(th) * r0


def _eval_c01(ctx, mats, n_desc, cfg):
    t = mats["T"]
    w = _w(ctx, n_desc, t, cfg)
    r0, i0 = _re_im(ctx, t)
    lhs = n_desc.evaluate(ctx, t) / 2 + abs(
        n_desc.evaluate(ctx, r0) - n_desc.evaluate(ctx, i0)
    ) / 2
    return InstanceOutcome([(lhs, w)])


def _eval_c02(ctx, mats, n_desc, cfg):
    t = mats["T"]
    w = _w(ctx, n_desc, t, cfg)
    r0, i0 = _re_im(ctx, t)

    def gap(th):
        return abs(
            n_desc.evaluate(ctx, _combo_re(r0, i0, th))
            - n_desc.evaluate(ctx, _combo_im(r0, i0, th))
        )

    _, sup_gap = radius.sup_on_circle(gap, math.pi, _CFG64)
    lhs = n_desc.evaluate(ctx, t) / 2 + sup_gap / 2
    return InstanceOutcome([(lhs, w)])


def _eval_c03(ctx, mats, n_desc, cfg):
    t = mats["T"]
    w = _w(ctx, n_desc, t, cfg)
    nt = n_desc.evaluate(ctx, t)
    pairs = [(nt / 2, w)]
    if n_desc.selfadjoint_invariant:
        pairs.append((w, nt))
    return InstanceOutcome(pairs)


def _eval_c04(ctx, mats, n_desc, cfg):
    t = mats["T"]
    w_t = _w(ctx, n_desc, t, cfg)
    pairs = [(w_t, _w(ctx, n_desc, a_adjoint(ctx, t), cfg))]
    if n_desc.base_id == "a_norm" and "U" in mats:
        u = mats["U"]
        conj = a_adjoint(ctx, u) @ t @ u
        pairs.append((_w(ctx, n_desc, conj, cfg), w_t))
    return InstanceOutcome(pairs)


def _eval_c05(ctx, mats, n_desc, cfg):
    t = mats["T"]
    w = _w(ctx, n_desc, t, cfg)
    c = a_adjoint(ctx, t)
    q = n_desc.evaluate(ctx, c @ t + t @ c)
    r0, i0 = _re_im(ctx, t)
    gap = abs(n_desc.evaluate(ctx, r0) ** 2 - n_desc.evaluate(ctx, i0) ** 2)
    return InstanceOutcome([(math.sqrt(q / 4 + gap / 2), w)])


def _eval_c06(ctx, mats, n_desc, cfg):
    t = mats["T"]
    w = _w(ctx, n_desc, t, cfg)
    c = a_adjoint(ctx, t)
    q = n_desc.evaluate(ctx, c @ t + t @ c)
    pairs = [(math.sqrt(q) / 2, w)]
    if n_desc.a_increasing and n_desc.power_property:
        pairs.append((w, math.sqrt(2 * q) / 2))
    return InstanceOutcome(pairs)


def _eval_c07(ctx, mats, n_desc, cfg):
    t = mats["T"]
    w = _w(ctx, n_desc, t, cfg)
    r0, i0 = _re_im(ctx, t)
    rhs_plain = math.hypot(n_desc.evaluate(ctx, r0), n_desc.evaluate(ctx, i0))

    def euclid(th):
        return -math.hypot(
            n_desc.evaluate(ctx, _combo_re(r0, i0, th)),
            n_desc.evaluate(ctx, _combo_im(r0, i0, th)),
        )

    _, neg_inf = radius.sup_on_circle(euclid, math.pi, _CFG64)
    return InstanceOutcome([(w, rhs_plain), (w, -neg_inf)])


def _eval_c08(ctx, mats, n_desc, cfg):
    t = mats["T"]
    w = _w(ctx, n_desc, t, cfg)
    c = a_adjoint(ctx, t)
    q = n_desc.evaluate(ctx, c @ t + t @ c)
    w2 = _w(ctx, n_desc, t @ t, cfg)
    return InstanceOutcome([(w, math.sqrt(0.5 * w2 + 0.25 * q))])


def _eval_c09(ctx, mats, n_desc, cfg):
    t = mats["T"]
    w = _w(ctx, n_desc, t, cfg)
    c = a_adjoint(ctx, t)
    q = n_desc.evaluate(ctx, c @ t + t @ c)
    w2 = _w(ctx, n_desc, t @ t, cfg)
    return InstanceOutcome([(w, (q * q / 8 + w2 * w2 / 2) ** 0.25)])


def _eval_c10(ctx, mats, n_desc, cfg):
    t = mats["T"]
    return InstanceOutcome([(_w(ctx, n_desc, t, cfg), n_desc.evaluate(ctx, t))])


def _eval_c11(ctx, mats, n_desc, cfg):
    t = mats["T"]
    w = _w(ctx, n_desc, t, cfg)
    return InstanceOutcome(
        [
            (w, _w(ctx, n_desc, ctx.proj @ t, cfg)),
            (w, _w(ctx, n_desc, t @ ctx.proj, cfg)),
        ]
    )


def _eval_c12(ctx, mats, n_desc, cfg):
    t, s = mats["T"], mats["S"]
    w_ts = _w(ctx, n_desc, t @ s, cfg)
    ts_adj = a_adjoint(ctx, t)
    ss_adj = a_adjoint(ctx, s)
    n_t = n_desc.evaluate(ctx, t)
    n_s = n_desc.evaluate(ctx, s)
    w_t = _w(ctx, n_desc, t, cfg)
    w_s = _w(ctx, n_desc, s, cfg)
    pairs = []
    for sgn in (1.0, -1.0):
        pairs.append(
            (w_ts, n_t * w_s + 0.5 * _w(ctx, n_desc, t @ s + sgn * (s @ ts_adj), cfg))
        )
        pairs.append(
            (w_ts, n_s * w_t + 0.5 * _w(ctx, n_desc, t @ s + sgn * (ss_adj @ t), cfg))
        )
    return InstanceOutcome(pairs)


def _eval_c13(ctx, mats, n_desc, cfg):
    t, s = mats["T"], mats["S"]
    ts_adj = a_adjoint(ctx, t)
    bound = 2 * n_desc.evaluate(ctx, t) * _w(ctx, n_desc, s, cfg)
    pairs = [
        (_w(ctx, n_desc, t @ s + sgn * (s @ ts_adj), cfg), bound)
        for sgn in (1.0, -1.0)
    ]
    return InstanceOutcome(pairs)


def _eval_c14(ctx, mats, n_desc, cfg):
    t, s = mats["T"], mats["S"]
    w_t = _w(ctx, n_desc, t, cfg)
    w_s = _w(ctx, n_desc, s, cfg)
    mid = 2 * min(w_t * n_desc.evaluate(ctx, s), w_s * n_desc.evaluate(ctx, t))
    return InstanceOutcome(
        [(_w(ctx, n_desc, t @ s, cfg), mid), (mid, 4 * w_t * w_s)]
    )


def _eval_c15(ctx, mats, n_desc, cfg):
    t, s, x = mats["T"], mats["S"], mats["X"]
    ts_adj = a_adjoint(ctx, t)
    ss_adj = a_adjoint(ctx, s)
    bound = 2 * n_desc.evaluate(ctx, t) * n_desc.evaluate(ctx, s) * _w(ctx, n_desc, x, cfg)
    pairs = [
        (_w(ctx, n_desc, t @ x @ s + sgn * (ss_adj @ x @ ts_adj), cfg), bound)
        for sgn in (1.0, -1.0)
    ]
    return InstanceOutcome(pairs)


def _eval_c16(ctx, mats, n_desc, cfg):
    t = mats["T"]
    x = mats["X"]
    ts_adj = a_adjoint(ctx, t)
    bound = n_desc.evaluate(ctx, t) ** 2 * _w(ctx, n_desc, x, cfg)
    return InstanceOutcome(
        [
            (_w(ctx, n_desc, t @ x @ ts_adj, cfg), bound),
            (_w(ctx, n_desc, ts_adj @ x @ t, cfg), bound),
        ]
    )


def _eval_c17(ctx, mats, n_desc, cfg):
    t = mats["T"]
    na = a_operator_norm(ctx, t)
    wa = radius.omega_a_fast(ctx, t, cfg)
    return InstanceOutcome([(na / 2, wa), (wa, na)])


def _eval_c18(ctx, mats, n_desc, cfg):
    t = mats["T"]
    c = a_adjoint(ctx, t)
    rhs = a_operator_norm(ctx, t) ** 2
    return InstanceOutcome(
        [(a_operator_norm(ctx, c @ t), rhs), (a_operator_norm(ctx, t @ c), rhs)]
    )


def _eval_c19(ctx, mats, n_desc, cfg):
    va = np.ravel(mats["a"])
    vb = np.ravel(mats["b"])
    vc = np.ravel(mats["c"])
    lhs = (
        abs(semihilbert.a_inner(ctx, va, vc)) ** 2
        + abs(semihilbert.a_inner(ctx, vb, vc)) ** 2
    )
    na2 = semihilbert.a_norm_vec(ctx, va) ** 2
    nb2 = semihilbert.a_norm_vec(ctx, vb) ** 2
    rhs = semihilbert.a_norm_vec(ctx, vc) ** 2 * (
        max(na2, nb2) + abs(semihilbert.a_inner(ctx, va, vb))
    )
    return InstanceOutcome([(lhs, rhs)])


def _eval_c20(ctx, mats, n_desc, cfg):
    h = re_a(ctx, mats["T"])
    return InstanceOutcome([(n_desc.evaluate(ctx, h), a_operator_norm(ctx, h))])


def _eval_c21(ctx, mats, n_desc, cfg):
    t = mats["T"]
    return InstanceOutcome(
        [(_w(ctx, n_desc, t, cfg), radius.omega_a_fast(ctx, t, cfg))]
    )


def _eval_c22(ctx, mats, n_desc, cfg):
    t = mats["T"]
    na = a_operator_norm(ctx, t)
    om = n_desc.evaluate(ctx, t)
    gam = seminorms.gamma_a(ctx, t, cfg)
    return InstanceOutcome([(na, om), (om, gam), (gam, _SQRT2 * na)])


def _eval_c23(ctx, mats, n_desc, cfg):
    t = mats["T"]
    return InstanceOutcome(
        [(n_desc.evaluate(ctx, t), _SQRT2 * a_operator_norm(ctx, t))]
    )


def _eval_c24(ctx, mats, n_desc, cfg):
    t = mats["T"]
    return InstanceOutcome(
        [(_w(ctx, n_desc, t, cfg), _SQRT2 * radius.omega_a_fast(ctx, t, cfg))]
    )


def _eval_c25(ctx, mats, n_desc, cfg):
    t = mats["T"]
    return InstanceOutcome(
        [(_w(ctx, n_desc, t, cfg), n_desc.evaluate(ctx, t))]
    )


def _eval_c26(ctx, mats, n_desc, cfg):
    t = mats["T"]
    target = 2 * _SQRT2
    return InstanceOutcome(
        [
            (n_desc.evaluate(ctx, t), target),
            (_w(ctx, n_desc, t, cfg), target),
            (seminorms.big_omega_pair_form(ctx, t), target),
        ]
    )


def _eval_c27(ctx, mats, n_desc, cfg):
    t = mats["T"]
    w = _w(ctx, n_desc, t, cfg)
    nt = n_desc.evaluate(ctx, t)
    c = a_adjoint(ctx, t)
    q = n_desc.evaluate(ctx, c @ t + t @ c)
    r0, i0 = _re_im(ctx, t)
    thetas = np.linspace(0.0, math.pi, 64, endpoint=False)
    tol = 1e-7 * max(1.0, nt)
    pairs = []
    held = False

    if abs(w - nt / 2) <= tol:  # lower-bound attainment forces flat angle profile
        held = True
        for th in thetas:
            pairs.append((n_desc.evaluate(ctx, _combo_re(r0, i0, th)), nt / 2))
            pairs.append((n_desc.evaluate(ctx, _combo_im(r0, i0, th)), nt / 2))

    target = math.sqrt(q) / 2
    if abs(w - target) <= tol:  # quadratic lower-bound attainment
        held = True
        for th in thetas:
            pairs.append((n_desc.evaluate(ctx, _combo_re(r0, i0, th)), target))
            pairs.append((n_desc.evaluate(ctx, _combo_im(r0, i0, th)), target))

    if n_desc.base_id == "big_omega" and abs(w - nt / 2) <= tol:
        for th in thetas:
            pairs.append(
                (nt, 2 * _SQRT2 * a_operator_norm(ctx, _combo_re(r0, i0, th)))
            )
    return InstanceOutcome(pairs, premise_held=held)


# ---------------------------------------------------------------------------
# generators keyed by name


def _make_ctx(n, profile, rng, rtol):
    a = random_psd(n, _PROFILE_RANKS[profile](n), rng=rng)
    return build_context(a, rtol)


def _gen_member(n, profile, rng, rtol, idx):
    ctx = _make_ctx(n, profile, rng, rtol)
    return ctx, {"T": random_member(ctx, rng=rng, unit_norm=True)}


def _gen_member_pair(n, profile, rng, rtol, idx):
    ctx = _make_ctx(n, profile, rng, rtol)
    return ctx, {
        "T": random_member(ctx, rng=rng, unit_norm=True),
        "S": random_member(ctx, rng=rng, unit_norm=True),
    }


def _gen_member_triple(n, profile, rng, rtol, idx):
    ctx = _make_ctx(n, profile, rng, rtol)
    return ctx, {
        "T": random_member(ctx, rng=rng, unit_norm=True),
        "S": random_member(ctx, rng=rng, unit_norm=True),
        "X": random_member(ctx, rng=rng, unit_norm=True),
    }


def _gen_member_tx(n, profile, rng, rtol, idx):
    ctx = _make_ctx(n, profile, rng, rtol)
    return ctx, {
        "T": random_member(ctx, rng=rng, unit_norm=True),
        "X": random_member(ctx, rng=rng, unit_norm=True),
    }


def _gen_vectors(n, profile, rng, rtol, idx):
    ctx = _make_ctx(n, profile, rng, rtol)
    return ctx, {
        "a": _unit_vector(n, rng),
        "b": _unit_vector(n, rng),
        "c": _unit_vector(n, rng),
    }


def _gen_a_selfadjoint(n, profile, rng, rtol, idx):
    ctx = _make_ctx(n, profile, rng, rtol)
    return ctx, {"T": random_a_selfadjoint(ctx, rng=rng, unit_norm=True)}


def _gen_a_normal(n, profile, rng, rtol, idx):
    ctx = _make_ctx(n, profile, rng, rtol)
    return ctx, {"T": random_a_normal(ctx, rng=rng, unit_norm=True)}


def _gen_member_with_unitary(n, profile, rng, rtol, idx):
    ctx = _make_ctx(n, profile, rng, rtol)
    return ctx, {
        "T": random_member(ctx, rng=rng, unit_norm=True),
        "U": random_a_unitary(ctx, rng=rng),
    }


def _gen_sharp_mix(n, profile, rng, rtol, idx):
    """Random members interleaved with both sharpness constructions."""
    ctx = _make_ctx(n, profile, rng, rtol)
    style = idx % 3
    if style == 1 and ctx.rank >= 2:
        return ctx, {"T": _range_nilpotent(ctx, rng)}
    if style == 2:
        return ctx, {"T": random_a_normal(ctx, rng=rng, unit_norm=True)}
    return ctx, {"T": random_member(ctx, rng=rng, unit_norm=True)}


def _gen_nilpotent_mix(n, profile, rng, rtol, idx):
    """Engineered premise instances (identity A, square-zero T) mixed with noise."""
    if idx % 2 == 0:
        ctx = build_context(np.eye(n), rtol)
        return ctx, {"T": random_nilpotent(n, rng)}
    ctx = _make_ctx(n, profile, rng, rtol)
    return ctx, {"T": random_member(ctx, rng=rng, unit_norm=True)}


_REMARK_T = np.array([[0, 1, 0], [0, 0, 0], [0, 0, 2]], dtype=np.complex128)


def _gen_pinned_remark(n, profile, rng, rtol, idx):
    ctx = build_context(np.eye(3), rtol)
    return ctx, {"T": _REMARK_T.copy()}


_GENERATORS = {
    "member": _gen_member,
    "member_pair": _gen_member_pair,
    "member_triple": _gen_member_triple,
    "member_tx": _gen_member_tx,
    "vectors": _gen_vectors,
    "a_selfadjoint": _gen_a_selfadjoint,
    "a_normal": _gen_a_normal,
    "member_with_unitary": _gen_member_with_unitary,
    "sharp_mix": _gen_sharp_mix,
    "nilpotent_mix": _gen_nilpotent_mix,
    "pinned_remark": _gen_pinned_remark,
}


# ---------------------------------------------------------------------------
# the catalog


def catalog() -> list:
    """The fixed list of 27 executable checks, in stable order."""
    no_flags = frozenset()
    sa = frozenset({"selfadjoint_invariant"})
    sub = frozenset({"submultiplicative"})
    sa_sub = frozenset({"selfadjoint_invariant", "submultiplicative"})
    inc_pow = frozenset({"a_increasing", "power_property"})

    specs = [
        CheckSpec(
            "C01",
            "w_N(T) >= N(T)/2 + |N(Re_A(T)) - N(Im_A(T))|/2",
            "inequality", "T", no_flags, ("a_norm",), "member", _eval_c01,
        ),
        CheckSpec(
            "C02",
            "w_N(T) >= N(T)/2 + sup_th |N(Re_A(e^{i th}T)) - N(Im_A(e^{i th}T))|/2",
            "inequality", "T", no_flags, ("a_norm",), "member", _eval_c02,
        ),
        CheckSpec(
            "C03",
            "N(T)/2 <= w_N(T) <= N(T), upper half for selfadjoint-invariant N",
            "inequality", "T", sa, ("a_norm", "big_omega"), "member", _eval_c03,
        ),
        CheckSpec(
            "C04",
            "w_N(T) = w_N(T#); and w_N(U# T U) = w_N(T) for A-unitary U under the A-norm",
            "equality", "T", sa, ("a_norm", "big_omega"), "member_with_unitary",
            _eval_c04,
        ),
        CheckSpec(
            "C05",
            "w_N(T) >= sqrt(N(T#T + TT#)/4 + |N^2(Re_A T) - N^2(Im_A T)|/2)",
            "inequality", "T", sub, ("a_norm",), "member", _eval_c05,
        ),
        CheckSpec(
            "C06",
            "sqrt(N(T#T + TT#))/2 <= w_N(T) <= sqrt(N(T#T + TT#)/2)",
            "inequality", "T", sub | inc_pow, ("a_norm",), "member", _eval_c06,
        ),
        CheckSpec(
            "C07",
            "w_N(T) <= inf_th sqrt(N^2(Re_A(e^{i th}T)) + N^2(Im_A(e^{i th}T)))",
            "inequality", "T", no_flags, ("a_norm",), "member", _eval_c07,
        ),
        CheckSpec(
            "C08",
            "w_N(T) <= sqrt(w_N(T^2)/2 + N(T#T + TT#)/4)",
            "inequality", "T", frozenset({"power_property"}), ("a_norm",),
            "member", _eval_c08,
        ),
        CheckSpec(
            "C09",
            "w_N(T) <= (N^2(T#T + TT#)/8 + w_N^2(T^2)/2)^(1/4)",
            "inequality", "T", inc_pow, ("a_norm",), "member", _eval_c09,
        ),
        CheckSpec(
            "C10",
            "w_N(T) = N(T) for A-selfadjoint T",
            "equality", "T", sa, ("a_norm", "big_omega"), "a_selfadjoint", _eval_c10,
        ),
        CheckSpec(
            "C11",
            "w_N(T) = w_N(P T) = w_N(T P) for the range projector P",
            "equality", "T", sa, ("a_norm",), "member", _eval_c11,
        ),
        CheckSpec(
            "C12",
            "w_N(TS) <= N(T) w_N(S) + w_N(TS +- S T#)/2 and the mirrored form",
            "inequality", "T,S", sa_sub, ("a_norm",), "member_pair", _eval_c12,
        ),
        CheckSpec(
            "C13",
            "w_N(TS +- S T#) <= 2 N(T) w_N(S)",
            "inequality", "T,S", sa_sub, ("a_norm",), "member_pair", _eval_c13,
        ),
        CheckSpec(
            "C14",
            "w_N(TS) <= 2 min(w_N(T) N(S), w_N(S) N(T)) <= 4 w_N(T) w_N(S)",
            "inequality", "T,S", sa_sub, ("a_norm",), "member_pair", _eval_c14,
        ),
        CheckSpec(
            "C15",
            "w_N(T X S +- S# X T#) <= 2 N(T) N(S) w_N(X)",
            "inequality", "T,S,X", sa_sub, ("a_norm",), "member_triple", _eval_c15,
        ),
        CheckSpec(
            "C16",
            "w_N(T X T#) <= N^2(T) w_N(X) and w_N(T# X T) <= N^2(T) w_N(X)",
            "inequality", "T,X", sa_sub, ("a_norm",), "member_tx", _eval_c16,
        ),
        CheckSpec(
            "C17",
            "|T|_A / 2 <= w_A(T) <= |T|_A with sharpness constructions mixed in",
            "inequality", "T", no_flags, ("a_norm",), "sharp_mix", _eval_c17,
        ),
        CheckSpec(
            "C18",
            "|T# T|_A = |T T#|_A = |T|_A^2",
            "equality", "T", no_flags, ("a_norm",), "member", _eval_c18,
        ),
        CheckSpec(
            "C19",
            "|<a,c>_A|^2 + |<b,c>_A|^2 <= |c|_A^2 (max(|a|_A^2, |b|_A^2) + |<a,b>_A|)",
            "inequality", "a,b,c", no_flags, ("a_norm",), "vectors", _eval_c19,
        ),
        CheckSpec(
            "C20",
            "|Re_A(T)|_{A,alpha} = |Re_A(T)|_A",
            "equality", "T", no_flags, ("a_alpha",), "member", _eval_c20,
        ),
        CheckSpec(
            "C21",
            "w under |.|_{A,alpha} equals w_A",
            "equality", "T", no_flags, ("a_alpha",), "member", _eval_c21,
        ),
        CheckSpec(
            "C22",
            "|T|_A <= Omega_A(T) <= gamma_A(T) <= sqrt(2) |T|_A",
            "inequality", "T", no_flags, ("big_omega",), "member", _eval_c22,
        ),
        CheckSpec(
            "C23",
            "Omega_A(T) = sqrt(2) |T|_A for A-selfadjoint T",
            "equality", "T", sa, ("big_omega",), "a_selfadjoint", _eval_c23,
        ),
        CheckSpec(
            "C24",
            "w under Omega_A equals sqrt(2) w_A",
            "equality", "T", sa, ("big_omega",), "member", _eval_c24,
        ),
        CheckSpec(
            "C25",
            "w under Omega_A equals Omega_A for A-normal T",
            "equality", "T", sa, ("big_omega",), "a_normal", _eval_c25,
        ),
        CheckSpec(
            "C26",
            "pinned 3x3 instance: Omega = w_Omega = 2 sqrt(2), via grid and pair forms",
            "equality", "T", sa, ("big_omega",), "pinned_remark", _eval_c26,
            max_instances=1,
        ),
        CheckSpec(
            "C27",
            "attainment equivalences: when w_N hits a lower bound, the angle profile is flat",
            "conditional", "T", no_flags, ("a_norm", "big_omega"), "nilpotent_mix",
            _eval_c27,
        ),
    ]
    assert len(specs) == 27
    return specs


# ---------------------------------------------------------------------------
# the runner


def _expand_seminorms(ids, alphas, omega_t_grid, omega_psi_grid):
    out = []
    for base in ids:
        if base == "a_norm":
            out.append(seminorms.a_norm_seminorm())
        elif base == "big_omega":
            out.append(seminorms.big_omega_seminorm(omega_t_grid, omega_psi_grid))
        elif base == "a_alpha":
            out.extend(seminorms.a_alpha_seminorm(a) for a in alphas)
        else:
            raise KeyError(f"unknown seminorm id {base!r}")
    return out


def _witness_dict(n_desc, dim, profile, idx, slack, lhs, rhs, a_mat, mats):
    matrices = {"A": serialize.matrix_to_dict(a_mat)}
    for key, m in mats.items():
        matrices[key] = serialize.matrix_to_dict(
            np.atleast_2d(m).T if np.asarray(m).ndim == 1 else m
        )
    return {
        "seminorm": n_desc.base_id,
        "alpha": n_desc.alpha,
        "dim": dim,
        "rank_profile": profile,
        "instance_index": idx,
        "slack": slack,
        "lhs": lhs,
        "rhs": rhs,
        "matrices": matrices,
    }


def _run_one_instance(spec, cfg, grid, sems, theta_cfg, idx):
    dim, profile = grid[idx % len(grid)]
    n_desc = sems[(idx // len(grid)) % len(sems)]
    rng = np.random.default_rng(
        np.random.SeedSequence([cfg.seed, int(spec.id[1:]), idx])
    )
    ctx, mats = _GENERATORS[spec.generator](dim, profile, rng, cfg.rtol, idx)
    outcome = spec.evaluator(ctx, mats, n_desc, theta_cfg)
    return dim, profile, n_desc, ctx, mats, outcome


def run_suite(
    cfg: InstanceGenConfig,
    only=None,
    threads: int = 1,
    theta_grid: int = 180,
    omega_t_grid: int = 180,
    omega_psi_grid: int = 360,
    alphas=(0.0, 0.25, 0.5, 0.75, 1.0),
) -> SuiteReport:
    """Run the catalog over seeded random instances and aggregate slacks.

    Deterministic for a fixed config: per-instance seeds derive from
    (seed, check number, instance index), aggregation is index-ordered, so
    the report bytes do not depend on ``threads``.
    """
    specs = catalog()
    if only:
        wanted = set(only)
        unknown = wanted - {s.id for s in specs}
        if unknown:
            raise KeyError(f"unknown check ids: {sorted(unknown)}")
        specs = [s for s in specs if s.id in wanted]
    grid = [(n, p) for n in cfg.dims for p in cfg.rank_profiles]
    theta_cfg = ThetaOptConfig(grid_points=theta_grid)

    results = []
    for spec in specs:
        sems = _expand_seminorms(
            spec.seminorm_ids, alphas, omega_t_grid, omega_psi_grid
        )
        res = CheckResult(
            id=spec.id,
            statement=spec.statement,
            kind=spec.kind,
            seminorms=[s.id for s in sems],
            premise_held=0 if spec.kind == "conditional" else None,
        )
        total = cfg.instances_per_check
        if spec.max_instances is not None:
            total = min(total, spec.max_instances)

        def work(idx, _spec=spec, _sems=sems):
            try:
                return idx, _run_one_instance(_spec, cfg, grid, _sems, theta_cfg, idx), None
            except (ShnrError, np.linalg.LinAlgError) as exc:
                return idx, None, f"{type(exc).__name__}: {exc}"

        if threads > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                raw = list(pool.map(work, range(total)))
        else:
            raw = [work(i) for i in range(total)]

        worst = None
        for idx, payload, err in raw:
            if err is not None:
                res.incomplete += 1
                continue
            dim, profile, n_desc, ctx, mats, outcome = payload
            res.instances_run += 1
            if outcome.premise_held is not None and outcome.premise_held:
                res.premise_held += 1
            if not outcome.pairs:
                continue
            slacks = [_slack(spec.kind, float(l), float(r)) for l, r in outcome.pairs]
            k = int(np.argmin(slacks))
            s_min = float(slacks[k])
            if res.min_slack is None or s_min < res.min_slack:
                res.min_slack = s_min
                lhs, rhs = outcome.pairs[k]
                worst = _witness_dict(
                    n_desc, dim, profile, idx, s_min, float(lhs), float(rhs),
                    ctx.a, mats,
                )
            if s_min < -cfg.tol_rel:
                res.violations += 1
                res.max_violation = max(res.max_violation, -s_min)
        res.worst_witness = worst
        results.append(res)

    config_echo = {
        "seed": cfg.seed,
        "dims": list(cfg.dims),
        "rank_profiles": list(cfg.rank_profiles),
        "instances_per_check": cfg.instances_per_check,
        "tol_rel": cfg.tol_rel,
        "rtol": cfg.rtol,
        "theta_grid": theta_grid,
        "omega_t_grid": omega_t_grid,
        "omega_psi_grid": omega_psi_grid,
        "alphas": list(alphas),
        "only": sorted(only) if only else None,
    }
    return SuiteReport(
        version=__version__,
        config=config_echo,
        checks=results,
        violations_total=sum(r.violations for r in results),
        incomplete_total=sum(r.incomplete for r in results),
    )


def replay_witness(report: dict, check_id: str) -> float:
    """Re-evaluate the stored worst witness of a check from a report dict.

    Rebuilds the context and seminorm from the serialized matrices and the
    report's config echo, reruns the check evaluator, and returns the
    minimum slack, which must reproduce the recorded one.
    """
    spec = {s.id: s for s in catalog()}[check_id]
    entry = next(c for c in report["checks"] if c["id"] == check_id)
    wit = entry["worst_witness"]
    if wit is None:
        raise ValueError(f"check {check_id} recorded no witness")
    conf = report["config"]
    mats_in = wit["matrices"]
    ctx = build_context(serialize.matrix_from_dict(mats_in["A"]), conf["rtol"])
    mats = {
        k: serialize.matrix_from_dict(v) for k, v in mats_in.items() if k != "A"
    }
    if spec.generator == "vectors":
        mats = {k: np.ravel(v) for k, v in mats.items()}
    base = wit["seminorm"]
    if base == "a_alpha":
        n_desc = seminorms.a_alpha_seminorm(wit["alpha"])
    elif base == "big_omega":
        n_desc = seminorms.big_omega_seminorm(
            conf["omega_t_grid"], conf["omega_psi_grid"]
        )
    else:
        n_desc = seminorms.a_norm_seminorm()
    theta_cfg = ThetaOptConfig(grid_points=conf["theta_grid"])
    outcome = spec.evaluator(ctx, mats, n_desc, theta_cfg)
    return min(_slack(spec.kind, float(l), float(r)) for l, r in outcome.pairs)
