import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

import shnr
from shnr import (
    DimensionMismatchError,
    NotHermitianError,
    NotMemberError,
    NotPositiveError,
    ZeroOperatorError,
    a_adjoint,
    a_inner,
    a_norm_vec,
    a_operator_norm,
    build_context,
    compress,
    im_a,
    is_a_normal,
    is_a_positive,
    is_a_selfadjoint,
    is_a_unitary,
    is_member,
    membership_residual,
    omega_a,
    re_a,
    spectral_norm,
    uncompress,
    verify,
)
from conftest import ctx_grid, make_ctx

from oracles import vector_ascent_omega

REMARK_T = np.array([[0, 1, 0], [0, 0, 0], [0, 0, 2]], dtype=complex)


class TestBuildContext:
    def test_identity(self):
        ctx = build_context(np.eye(2))
        assert ctx.rank == 2
        np.testing.assert_allclose(ctx.proj, np.eye(2))
        np.testing.assert_allclose(ctx.half, np.eye(2))

    def test_rank_deficient_diag(self):
        ctx = build_context(np.diag([1.0, 0.0]))
        assert ctx.rank == 1
        np.testing.assert_allclose(ctx.proj, np.diag([1.0, 0.0]), atol=1e-14)

    def test_rejects_indefinite(self):
        with pytest.raises(NotPositiveError):
            build_context(np.diag([-1.0, 1.0]))

    def test_rejects_zero(self):
        with pytest.raises(ZeroOperatorError):
            build_context(np.zeros((3, 3)))

    def test_rejects_non_hermitian(self):
        with pytest.raises(NotHermitianError):
            build_context(np.array([[1.0, 1.0], [0.0, 1.0]]))

    @pytest.mark.parametrize("ctx", ctx_grid(), ids=lambda c: f"n{c.dim}r{c.rank}")
    def test_derived_matrix_invariants(self, ctx):
        tol = 10 * ctx.rtol * ctx.scale
        assert spectral_norm(ctx.half @ ctx.half - ctx.a) <= tol
        assert spectral_norm(ctx.half @ ctx.half_pinv - ctx.proj) <= tol
        assert spectral_norm(ctx.proj @ ctx.a - ctx.a) <= tol
        assert spectral_norm(ctx.a @ ctx.proj - ctx.a) <= tol
        assert spectral_norm(ctx.a @ ctx.a_pinv - ctx.proj) <= tol


class TestAInner:
    def test_reduces_to_euclidean(self, identity_ctx2):
        x = np.array([1.0, 2.0j])
        y = np.array([3.0, -1.0])
        assert a_inner(identity_ctx2, x, y) == pytest.approx(
            np.vdot(y, x), abs=1e-14
        )

    def test_kernel_direction_vanishes(self, degenerate_ctx):
        x = np.array([0.0, 1.0])
        assert a_inner(degenerate_ctx, x, x) == pytest.approx(0.0, abs=1e-15)
        assert a_norm_vec(degenerate_ctx, x) == 0.0

    def test_dimension_mismatch(self, identity_ctx2):
        with pytest.raises(DimensionMismatchError):
            a_inner(identity_ctx2, np.ones(3), np.ones(2))

    @given(
        arrays(np.float64, (4, 3), elements=st.floats(-3, 3)),
        arrays(np.float64, (4, 3), elements=st.floats(-3, 3)),
    )
    def test_conjugate_symmetry(self, re, im):
        ctx = make_ctx(3, 2, seed=1)
        x = re[0] + 1j * im[0]
        y = re[1] + 1j * im[1]
        lhs = a_inner(ctx, x, y)
        rhs = np.conj(a_inner(ctx, y, x))
        assert abs(lhs - rhs) <= 1e-12 * (1 + abs(lhs))


class TestMembership:
    def test_invertible_a_accepts_everything(self, identity_ctx2):
        assert is_member(identity_ctx2, np.array([[0, 1], [0, 0]]))

    def test_degenerate_rejects_kernel_breaker(self, degenerate_ctx):
        t = np.array([[0.0, 1.0], [0.0, 0.0]])
        assert not is_member(degenerate_ctx, t)
        assert membership_residual(degenerate_ctx, t) == pytest.approx(1.0)

    def test_degenerate_accepts_kernel_preserver(self, degenerate_ctx):
        assert is_member(degenerate_ctx, np.array([[2.0, 0.0], [3.0, 7.0]]))

    def test_generator_sweep(self):
        ctx = make_ctx(4, 2, seed=3)
        rng = np.random.default_rng(17)
        for _ in range(1000):
            assert is_member(ctx, verify.random_member(ctx, rng=rng))


class TestAAdjoint:
    def test_identity_gives_conjugate_transpose(self, identity_ctx3):
        t = np.arange(9, dtype=complex).reshape(3, 3) + 1j
        np.testing.assert_allclose(a_adjoint(identity_ctx3, t), t.conj().T)

    def test_degenerate_example(self, degenerate_ctx):
        t = np.array([[2.0, 0.0], [3.0, 7.0]])
        adj = a_adjoint(degenerate_ctx, t)
        np.testing.assert_allclose(adj, np.array([[2.0, 0.0], [0.0, 0.0]]), atol=1e-12)
        # defining equation A T# = T* A
        np.testing.assert_allclose(
            degenerate_ctx.a @ adj, t.conj().T @ degenerate_ctx.a, atol=1e-12
        )

    def test_rejects_non_member(self, degenerate_ctx):
        with pytest.raises(NotMemberError):
            a_adjoint(degenerate_ctx, np.array([[0.0, 1.0], [0.0, 0.0]]))

    @pytest.mark.parametrize("ctx", ctx_grid(1), ids=lambda c: f"n{c.dim}r{c.rank}")
    def test_double_adjoint_is_two_sided_compression(self, ctx):
        t = verify.random_member(ctx, seed=5)
        dbl = a_adjoint(ctx, a_adjoint(ctx, t))
        np.testing.assert_allclose(dbl, ctx.proj @ t @ ctx.proj, atol=1e-10)

    @pytest.mark.parametrize("ctx", ctx_grid(2), ids=lambda c: f"n{c.dim}r{c.rank}")
    def test_defining_equation_and_range(self, ctx):
        t = verify.random_member(ctx, seed=6)
        adj = a_adjoint(ctx, t)
        assert spectral_norm(ctx.a @ adj - t.conj().T @ ctx.a) <= 1e-10
        assert spectral_norm(ctx.proj @ adj - adj) <= 1e-10
        assert spectral_norm(adj @ ctx.proj - adj) <= 1e-10


class TestReIm:
    def test_hermitian_with_identity(self, identity_ctx2):
        t = np.array([[1.0, 2.0], [2.0, -1.0]])
        np.testing.assert_allclose(re_a(identity_ctx2, t), t)
        np.testing.assert_allclose(im_a(identity_ctx2, t), np.zeros((2, 2)), atol=1e-15)

    def test_nilpotent_formulas(self, identity_ctx2):
        t = np.array([[0.0, 1.0], [0.0, 0.0]])
        np.testing.assert_allclose(
            re_a(identity_ctx2, t), np.array([[0.0, 0.5], [0.5, 0.0]])
        )
        np.testing.assert_allclose(
            im_a(identity_ctx2, t), np.array([[0.0, -0.5j], [0.5j, 0.0]])
        )

    @pytest.mark.parametrize("ctx", ctx_grid(3), ids=lambda c: f"n{c.dim}r{c.rank}")
    def test_parts_are_a_selfadjoint_and_recombine(self, ctx):
        t = verify.random_member(ctx, seed=8)
        r0 = re_a(ctx, t)
        i0 = im_a(ctx, t)
        ar = ctx.a @ r0
        assert spectral_norm(ar - ar.conj().T) <= 1e-10
        assert is_a_selfadjoint(ctx, r0)
        assert is_a_selfadjoint(ctx, i0)
        # recombination is only visible to A: A (Re + i Im) = A T
        assert spectral_norm(ctx.a @ (r0 + 1j * i0) - ctx.a @ t) <= 1e-10


class TestCompress:
    def test_identity_is_noop(self, identity_ctx3):
        t = np.arange(9, dtype=complex).reshape(3, 3)
        np.testing.assert_allclose(compress(identity_ctx3, t), t)

    def test_degenerate_example(self, degenerate_ctx):
        t = np.array([[2.0, 0.0], [3.0, 7.0]])
        np.testing.assert_allclose(
            compress(degenerate_ctx, t), np.array([[2.0, 0.0], [0.0, 0.0]]), atol=1e-12
        )

    @pytest.mark.parametrize("ctx", ctx_grid(4), ids=lambda c: f"n{c.dim}r{c.rank}")
    def test_quadratic_form_identity(self, ctx):
        t = verify.random_member(ctx, seed=9)
        tt = compress(ctx, t)
        rng = np.random.default_rng(100)
        for _ in range(100):
            x = rng.standard_normal(ctx.dim) + 1j * rng.standard_normal(ctx.dim)
            lhs = a_inner(ctx, t @ x, x)
            y = ctx.half @ x
            rhs = np.vdot(y, tt @ y)
            assert abs(lhs - rhs) <= 1e-10 * (1 + abs(lhs))

    @pytest.mark.parametrize("ctx", ctx_grid(5), ids=lambda c: f"n{c.dim}r{c.rank}")
    def test_compress_of_adjoint_is_adjoint_of_compress(self, ctx):
        t = verify.random_member(ctx, seed=10)
        lhs = compress(ctx, a_adjoint(ctx, t))
        np.testing.assert_allclose(lhs, compress(ctx, t).conj().T, atol=1e-10)

    def test_uncompress_round_trip(self):
        ctx = make_ctx(4, 3, seed=11)
        m = np.random.default_rng(0).standard_normal((4, 4)) + 0j
        np.testing.assert_allclose(
            compress(ctx, uncompress(ctx, m)),
            ctx.proj @ m @ ctx.proj,
            atol=1e-10,
        )


class TestAOperatorNorm:
    def test_identity_nilpotent(self, identity_ctx2):
        assert a_operator_norm(identity_ctx2, np.array([[0, 1], [0, 0]])) == 1.0

    def test_kernel_block_invisible(self, degenerate_ctx):
        t = np.array([[2.0, 0.0], [3.0, 7.0]])
        assert a_operator_norm(degenerate_ctx, t) == pytest.approx(2.0, abs=1e-12)

    def test_rejects_non_member(self, degenerate_ctx):
        with pytest.raises(NotMemberError):
            a_operator_norm(degenerate_ctx, np.array([[0.0, 1.0], [0.0, 0.0]]))

    @pytest.mark.parametrize("ctx", ctx_grid(6), ids=lambda c: f"n{c.dim}r{c.rank}")
    def test_adjoint_product_identities(self, ctx):
        t = verify.random_member(ctx, seed=12, unit_norm=True)
        adj = a_adjoint(ctx, t)
        na = a_operator_norm(ctx, t)
        assert a_operator_norm(ctx, adj @ t) == pytest.approx(na**2, rel=1e-8)
        assert a_operator_norm(ctx, t @ adj) == pytest.approx(na**2, rel=1e-8)
        assert a_operator_norm(ctx, adj) == pytest.approx(na, rel=1e-8)

    @pytest.mark.parametrize("ctx", ctx_grid(7), ids=lambda c: f"n{c.dim}r{c.rank}")
    def test_submultiplicative_and_vector_bound(self, ctx):
        rng = np.random.default_rng(13)
        t = verify.random_member(ctx, rng=rng)
        s = verify.random_member(ctx, rng=rng)
        assert a_operator_norm(ctx, t @ s) <= (
            a_operator_norm(ctx, t) * a_operator_norm(ctx, s) + 1e-10
        )
        for _ in range(20):
            x = rng.standard_normal(ctx.dim) + 1j * rng.standard_normal(ctx.dim)
            assert a_norm_vec(ctx, t @ x) <= (
                a_operator_norm(ctx, t) * a_norm_vec(ctx, x) + 1e-10
            )


class TestOmegaA:
    def test_nilpotent_half(self, identity_ctx2):
        t = np.array([[0.0, 1.0], [0.0, 0.0]])
        assert omega_a(identity_ctx2, t) == pytest.approx(0.5, abs=1e-9)

    def test_block_example_equals_two(self, identity_ctx3):
        assert omega_a(identity_ctx3, REMARK_T) == pytest.approx(2.0, abs=1e-9)
        assert omega_a(identity_ctx3, REMARK_T) == pytest.approx(
            vector_ascent_omega(identity_ctx3, REMARK_T), abs=1e-6
        )

    @pytest.mark.parametrize("ctx", ctx_grid(8), ids=lambda c: f"n{c.dim}r{c.rank}")
    def test_sandwich_and_adjoint_invariance(self, ctx):
        t = verify.random_member(ctx, seed=14, unit_norm=True)
        na = a_operator_norm(ctx, t)
        w = omega_a(ctx, t)
        assert na / 2 - 1e-9 <= w <= na + 1e-9
        assert w == pytest.approx(omega_a(ctx, a_adjoint(ctx, t)), abs=1e-8)

    def test_a_selfadjoint_equality(self):
        ctx = make_ctx(3, 2, seed=15)
        t = verify.random_a_selfadjoint(ctx, seed=16, unit_norm=True)
        assert omega_a(ctx, t) == pytest.approx(
            a_operator_norm(ctx, t), abs=1e-8
        )

    def test_a_normal_equality(self):
        ctx = make_ctx(4, 3, seed=17)
        t = verify.random_a_normal(ctx, seed=18, unit_norm=True)
        assert omega_a(ctx, t) == pytest.approx(
            a_operator_norm(ctx, t), abs=1e-8
        )

    def test_sharp_nilpotent_case(self, identity_ctx2):
        t = np.array([[0.0, 3.0], [0.0, 0.0]])
        assert omega_a(identity_ctx2, t) == pytest.approx(
            a_operator_norm(identity_ctx2, t) / 2, abs=1e-8
        )


class TestPredicates:
    def test_identity_reduces_to_classical(self, identity_ctx2):
        h = np.array([[1.0, 2.0], [2.0, 3.0]])
        u = np.array([[0.0, 1.0], [-1.0, 0.0]])
        assert is_a_selfadjoint(identity_ctx2, h)
        assert not is_a_selfadjoint(identity_ctx2, u)
        assert is_a_positive(identity_ctx2, np.diag([1.0, 0.5]))
        assert not is_a_positive(identity_ctx2, np.diag([1.0, -0.5]))
        assert is_a_normal(identity_ctx2, u)
        assert is_a_unitary(identity_ctx2, u)

    def test_commuting_diagonals_are_a_normal(self):
        ctx = shnr.build_context(np.diag([2.0, 1.0, 0.0]))
        t = np.diag([1.0 + 1j, -2.0, 0.5])
        assert is_a_normal(ctx, t)

    def test_remark_matrix_not_normal(self, identity_ctx3):
        assert not is_a_normal(identity_ctx3, REMARK_T)

    @pytest.mark.parametrize("ctx", ctx_grid(9), ids=lambda c: f"n{c.dim}r{c.rank}")
    def test_constructed_classes_pass_their_predicates(self, ctx):
        rng = np.random.default_rng(19)
        assert is_a_selfadjoint(ctx, verify.random_a_selfadjoint(ctx, rng=rng))
        assert is_a_positive(ctx, verify.random_a_positive(ctx, rng=rng))
        assert is_a_normal(ctx, verify.random_a_normal(ctx, rng=rng))
        assert is_a_unitary(ctx, verify.random_a_unitary(ctx, rng=rng))
