import mpmath as mp
import pytest

from npcount import (
    NonConvergenceError,
    PrecisionContext,
    ZeroFileError,
    bundled_zeros,
    load_zeros,
    refine_catalog,
    refine_zero,
    zeta_with_derivative,
)
from npcount.zeros import _refine_history, validate_catalog

import golden


class TestLoading:
    def test_three_zero_file(self, tmp_path):
        f = tmp_path / "zeros.txt"
        f.write_text("14.134725\n21.022040\n25.010858\n")
        zs = load_zeros(f)
        assert len(zs) == 3
        assert all(not z.refined for z in zs)
        assert float(zs[0].t) == pytest.approx(14.134725)

    def test_comments_and_blanks(self, tmp_path):
        f = tmp_path / "zeros.txt"
        f.write_text("# header\n\n14.1347  # first\n21.0220\n")
        assert len(load_zeros(f)) == 2

    def test_empty_file(self, tmp_path):
        f = tmp_path / "zeros.txt"
        f.write_text("")
        assert load_zeros(f) == []

    def test_parse_error_reports_line(self, tmp_path):
        f = tmp_path / "zeros.txt"
        f.write_text("abc\n")
        with pytest.raises(ZeroFileError, match=":1:"):
            load_zeros(f)

    def test_non_monotonic_rejected(self, tmp_path):
        f = tmp_path / "zeros.txt"
        f.write_text("14.1\n14.1\n")
        with pytest.raises(ZeroFileError, match="increasing"):
            load_zeros(f)

    def test_nonpositive_rejected(self, tmp_path):
        f = tmp_path / "zeros.txt"
        f.write_text("-3.0\n")
        with pytest.raises(ZeroFileError):
            load_zeros(f)

    def test_missing_file(self, tmp_path):
        with pytest.raises(OSError):
            load_zeros(tmp_path / "nope.txt")

    def test_bundled_catalog(self):
        zs = bundled_zeros()
        assert len(zs) == 100
        validate_catalog(zs)
        for z, want in zip(zs, golden.ZERO_T_8DP):
            assert abs(z.t - mp.mpf(want)) < mp.mpf("1e-8")

    def test_validate_catalog_rejects_disorder(self):
        zs = bundled_zeros()[:3]
        with pytest.raises(ValueError):
            validate_catalog([zs[1], zs[0], zs[2]])


class TestRefinement:
    @pytest.mark.parametrize("seed,want", list(zip(("14.1347", "21.0220", "25.0109"),
                                                   golden.ZERO_T_8DP)))
    def test_golden_eight_decimals(self, ctx, seed, want):
        t = refine_zero(seed, ctx)
        assert abs(t - mp.mpf(want)) < mp.mpf("1e-8")

    def test_residual_contract(self, ctx):
        t = refine_zero("14.1347", ctx)
        with ctx.working():
            z, _ = zeta_with_derivative(mp.mpc(mp.mpf(1) / 2, t), ctx)
        assert abs(z) <= mp.mpf(2) ** (24 - ctx.bits)

    def test_residuals_quadratic(self, ctx):
        _, residuals = _refine_history("21.0220", ctx)
        floor = mp.mpf(2) ** (40 - ctx.bits)
        above = [r for r in residuals if r > floor]
        assert len(above) >= 3
        r0, r1, r2 = above[-3:]
        assert r1 <= r0 ** mp.mpf("1.8")
        assert r2 <= r1 ** mp.mpf("1.8")

    def test_refined_is_fixed_point(self, ctx):
        t = refine_zero("25.0109", ctx)
        assert refine_zero(t, ctx) == t

    def test_nonconvergence_is_reported(self):
        # an iteration budget of zero can never meet the residual target
        import npcount.zeros as zmod
        original = zmod.MAX_NEWTON_ITERATIONS
        zmod.MAX_NEWTON_ITERATIONS = 0
        try:
            with pytest.raises(NonConvergenceError):
                refine_zero("14.1347", PrecisionContext(64))
        finally:
            zmod.MAX_NEWTON_ITERATIONS = original

    def test_catalog_refinement_marks_and_preserves_order(self, ctx):
        zs = refine_catalog(bundled_zeros()[:5], ctx)
        assert all(z.refined for z in zs)
        validate_catalog(zs)
        refined_again = refine_catalog(zs, ctx)
        assert refined_again == zs
