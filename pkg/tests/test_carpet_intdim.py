"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: test_carpet_intdim.py
@DateTime: 2026-10-17
@Docs: Tests for carpet_intdim.py module.
carpet_intdim.py 模块测试。
"""

import math

import numpy as np
import pytest

from fractal_intdim.carpet_intdim import (
    ThetaGrid,
    asymptote_band,
    curve,
    dim_box,
    dim_derivatives,
    dim_hausdorff,
    intermediate_dim,
    main_equation_G,
    reduced_boundary_equation,
    snap_theta,
    t_prime,
    t_sequence,
    t_star,
    transition_gap_limit,
    transition_ratio,
    window_index,
)
from fractal_intdim.carpet_model import ColumnProfile, iterate_profile
from fractal_intdim.config import resolve_config
from fractal_intdim.exceptions import DomainError, IterateEscapeError
from fractal_intdim.rate_function import RateFn, lambda_of_t


class TestClassicalDimensions:
    """Tests for dim_H and dim_B.
    dim_H 与 dim_B 测试。
    """

    def test_fig_example(self, fig_profile: ColumnProfile) -> None:
        assert dim_hausdorff(fig_profile) == pytest.approx(1.34968, abs=5e-5)
        assert dim_box(fig_profile) == pytest.approx(1.36907, abs=5e-5)

    def test_uniform_fibres_coincide(self) -> None:
        p = ColumnProfile.from_counts(2, 4, [3, 3])
        assert dim_hausdorff(p) == pytest.approx(dim_box(p), abs=1e-14)


class TestWindows:
    """Tests for window_index and snap_theta.
    window_index 与 snap_theta 测试。
    """

    @pytest.mark.parametrize(("theta", "L"), [(1.0, 1), (0.7, 1), (0.5, 2), (0.3, 3), (0.01, 10)])
    def test_window_index(self, fig_profile: ColumnProfile, theta: float, L: int) -> None:
        assert window_index(fig_profile, theta) == L

    def test_transition_belongs_to_next_window(self, fig_profile: ColumnProfile) -> None:
        """theta = gamma^-L lies in window L+1 / theta = gamma^-L 属于第 L+1 个窗口。"""
        g = fig_profile.gamma
        for L in range(1, 6):
            assert window_index(fig_profile, g**-L) == L + 1

    def test_snap(self, fig_profile: ColumnProfile) -> None:
        g = fig_profile.gamma
        theta, k = snap_theta(fig_profile, g**-2 + 1e-14)
        assert k == 2
        assert theta == g**-2
        assert snap_theta(fig_profile, 0.5) == (0.5, None)

    def test_window_index_domain(self, fig_profile: ColumnProfile) -> None:
        with pytest.raises(DomainError):
            window_index(fig_profile, 0.0)


class TestTSequence:
    """Tests for the t-iteration.
    t 迭代测试。
    """

    def test_first_term(self, fig_profile: ColumnProfile) -> None:
        """t_1(s) = (s - log M/log m) log n / 首项公式。"""
        s = 1.36
        assert t_sequence(fig_profile, s, 1)[0] == pytest.approx((s - 1.0) * math.log(3), abs=1e-15)

    def test_escape_above(self, fig_profile: ColumnProfile) -> None:
        with pytest.raises(IterateEscapeError) as ei:
            t_sequence(fig_profile, 2.0, 3)
        assert ei.value.details["direction"] == "above"

    def test_escape_below(self, fig_profile: ColumnProfile) -> None:
        with pytest.raises(IterateEscapeError) as ei:
            t_sequence(fig_profile, 1.0, 2)
        assert ei.value.details["direction"] == "below"

    def test_non_decreasing_at_dim_h(self, fig_profile: ColumnProfile) -> None:
        """Orbit of dim_H increases towards t' / dim_H 的轨道向 t' 递增。"""
        ts = t_sequence(fig_profile, dim_hausdorff(fig_profile), 12)
        assert all(b >= a - 1e-15 for a, b in zip(ts, ts[1:], strict=False))
        assert ts[-1] <= t_prime(fig_profile) + 1e-12


class TestIntermediateDim:
    """Tests for intermediate_dim.
    intermediate_dim 测试。
    """

    def test_theta_one_is_box(self, fig_profile: ColumnProfile) -> None:
        assert intermediate_dim(fig_profile, 1.0) == dim_box(fig_profile)

    def test_range(self, fig_profile: ColumnProfile) -> None:
        d_h, d_b = dim_hausdorff(fig_profile), dim_box(fig_profile)
        for theta in (1e-4, 0.01, 0.1, 0.4, 0.9):
            s = intermediate_dim(fig_profile, theta)
            assert d_h < s < d_b

    def test_root_of_main_equation(self, fig_profile: ColumnProfile) -> None:
        for theta in (0.05, 0.3, 0.8):
            s = intermediate_dim(fig_profile, theta)
            assert main_equation_G(fig_profile, theta, s) == pytest.approx(0.0, abs=1e-9)

    def test_g_decreasing_in_s(self, fig_profile: ColumnProfile) -> None:
        theta = 0.4
        ss = np.linspace(dim_hausdorff(fig_profile) + 1e-3, dim_box(fig_profile), 20)
        vals = [main_equation_G(fig_profile, theta, float(s)) for s in ss]
        assert all(b < a for a, b in zip(vals, vals[1:], strict=False))

    def test_scan_matches_bisect(self, fig_profile: ColumnProfile) -> None:
        cfg = resolve_config(scan_points=256)
        for theta in (0.2, 0.7):
            a = intermediate_dim(fig_profile, theta, config=cfg)
            b = intermediate_dim(fig_profile, theta, method="scan", config=cfg)
            assert a == pytest.approx(b, abs=1e-10)

    def test_monotone(self, fig_profile: ColumnProfile) -> None:
        thetas = np.geomspace(1e-3, 1.0, 60)
        vals = [intermediate_dim(fig_profile, float(t)) for t in thetas]
        assert all(b >= a - 1e-12 for a, b in zip(vals, vals[1:], strict=False))

    def test_continuous_at_transitions(self, fig_profile: ColumnProfile) -> None:
        g = fig_profile.gamma
        for L in (1, 2, 3):
            at = intermediate_dim(fig_profile, g**-L)
            left = intermediate_dim(fig_profile, g**-L - 1e-9)
            right = intermediate_dim(fig_profile, g**-L + 1e-9)
            assert left == pytest.approx(at, abs=1e-7)
            assert right == pytest.approx(at, abs=1e-7)

    def test_reduced_boundary_form(self, fig_profile: ColumnProfile) -> None:
        """At theta = gamma^-(L-1) the boundary form vanishes at dim_theta / 边界形式在 dim_theta 处为零。"""
        g = fig_profile.gamma
        for L in (2, 3, 4):
            s = intermediate_dim(fig_profile, g ** -(L - 1))
            assert reduced_boundary_equation(fig_profile, L, s) == pytest.approx(0.0, abs=1e-9)

    def test_reduced_boundary_needs_l2(self, fig_profile: ColumnProfile) -> None:
        with pytest.raises(DomainError):
            reduced_boundary_equation(fig_profile, 1, 1.36)

    def test_invariant_under_iteration(self, fig_profile: ColumnProfile) -> None:
        """The iterated system describes the same set / 迭代系统描述同一集合。"""
        it = iterate_profile(fig_profile, 2)
        for theta in (0.05, 0.3, 0.7):
            assert intermediate_dim(it, theta) == pytest.approx(intermediate_dim(fig_profile, theta), abs=1e-9)

    def test_uniform_fibres_constant(self) -> None:
        p = ColumnProfile.from_counts(2, 4, [3, 3])
        assert intermediate_dim(p, 0.3) == dim_hausdorff(p)

    @pytest.mark.parametrize(("theta", "code"), [(0.0, "theta_domain"), (1.5, "theta_domain"), (1e-9, "theta_floor")])
    def test_theta_domain(self, fig_profile: ColumnProfile, theta: float, code: str) -> None:
        with pytest.raises(DomainError) as ei:
            intermediate_dim(fig_profile, theta)
        assert ei.value.error_code == code

    def test_curves_agree_above_one_half(self, half_equal_profiles: tuple[ColumnProfile, ColumnProfile]) -> None:
        """Different carpets, equal curves on [1/2, 1], different below / 不同载毯在 [1/2, 1] 上曲线相同。"""
        a, b = half_equal_profiles
        for theta in (0.5, 0.6, 0.75, 0.9, 1.0):
            assert intermediate_dim(a, theta) == pytest.approx(intermediate_dim(b, theta), abs=1e-9)
        gaps = [abs(intermediate_dim(a, t) - intermediate_dim(b, t)) for t in (1e-6, 1e-4, 1e-2, 0.1, 0.3)]
        assert max(gaps) > 1e-4


class TestDerivatives:
    """Tests for one-sided derivatives and phase transitions.
    单侧导数与相变测试。
    """

    def test_matches_finite_difference(self, fig_profile: ColumnProfile) -> None:
        h = 1e-6
        for theta in (0.2, 0.5, 0.8):
            d_minus, d_plus = dim_derivatives(fig_profile, theta)
            numeric = (intermediate_dim(fig_profile, theta + h) - intermediate_dim(fig_profile, theta - h)) / (2 * h)
            assert d_minus == d_plus
            assert d_minus == pytest.approx(numeric, abs=1e-5)

    def test_positive(self, fig_profile: ColumnProfile) -> None:
        for theta in (0.01, 0.3, 1.0):
            d_minus, d_plus = dim_derivatives(fig_profile, theta)
            assert d_minus > 0
            assert d_plus > 0

    def test_one_sided_at_transition(self, fig_profile: ColumnProfile) -> None:
        """Left derivative uses window L+1, right one window L / 左导数取第 L+1 窗口，右导数取第 L 窗口。"""
        g = fig_profile.gamma
        theta = g**-1
        d_minus, d_plus = dim_derivatives(fig_profile, theta)
        h = 1e-6
        at = intermediate_dim(fig_profile, theta)
        left = (at - intermediate_dim(fig_profile, theta - h)) / h
        right = (intermediate_dim(fig_profile, theta + h) - at) / h
        assert d_minus == pytest.approx(left, rel=1e-3)
        assert d_plus == pytest.approx(right, rel=1e-3)

    def test_transition_ratios(self, fig_profile: ColumnProfile) -> None:
        """Ratios exceed 1 and approach the limit / 比值大于 1 并趋于极限。"""
        limit = transition_gap_limit(fig_profile)
        assert limit > 1.0
        ratios = {L: transition_ratio(fig_profile, L) for L in range(1, 9)}
        assert all(r > 1.0 for r in ratios.values())
        assert abs(transition_ratio(fig_profile, 12) - limit) < abs(ratios[2] - limit)

    def test_t_prime_and_t_star(self, fig_profile: ColumnProfile) -> None:
        """t' < t* < t_high and I'(t') = 1/gamma / t' < t* < t_high 且 I'(t') = 1/gamma。"""
        tp, ts = t_prime(fig_profile), t_star(fig_profile)
        assert fig_profile.t_low < tp < ts < fig_profile.t_high
        rf = RateFn(profile=fig_profile)
        assert lambda_of_t(rf, tp) == pytest.approx(1.0 / fig_profile.gamma, abs=1e-10)

    def test_t_star_uniform(self) -> None:
        with pytest.raises(DomainError):
            t_star(ColumnProfile.from_counts(2, 4, [3, 3]))


class TestAsymptote:
    """Tests for the small-theta asymptote.
    小 theta 渐近测试。
    """

    def test_band(self, fig_profile: ColumnProfile) -> None:
        """(dim_theta - dim_H)(log theta)^2 stays in a factor-10 band / 保持在 10 倍带内。"""
        thetas = np.geomspace(1e-6, 1e-3, 8)
        c_hat, band = asymptote_band(fig_profile, thetas)
        assert c_hat >= 1.0
        assert np.all(band > 0)
        assert band.max() / band.min() <= 10.0
        assert np.all(band <= c_hat)
        assert np.all(band >= 1.0 / c_hat)

    def test_theta_1e4_inside_band(self, fig_profile: ColumnProfile) -> None:
        c_hat, _ = asymptote_band(fig_profile, np.geomspace(1e-6, 1e-3, 8))
        theta = 1e-4
        excess = (intermediate_dim(fig_profile, theta) - dim_hausdorff(fig_profile)) * math.log(theta) ** 2
        assert 1.0 / c_hat <= excess <= c_hat


class TestCurve:
    """Tests for ThetaGrid and curve.
    ThetaGrid 与 curve 测试。
    """

    def test_parse(self) -> None:
        grid = ThetaGrid.parse("0.01:1:50")
        assert (grid.theta_min, grid.theta_max, grid.count) == (0.01, 1.0, 50)
        assert grid.include_transitions

    @pytest.mark.parametrize("text", ["0.1:1", "a:b:c", "0.5:0.4:10", "0.1:1:1", "0:1:10"])
    def test_parse_rejects(self, text: str) -> None:
        with pytest.raises(DomainError) as ei:
            ThetaGrid.parse(text)
        assert ei.value.error_code == "bad_grid_spec"

    def test_transitions(self, fig_profile: ColumnProfile) -> None:
        g = fig_profile.gamma
        assert ThetaGrid(theta_min=0.2).transitions(g) == sorted([g**-3, g**-2, g**-1, 1.0])

    def test_samples_merge_transitions(self, fig_profile: ColumnProfile) -> None:
        g = fig_profile.gamma
        samples = ThetaGrid(theta_min=0.1, count=10).samples(g)
        assert np.all(np.diff(samples) > 0)
        assert g**-2 in samples
        plain = ThetaGrid(theta_min=0.1, count=10, include_transitions=False).samples(g)
        assert len(plain) == 10

    def test_log_spacing(self) -> None:
        samples = ThetaGrid(theta_min=1e-3, count=4, include_transitions=False, spacing="log").samples(2.0)
        assert samples == pytest.approx([1e-3, 1e-2, 1e-1, 1.0])

    def test_curve_rows(self, fig_profile: ColumnProfile) -> None:
        dc = curve(fig_profile, ThetaGrid(theta_min=0.05, count=12))
        rows = dc.to_rows()
        assert list(rows[0]) == ["theta", "dim", "L", "tL", "d_minus", "d_plus"]
        assert rows[-1]["theta"] == 1.0
        assert rows[-1]["dim"] == pytest.approx(1.36907, abs=5e-5)
        assert rows[-1]["L"] == 1
        assert np.all(np.diff(dc.values) >= -1e-12)
        assert fig_profile.gamma**-1 in dc.thetas
        assert dc.transitions == ThetaGrid(theta_min=0.05, count=12).transitions(fig_profile.gamma)

    def test_curve_explicit_thetas(self, fig_profile: ColumnProfile) -> None:
        """Explicit samples are snapped and sorted / 显式采样会被吸附并排序。"""
        g = fig_profile.gamma
        dc = curve(fig_profile, [0.9, g**-1 + 1e-14, 0.3])
        assert len(dc.thetas) == 3
        assert dc.thetas[1] == g**-1
        assert dc.L_index.tolist() == [3, 2, 1]

    def test_curve_uniform_warns(self) -> None:
        p = ColumnProfile.from_counts(2, 4, [3, 3])
        with pytest.warns(UserWarning, match="Uniform fibres"):
            dc = curve(p, ThetaGrid(theta_min=0.1, count=5, include_transitions=False))
        assert np.all(dc.values == dim_hausdorff(p))
