"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: test_bounds_families.py
@DateTime: 2026-10-17
@Docs: Tests for bounds_families.py module.
bounds_families.py 模块测试。
"""

import math

import numpy as np
import pytest

from fractal_intdim.bounds_families import (
    FamilyKind,
    FixedPointFamily,
    FixedPointKind,
    HSpec,
    SimilarityFamily,
    SimilarityKind,
    cifs_intdim,
    cifs_intdim_bounds,
    ctdfrac_dim,
    ctdfrac_finiteness,
    ctdfrac_holder_bound,
    family_curve,
    finiteness_parameter,
    hclass_check,
    lattice_dim,
    lipschitz_constant,
    lower_bound_from_larger_theta,
    popcorn_dims,
    popcorn_holder_bound,
    similarity_h,
    similarity_intdim,
    starshape_check,
    two_point_upper_bound,
)
from fractal_intdim.exceptions import DomainError


class TestTwoPointBounds:
    """Tests for the two-point upper and lower bounds.
    两点上界与下界测试。
    """

    def test_upper_value(self) -> None:
        assert two_point_upper_bound(0.0, 1.0, 0.5, 0.5, 1.0) == pytest.approx(2 / 3, abs=1e-15)

    def test_upper_equal_points(self) -> None:
        assert two_point_upper_bound(0.2, 0.9, 0.4, 0.5, 0.4) == pytest.approx(0.5, abs=1e-15)

    def test_upper_degenerate_class(self) -> None:
        assert two_point_upper_bound(0.7, 0.7, 0.2, 0.7, 0.9) == 0.7

    def test_pinned_values_stay(self) -> None:
        """h = lambda or h = alpha is a fixed point / h 取端点时保持不变。"""
        assert two_point_upper_bound(0.2, 0.9, 0.3, 0.2, 0.8) == pytest.approx(0.2, abs=1e-15)
        assert two_point_upper_bound(0.2, 0.9, 0.3, 0.9, 0.8) == pytest.approx(0.9, abs=1e-15)

    @pytest.mark.parametrize(("theta", "phi"), [(0.0, 0.5), (0.6, 0.5), (0.5, 1.2)])
    def test_upper_domain(self, theta: float, phi: float) -> None:
        with pytest.raises(DomainError) as ei:
            two_point_upper_bound(0.0, 1.0, theta, 0.5, phi)
        assert ei.value.error_code == "bound_domain"

    @pytest.mark.parametrize(("p", "d"), [(1.0, 1), (0.5, 2), (3.0, 3)])
    def test_lattice_is_extremal(self, p: float, d: int) -> None:
        """Lattice curves attain both bounds / 格点曲线同时取到两个界。"""
        for theta, phi in ((0.1, 0.4), (0.3, 1.0), (0.05, 0.9)):
            h_t, h_p = lattice_dim(p, d, theta), lattice_dim(p, d, phi)
            assert two_point_upper_bound(0.0, d, theta, h_t, phi) == pytest.approx(h_p, abs=1e-13)
            assert lower_bound_from_larger_theta(0.0, d, h_p, theta, phi) == pytest.approx(h_t, abs=1e-13)

    def test_lower_equal_points(self) -> None:
        assert lower_bound_from_larger_theta(0.1, 0.8, 0.5, 0.3, 0.3) == pytest.approx(0.5, abs=1e-15)

    def test_lower_pinned(self) -> None:
        assert lower_bound_from_larger_theta(0.1, 0.8, 0.1, 0.2, 0.7) == pytest.approx(0.1, abs=1e-15)

    def test_lower_degenerate(self) -> None:
        with pytest.raises(DomainError) as ei:
            lower_bound_from_larger_theta(0.5, 0.5, 0.5, 0.2, 0.7)
        assert ei.value.error_code == "degenerate_class"


class TestHSpec:
    """Tests for HSpec and hclass_check.
    HSpec 与 hclass_check 测试。
    """

    def test_sample_and_call(self) -> None:
        spec = HSpec.sample(lambda t: lattice_dim(1.0, 1, t), lam=0.0, alpha=1.0, count=11)
        assert spec.thetas[0] == 0.0
        assert spec.thetas[-1] == 1.0
        assert spec(1.0) == pytest.approx(0.5)
        assert spec(0.25) == pytest.approx(0.5 * (spec(0.2) + spec(0.3)), abs=1e-12)

    @pytest.mark.parametrize(
        ("lam", "alpha", "thetas", "values"),
        [
            (0.6, 0.5, (0.0, 0.5, 1.0), (0.5, 0.5, 0.5)),
            (0.0, 1.0, (0.0, 1.0), (0.1, 0.2)),
            (0.0, 1.0, (0.0, 0.5, 0.9), (0.1, 0.2, 0.3)),
            (0.0, 1.0, (0.0, 0.6, 0.5, 1.0), (0.1, 0.2, 0.2, 0.3)),
            (0.2, 1.0, (0.0, 0.5, 1.0), (0.1, 0.5, 0.6)),
        ],
    )
    def test_rejects(self, lam: float, alpha: float, thetas: tuple, values: tuple) -> None:
        with pytest.raises(DomainError) as ei:
            HSpec(lam=lam, alpha=alpha, thetas=thetas, values=values)
        assert ei.value.error_code == "bad_hspec"

    def test_lattice_in_class(self) -> None:
        spec = HSpec.sample(lambda t: lattice_dim(2.0, 2, t), lam=0.0, alpha=2.0)
        report = hclass_check(spec)
        assert report.passed
        assert report.first_violation is None

    def test_constant_in_class(self) -> None:
        spec = HSpec.sample(lambda t: 0.4, lam=0.2, alpha=0.9)
        assert hclass_check(spec).passed

    def test_jump_violates(self) -> None:
        """Too steep an increase breaks the bound / 增长过陡违反上界。"""
        spec = HSpec(lam=0.0, alpha=1.0, thetas=(0.0, 0.5, 1.0), values=(0.1, 0.1, 0.9))
        report = hclass_check(spec)
        assert not report.passed
        theta, phi, excess = report.first_violation
        assert (theta, phi) == (0.5, 1.0)
        assert excess == pytest.approx(0.9 - (0.1 + 0.045 / 0.55), abs=1e-12)

    def test_decrease_violates(self) -> None:
        spec = HSpec(lam=0.0, alpha=1.0, thetas=(0.0, 0.5, 1.0), values=(0.5, 0.4, 0.45))
        report = hclass_check(spec)
        assert not report.passed
        assert report.first_violation == pytest.approx((0.0, 0.5, 0.1))


class TestShapeChecks:
    """Tests for lipschitz_constant and starshape_check.
    lipschitz_constant 与 starshape_check 测试。
    """

    def test_lipschitz_constant(self) -> None:
        assert lipschitz_constant(0.0, 1.0, 0.5) == 0.5

    def test_lipschitz_bounds_lattice_slope(self) -> None:
        """Slopes of a class member stay below the constant / 类成员的斜率不超过常数。"""
        thetas = np.linspace(0.2, 1.0, 81)
        vals = np.array([lattice_dim(0.5, 1, float(t)) for t in thetas])
        slopes = np.diff(vals) / np.diff(thetas)
        assert np.max(slopes) <= lipschitz_constant(0.0, 1.0, 0.2)

    def test_lipschitz_domain(self) -> None:
        with pytest.raises(DomainError):
            lipschitz_constant(0.0, 1.0, 0.0)

    def test_starshape_lattice(self) -> None:
        thetas = np.linspace(0.0, 1.0, 50)
        assert starshape_check(thetas, [lattice_dim(1.0, 1, float(t)) for t in thetas]).passed

    def test_starshape_fails(self) -> None:
        thetas = [0.1, 0.5, 1.0]
        report = starshape_check(thetas, [t * t for t in thetas])
        assert not report.passed
        assert report.first_violation[:2] == (0.1, 0.5)


class TestClosedFormFamilies:
    """Tests for lattice and popcorn families.
    格点族与爆米花族测试。
    """

    def test_lattice(self) -> None:
        assert lattice_dim(1.0, 2, 1.0) == 1.0
        assert lattice_dim(1.0, 2, 0.0) == 0.0

    @pytest.mark.parametrize(("p", "d", "theta"), [(0.0, 1, 0.5), (1.0, 0, 0.5), (1.0, 1, 1.5)])
    def test_lattice_rejects(self, p: float, d: int, theta: float) -> None:
        with pytest.raises(DomainError):
            lattice_dim(p, d, theta)

    def test_popcorn_flat_then_rising(self) -> None:
        dims = popcorn_dims(0.5, 2, 0.2)
        assert dims.intermediate == 1.0
        assert dims.box == pytest.approx(1.6)
        assert dims.assouad == 2.0
        assert popcorn_dims(0.5, 2, 1.0).intermediate == pytest.approx(dims.box, abs=1e-15)

    def test_popcorn_continuous_at_kink(self) -> None:
        t, d = 0.9, 3
        kink = (d - 1) * t / d
        assert popcorn_dims(t, d, kink + 1e-12).intermediate == pytest.approx(d - 1, abs=1e-9)

    def test_popcorn_flat_regime(self) -> None:
        dims = popcorn_dims(2.0, 2, 0.7)
        assert dims == popcorn_dims(2.0, 2, 0.1)
        assert (dims.intermediate, dims.box, dims.assouad) == (1.0, 1.0, 1.0)

    def test_popcorn_holder(self) -> None:
        theta, bound = popcorn_holder_bound(0.5, 1.0, 2)
        assert theta == 0.5
        assert bound == pytest.approx(0.75)

    def test_popcorn_holder_is_curve_ratio(self) -> None:
        """The bound is the curve ratio at its minimizer / 上界即曲线比在极小点处的值。"""
        t1, t2, d = 0.4, 1.2, 3
        theta, bound = popcorn_holder_bound(t1, t2, d)
        ratios = [
            popcorn_dims(t2, d, float(th)).intermediate / popcorn_dims(t1, d, float(th)).intermediate
            for th in np.linspace(0.01, 1.0, 400)
        ]
        assert bound == pytest.approx(
            popcorn_dims(t2, d, theta).intermediate / popcorn_dims(t1, d, theta).intermediate, abs=1e-12
        )
        assert min(ratios) >= bound - 1e-12

    def test_popcorn_holder_rejects(self) -> None:
        with pytest.raises(DomainError):
            popcorn_holder_bound(1.0, 0.5, 2)


class TestSimilarityFamilies:
    """Tests for infinitely generated similarity systems.
    无穷生成相似系统测试。
    """

    def test_geometric_h(self) -> None:
        """sum 3^-it = 1 at t = log 2/log 3 / 几何族的 h。"""
        fam = SimilarityFamily(kind=SimilarityKind.GEOMETRIC, c=1.0, rho=1 / 3)
        assert finiteness_parameter(fam) == 0.0
        assert similarity_h(fam, 1) == pytest.approx(math.log(2) / math.log(3), abs=1e-9)

    def test_power_h(self) -> None:
        fam = SimilarityFamily(kind=SimilarityKind.POWER, a=0.5, q=2.0)
        assert finiteness_parameter(fam) == 0.5
        h = similarity_h(fam, 1)
        assert 0.5 < h < 1.0
        assert fam.series(h) == pytest.approx(1.0, abs=1e-8)
        assert fam.series(0.5) == math.inf

    def test_explicit_with_tail(self) -> None:
        fam = SimilarityFamily(kind=SimilarityKind.EXPLICIT, ratios=(0.5,), c=0.5, rho=0.5)
        assert fam.series(1.0) == pytest.approx(0.5 + 0.25 / 0.5)

    def test_multiplicity_scales_series(self) -> None:
        fam = SimilarityFamily(kind=SimilarityKind.GEOMETRIC, c=1.0, rho=0.2)
        assert fam.with_multiplicity(3).series(0.7) == pytest.approx(3 * fam.series(0.7), rel=1e-14)
        assert similarity_h(fam.with_multiplicity(3), 2) > similarity_h(fam, 2)

    def test_saturation_warns(self) -> None:
        fam = SimilarityFamily(kind=SimilarityKind.GEOMETRIC, c=1.0, rho=0.9)
        with pytest.warns(UserWarning, match="does not drop below 1"):
            assert similarity_h(fam, 1) == 1.0

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"kind": SimilarityKind.POWER, "a": 1.5, "q": 2.0},
            {"kind": SimilarityKind.GEOMETRIC, "c": 1.0, "rho": 1.0},
            {"kind": SimilarityKind.EXPLICIT},
            {"kind": SimilarityKind.GEOMETRIC, "c": 1.0, "rho": 0.5, "multiplicity": 0},
        ],
    )
    def test_invalid_family(self, kwargs: dict) -> None:
        with pytest.raises(DomainError) as ei:
            SimilarityFamily(**kwargs)
        assert ei.value.error_code == "family_params"

    def test_similarity_intdim(self) -> None:
        fp = FixedPointFamily(kind=FixedPointKind.SEQUENCE, p=1.0)
        fam = SimilarityFamily(kind=SimilarityKind.GEOMETRIC, c=1.0, rho=1 / 3, fixed_points=fp)
        h = math.log(2) / math.log(3)
        assert similarity_intdim(fam, 1, 1.0) == pytest.approx(h, abs=1e-9)
        assert similarity_intdim(fam, 1, 0.0) == pytest.approx(h, abs=1e-9)

    def test_similarity_intdim_needs_fixed_points(self) -> None:
        fam = SimilarityFamily(kind=SimilarityKind.GEOMETRIC, c=1.0, rho=1 / 3)
        with pytest.raises(DomainError):
            similarity_intdim(fam, 1, 0.5)

    def test_cifs_curve(self) -> None:
        """max{h, dim_theta P} switches at theta = p h/(1 - h) / 在 theta = p h/(1 - h) 处切换。"""
        fp = FixedPointFamily(kind=FixedPointKind.LATTICE, p=1.0, d=1)
        h = 0.25
        switch = h / (1 - h)
        assert cifs_intdim(h, fp, switch / 2) == h
        assert cifs_intdim(h, fp, 0.9) == pytest.approx(0.9 / 1.9)
        assert cifs_intdim_bounds(h, fp, 0.9) == (cifs_intdim(h, fp, 0.9), cifs_intdim(h, fp, 0.9))

    @pytest.mark.parametrize("kind", [FixedPointKind.SEQUENCE, FixedPointKind.LATTICE])
    def test_cifs_bounds_coincide(self, kind: FixedPointKind) -> None:
        """Lower and upper curves of P agree for both families / 两类族 P 的上下曲线一致。"""
        fp = FixedPointFamily(kind=kind, p=2.0, d=2)
        for theta in (0.05, 0.3, 0.7, 1.0):
            lower, upper = cifs_intdim_bounds(0.3, fp, theta)
            assert lower == upper
            assert lower == max(0.3, fp.dim(theta))

    def test_cifs_rejects_negative_h(self) -> None:
        with pytest.raises(DomainError):
            cifs_intdim(-0.1, FixedPointFamily(kind=FixedPointKind.SEQUENCE, p=1.0), 0.5)


class TestContinuedFractions:
    """Tests for continued-fraction families.
    连分数族测试。
    """

    def test_finiteness(self) -> None:
        assert ctdfrac_finiteness(2.0, "real") == 0.25
        assert ctdfrac_finiteness(2.0, "complex") == 0.5

    @pytest.mark.parametrize(("p", "kind"), [(1.0, "real"), (2.0, "quaternion")])
    def test_finiteness_rejects(self, p: float, kind: str) -> None:
        with pytest.raises(DomainError):
            ctdfrac_finiteness(p, kind)

    def test_dims(self) -> None:
        assert ctdfrac_dim(2.0, 0.3, "real", 1.0) == pytest.approx(1 / 3)
        assert ctdfrac_dim(2.0, 0.3, "real", 0.1) == 0.3
        assert ctdfrac_dim(2.0, 0.6, "complex", 1.0) == pytest.approx(2 / 3)

    def test_holder_example(self) -> None:
        """Intermediate bound beats both classical ones / 中间维数界优于两种经典界。"""
        report = ctdfrac_holder_bound(2.0, 2.9, 0.255, 0.22)
        assert report.theta_star == pytest.approx(2.9 * 0.22 / 0.78)
        assert report.intermediate_bound == pytest.approx(0.757931, abs=1e-6)
        assert report.hausdorff_bound == pytest.approx(0.22 / 0.255)
        assert report.box_bound == pytest.approx(3 / 3.9)
        assert report.intermediate_bound < min(report.hausdorff_bound, report.box_bound)

    def test_holder_bound_is_curve_ratio(self) -> None:
        p, q, h_p, h_q = 2.0, 2.9, 0.255, 0.22
        report = ctdfrac_holder_bound(p, q, h_p, h_q)
        th = report.theta_star
        ratio = ctdfrac_dim(q, h_q, "real", th) / ctdfrac_dim(p, h_p, "real", th)
        assert ratio == pytest.approx(report.intermediate_bound, abs=1e-12)

    @pytest.mark.parametrize(
        ("p", "q", "h_p", "h_q"),
        [(2.0, 3.5, 0.255, 0.22), (2.0, 2.9, 0.26, 0.22), (2.0, 2.9, 0.255, 0.15)],
    )
    def test_holder_rejects(self, p: float, q: float, h_p: float, h_q: float) -> None:
        with pytest.raises(DomainError) as ei:
            ctdfrac_holder_bound(p, q, h_p, h_q)
        assert ei.value.error_code == "family_params"


class TestFamilyCurve:
    """Tests for family_curve.
    family_curve 测试。
    """

    @pytest.mark.parametrize(
        ("kind", "params"),
        [
            ("lattice", {"p": 1.0, "d": 2}),
            ("sequence", {"p": 1.0}),
            ("popcorn", {"t": 0.5, "d": 2}),
            ("ctdfrac-real", {"p": 2.0, "h": 0.3}),
            ("ctdfrac-complex", {"p": 2.0, "h": 0.6}),
        ],
    )
    def test_non_decreasing(self, kind: str, params: dict[str, float]) -> None:
        fc = family_curve(kind, params, np.linspace(0.0, 1.0, 21))
        assert fc.kind == FamilyKind(kind)
        assert np.all(np.diff(fc.values) >= -1e-15)

    def test_rows(self) -> None:
        fc = family_curve(FamilyKind.SEQUENCE, {"p": 1.0}, [0.0, 1.0])
        assert fc.to_rows() == [{"theta": 0.0, "value": 0.0}, {"theta": 1.0, "value": 0.5}]

    def test_unknown_kind(self) -> None:
        with pytest.raises(DomainError) as ei:
            family_curve("cantor", {}, [0.5])
        assert ei.value.error_code == "family_params"

    def test_missing_param(self) -> None:
        with pytest.raises(DomainError) as ei:
            family_curve("lattice", {"p": 1.0}, [0.5])
        assert ei.value.details == {"missing": "d"}
