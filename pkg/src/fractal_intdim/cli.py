"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: cli.py
@DateTime: 2026-10-17
@Docs: Command-line entry point.
命令行入口。

Exit codes / 退出码:
        0 success (or equivalent carpets, or a passing class check)
        1 inequivalent carpets, or a failing class check
        2 input, domain or numerical error
        3 carpets on incomparable grids
"""

import argparse
import logging
import math
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import Any

import numpy as np

from fractal_intdim import __version__
from fractal_intdim.bounds_families import (
    ClassReport,
    FamilyKind,
    family_curve,
    hclass_check,
    popcorn_dims,
    similarity_intdim,
)
from fractal_intdim.carpet_intdim import ThetaGrid, curve, dim_box, dim_hausdorff, intermediate_dim
from fractal_intdim.carpet_model import ColumnProfile, profile, read_carpet
from fractal_intdim.combinatorial_oracle import (
    OracleReport,
    box_count,
    count_below,
    count_rate,
    critical_exponent,
    optimal_cover_dp,
    pressure_Psi,
    pressure_rate,
    two_scale_cover,
)
from fractal_intdim.config import FractalConfig, resolve_config
from fractal_intdim.exceptions import DomainError, FractalDimError
from fractal_intdim.formats import OutputFormat, extension_for, format_for_path
from fractal_intdim.moran_builder import (
    build_g_from_h,
    discretization_residuals,
    discretize,
    sliding_window_dim,
)
from fractal_intdim.options import WriteOptions
from fractal_intdim.schemas import (
    DiscretizationRow,
    EquivalenceReportModel,
    HSpecModel,
    MoranBuildReport,
    MoranPlanModel,
    OracleReportModel,
    SimilarityFamilyModel,
    load_model,
)
from fractal_intdim.serializers import (
    CurveCsvSerializer,
    FamilyCsvSerializer,
    JsonSerializer,
    Serializer,
    SvgPlotSerializer,
)
from fractal_intdim.spectra_equivalence import EquivalenceDecision, equivalent_intdim, holder_bound
from fractal_intdim.storage import atomic_write_bytes

logger = logging.getLogger(__name__)

_EXIT_BY_DECISION = {
    EquivalenceDecision.EQUIVALENT: 0,
    EquivalenceDecision.INEQUIVALENT: 1,
    EquivalenceDecision.INCOMPARABLE_GRIDS: 3,
}


def _float_pair(text: str) -> tuple[float, float]:
    try:
        lo, hi = (float(v) for v in text.split(":"))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected lo:hi, got {text!r}") from exc
    return lo, hi


def _profile_arg(text: str) -> ColumnProfile:
    """Parse "m:n:c1,c2,..." / 解析 "m:n:c1,c2,..."。"""
    try:
        m, n, counts = text.split(":")
        return ColumnProfile.from_counts(int(m), int(n), [int(c) for c in counts.split(",")])
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected m:n:c1,c2,..., got {text!r}") from exc


def _config(args: argparse.Namespace) -> FractalConfig:
    return resolve_config(root_tol=args.root_tol, scan_points=args.scan_points)


def _emit(payload: bytes, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(payload.decode("utf-8"))
        return
    atomic_write_bytes(out, payload)
    logger.info("wrote %s", out)


def _serializer(fmt: OutputFormat, csv: Serializer) -> Serializer:
    match fmt:
        case OutputFormat.CSV:
            return csv
        case OutputFormat.JSON:
            return JsonSerializer()
        case OutputFormat.SVG:
            return SvgPlotSerializer()


def _resolve_output(args: argparse.Namespace) -> tuple[OutputFormat, Path | None]:
    """
    Output format and path; a suffix-less --out gets the extension of the format.
    输出格式与路径；无后缀的 --out 会补上该格式的扩展名。
    """
    out: Path | None = args.out
    if args.format:
        fmt = OutputFormat(args.format)
    elif out is not None and out.suffix:
        fmt = format_for_path(out)
    else:
        fmt = OutputFormat.CSV
    if out is not None and not out.suffix:
        out = out.with_suffix(extension_for(fmt))
    return fmt, out


def cmd_dim(args: argparse.Namespace) -> int:
    """Sample a carpet curve / 采样载毯曲线。"""
    cfg = _config(args)
    p = profile(read_carpet(args.carpet))
    grid = ThetaGrid.parse(args.theta, include_transitions=not args.no_transitions)
    if args.log_spacing:
        grid = ThetaGrid(grid.theta_min, grid.theta_max, grid.count, grid.include_transitions, "log")
    dc = curve(p, grid, method=args.method, config=cfg)
    comments = [f"carpet {p.m}x{p.n} counts={','.join(map(str, p.counts))}"]
    comments.append(f"dim_H={dim_hausdorff(p):.15g} dim_B={dim_box(p):.15g}")
    if p.uniform_fibres:
        comments.append("uniform fibres: dim_theta is constant")
    comments.extend(f"transition theta={t:.15g}" for t in dc.transitions)
    options = WriteOptions(
        comments=tuple(comments),
        markers=tuple(dc.transitions),
        y_key="dim",
        title=f"{p.m}x{p.n} carpet",
    )
    fmt, out = _resolve_output(args)
    rows = dc.to_rows()
    _emit(_serializer(fmt, CurveCsvSerializer()).serialize(data=rows, options=options), out)
    if args.plot is not None:
        atomic_write_bytes(args.plot, SvgPlotSerializer().serialize(data=rows, options=options))
    logger.info("dim: %d samples", len(rows))
    return 0


def cmd_equiv(args: argparse.Namespace) -> int:
    """Decide intermediate-dimension equivalence / 判定中间维数等价性。"""
    cfg = _config(args)
    a, b = read_carpet(args.a), read_carpet(args.b)
    report = equivalent_intdim(a, b, config=cfg)
    holder = None
    print(f"decision: {report.decision}")
    if report.decision is EquivalenceDecision.INEQUIVALENT:
        pa, pb = profile(a), profile(b)
        grid = ThetaGrid.parse(args.theta)
        thetas = np.unique(np.concatenate([grid.samples(pa.gamma), grid.samples(pb.gamma)]))
        ca, cb = curve(pa, thetas, config=cfg), curve(pb, thetas, config=cfg)
        holder = holder_bound(cb, ca)
        reverse = holder_bound(ca, cb)
        print(f"holder bound (B onto A): {holder[1]:.10f} at theta={holder[0]:.10f}")
        print(f"holder bound (A onto B): {reverse[1]:.10f} at theta={reverse[0]:.10f}")
    if args.out is not None:
        model = EquivalenceReportModel.from_report(report, holder=holder)
        atomic_write_bytes(args.out, JsonSerializer().serialize(data=model, options=WriteOptions()))
    return _EXIT_BY_DECISION[report.decision]


def _oracle_profile(args: argparse.Namespace) -> ColumnProfile:
    if args.profile is not None:
        return args.profile
    if args.carpet is None:
        raise DomainError(message="oracle needs --carpet or --profile / 需要 --carpet 或 --profile", error_code="bad_input")
    return profile(read_carpet(args.carpet))


def _require(value: Any, flag: str) -> Any:
    if value is None:
        raise DomainError(message=f"{flag} is required here / 此处需要 {flag}", error_code="bad_input")
    return value


def cmd_oracle(args: argparse.Namespace) -> int:
    """Run one combinatorial oracle / 运行一个组合预言机。"""
    cfg = _config(args)
    p = _oracle_profile(args)
    report: OracleReport
    match args.kind:
        case "box":
            K = _require(args.K, "--K")
            report = OracleReport(
                kind="box", level=K, log_value=box_count(p, K), reference_rate=dim_box(p) * math.log(p.n)
            )
        case "psi":
            J, s = _require(args.J, "--J"), _require(args.s, "--s")
            report = OracleReport(
                kind="psi",
                level=J,
                s=s,
                log_value=pressure_Psi(p, J, s, config=cfg),
                reference_rate=pressure_rate(p, s, config=cfg),
            )
        case "count":
            J, t = _require(args.J, "--J"), _require(args.t, "--t")
            report = OracleReport(
                kind="count",
                level=J,
                t=t,
                log_value=count_below(p, J, t, config=cfg),
                reference_rate=count_rate(p, t, config=cfg),
            )
        case "two-scale" | "dp":
            theta, K = _require(args.theta, "--theta"), _require(args.K, "--K")

            def cost(s: float) -> float:
                if args.kind == "dp":
                    return optimal_cover_dp(p, theta, K, s, config=cfg).log_cost
                return two_scale_cover(p, theta, K, s, config=cfg)

            critical = critical_exponent(cost, 0.0, 2.0, tol=1e-9) if args.scan_s else None
            s = _require(args.s if args.s is not None else critical, "--s or --scan-s")
            report = OracleReport(
                kind=args.kind,
                level=K,
                s=s,
                theta=theta,
                log_value=cost(s),
                critical_s=critical,
                reference_s=intermediate_dim(p, theta, config=cfg),
            )
    logger.info("oracle %s level=%d gap=%s", report.kind, report.level, report.gap)
    _emit(JsonSerializer().serialize(data=OracleReportModel.from_report(report), options=WriteOptions()), args.out)
    return 0


def cmd_moran_build(args: argparse.Namespace) -> int:
    """Build and discretize g from h / 由 h 构造并离散化 g。"""
    cfg = _config(args)
    h = load_model(HSpecModel, args.h).to_hspec()
    g = build_g_from_h(h, d=args.d, x_max=args.x_max)
    plan = discretize(g, args.depth, config=cfg)
    residuals = discretization_residuals(plan)
    rows = []
    if args.check:
        rows = [
            DiscretizationRow(
                k=k + 1,
                x=plan.x[k],
                ratio=plan.ratios[k],
                scale_dim=plan.scale_dim(plan.x[k]),
                g=float(plan.g_at(plan.x[k])),
                residual=float(residuals[k]),
            )
            for k in range(plan.depth)
        ]
    report = MoranBuildReport(plan=MoranPlanModel.from_plan(plan), worst_residual=float(residuals.max()), residuals=rows)
    _emit(JsonSerializer().serialize(data=report, options=WriteOptions()), args.out)
    return 0


def cmd_moran_window(args: argparse.Namespace) -> int:
    """Sliding-window dimension estimate / 滑动窗口维数估计。"""
    cfg = _config(args)
    if args.h is not None:
        g = build_g_from_h(load_model(HSpecModel, args.h).to_hspec(), d=args.d, x_max=args.x_max)
        plan = discretize(g, args.depth, config=cfg)
    elif args.plan is not None:
        plan = load_model(MoranPlanModel, args.plan).to_plan()
    else:
        raise DomainError(message="moran window needs --h or --plan / 需要 --h 或 --plan", error_code="bad_input")
    rows = [
        {"theta": theta, "estimate": sliding_window_dim(plan, theta, args.window)}
        for theta in args.theta
    ]
    _emit(JsonSerializer().serialize(data=rows, options=WriteOptions()), args.out)
    return 0


def cmd_family(args: argparse.Namespace) -> int:
    """Sample a closed-form family / 采样闭式族曲线。"""
    grid = ThetaGrid.parse(args.theta, include_transitions=False).samples(2.0)
    markers: tuple[float, ...] = ()
    if args.kind == "similarity":
        fam = load_model(SimilarityFamilyModel, _require(args.family, "--family")).to_family()
        values = np.asarray([similarity_intdim(fam, args.spatial_dim, float(t)) for t in grid])
        rows = [{"theta": float(t), "value": float(v)} for t, v in zip(grid, values, strict=True)]
    else:
        params = {k: v for k, v in (("p", args.p), ("d", args.d), ("t", args.t), ("h", args.h)) if v is not None}
        fc = family_curve(args.kind, params, grid)
        rows = fc.to_rows()
        if fc.kind is FamilyKind.POPCORN:
            t_exp, d = params["t"], int(params["d"])
            markers = ((d - 1) * t_exp / d,)
            dims = popcorn_dims(t_exp, d, 1.0)
            logger.info("popcorn box=%.12g assouad=%.12g", dims.box, dims.assouad)
    options = WriteOptions(
        comments=tuple(f"transition theta={m:.15g}" for m in markers),
        markers=markers,
        y_key="value",
        title=args.kind,
    )
    fmt, out = _resolve_output(args)
    _emit(_serializer(fmt, FamilyCsvSerializer()).serialize(data=rows, options=options), out)
    return 0


def cmd_hcheck(args: argparse.Namespace) -> int:
    """Check membership of a sampled h in H(lambda, alpha) / 检查采样 h 是否属于 H(lambda, alpha)。"""
    h = load_model(HSpecModel, args.h).to_hspec()
    report: ClassReport = hclass_check(h)
    payload = {"passed": report.passed, "violations": [list(v) for v in report.violations]}
    _emit(JsonSerializer().serialize(data=[payload], options=WriteOptions()), args.out)
    return 0 if report.passed else 1


def _add_common(ap: argparse.ArgumentParser) -> None:
    ap.add_argument("--out", type=Path, default=None, help="output file (default: stdout)")
    ap.add_argument("--root-tol", type=float, default=None, help="root-search tolerance")
    ap.add_argument("--scan-points", type=int, default=None, help="sample count of the scan root mode")


def build_parser() -> argparse.ArgumentParser:
    """
    Build the argument parser.
    构建参数解析器。
    """
    ap = argparse.ArgumentParser(prog="fractal-intdim", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    ap.add_argument("-v", "--verbose", action="count", default=0, help="-v info, -vv debug")
    sub = ap.add_subparsers(dest="command", required=True)

    p_dim = sub.add_parser("dim", help="sample the intermediate-dimension curve of a carpet")
    p_dim.add_argument("--carpet", type=Path, required=True)
    p_dim.add_argument("--theta", default="0.001:1:512", help="min:max:count")
    p_dim.add_argument("--no-transitions", action="store_true", help="do not add gamma^-L to the grid")
    p_dim.add_argument("--log-spacing", action="store_true")
    p_dim.add_argument("--method", choices=["bisect", "scan"], default="bisect", help="root search mode")
    p_dim.add_argument("--format", choices=[f.value for f in OutputFormat], default=None)
    p_dim.add_argument("--plot", type=Path, default=None, help="also write an SVG plot")
    _add_common(p_dim)
    p_dim.set_defaults(func=cmd_dim)

    p_eq = sub.add_parser("equiv", help="decide whether two carpets share their curve")
    p_eq.add_argument("a", type=Path)
    p_eq.add_argument("b", type=Path)
    p_eq.add_argument("--theta", default="0.01:1:400", help="grid for the Holder bound")
    _add_common(p_eq)
    p_eq.set_defaults(func=cmd_equiv)

    p_or = sub.add_parser("oracle", help="combinatorial cross-checks")
    p_or.add_argument("kind", choices=["box", "psi", "count", "two-scale", "dp"])
    p_or.add_argument("--carpet", type=Path, default=None)
    p_or.add_argument("--profile", type=_profile_arg, default=None, help="m:n:c1,c2,...")
    p_or.add_argument("--J", type=int, default=None)
    p_or.add_argument("--K", type=int, default=None)
    p_or.add_argument("--s", type=float, default=None)
    p_or.add_argument("--t", type=float, default=None)
    p_or.add_argument("--theta", type=float, default=None)
    p_or.add_argument("--scan-s", action="store_true", help="locate the critical exponent")
    _add_common(p_or)
    p_or.set_defaults(func=cmd_oracle)

    p_mo = sub.add_parser("moran", help="Moran sets with prescribed intermediate dimensions")
    mo_sub = p_mo.add_subparsers(dest="moran_command", required=True)
    p_build = mo_sub.add_parser("build", help="build a plan from h")
    p_build.add_argument("--h", type=Path, required=True)
    p_build.add_argument("--d", type=int, default=1)
    p_build.add_argument("--depth", type=int, default=None)
    p_build.add_argument("--x-max", type=float, default=64.0)
    p_build.add_argument("--check", action="store_true", help="include the residual table")
    _add_common(p_build)
    p_build.set_defaults(func=cmd_moran_build)
    p_win = mo_sub.add_parser("window", help="sliding-window estimates")
    p_win.add_argument("--h", type=Path, default=None)
    p_win.add_argument("--plan", type=Path, default=None)
    p_win.add_argument("--d", type=int, default=1)
    p_win.add_argument("--depth", type=int, default=None)
    p_win.add_argument("--x-max", type=float, default=64.0)
    p_win.add_argument("--theta", type=float, nargs="+", required=True)
    p_win.add_argument("--window", type=_float_pair, required=True, help="x_lo:x_hi")
    _add_common(p_win)
    p_win.set_defaults(func=cmd_moran_window)

    p_fam = sub.add_parser("family", help="closed-form families")
    p_fam.add_argument("kind", choices=[k.value for k in FamilyKind] + ["similarity"])
    p_fam.add_argument("--p", type=float, default=None)
    p_fam.add_argument("--d", type=int, default=None)
    p_fam.add_argument("--t", type=float, default=None)
    p_fam.add_argument("--h", type=float, default=None)
    p_fam.add_argument("--family", type=Path, default=None, help="similarity family JSON")
    p_fam.add_argument("--spatial-dim", type=int, default=1)
    p_fam.add_argument("--theta", default="0.01:1:100", help="min:max:count")
    p_fam.add_argument("--format", choices=[f.value for f in OutputFormat], default=None)
    _add_common(p_fam)
    p_fam.set_defaults(func=cmd_family)

    p_hc = sub.add_parser("hcheck", help="check a sampled h against its class")
    p_hc.add_argument("--h", type=Path, required=True)
    _add_common(p_hc)
    p_hc.set_defaults(func=cmd_hcheck)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    """
    Run the CLI and return the exit code.
    运行命令行并返回退出码。
    """
    args = build_parser().parse_args(argv)
    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except FractalDimError as exc:
        print(f"error [{exc.error_code}]: {exc.message}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
