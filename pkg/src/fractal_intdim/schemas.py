"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: schemas.py
@DateTime: 2026-10-17
@Docs: Pydantic schemas for the JSON files read and written by the CLI.
命令行读写的 JSON 文件所用的 Pydantic 模型。

Input models convert into the frozen domain types; report models are built from them.
输入模型转换为冻结的领域类型；报告模型由领域类型构建。
"""

from pathlib import Path
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from fractal_intdim.bounds_families import FixedPointFamily, FixedPointKind, HSpec, SimilarityFamily, SimilarityKind
from fractal_intdim.combinatorial_oracle import OracleReport
from fractal_intdim.exceptions import DomainError
from fractal_intdim.moran_builder import MoranPlan
from fractal_intdim.spectra_equivalence import EquivalenceDecision, EquivalenceReport


class HSpecModel(BaseModel):
    """
    JSON form of a sampled prescription h.
    采样函数 h 的 JSON 形式。

    Attributes:
        lam: Lower class parameter (key "lambda").
            类下参数（键名 "lambda"）。
        alpha: Upper class parameter.
            类上参数。
        grid: Strictly increasing theta samples ending at 1.
            严格递增、以 1 结尾的 theta 采样。
        values: h at the samples.
            采样点处的 h 值。
    """

    model_config = ConfigDict(populate_by_name=True)

    lam: float = Field(..., alias="lambda", description="Lower class parameter / 类下参数")
    alpha: float = Field(..., description="Upper class parameter / 类上参数")
    grid: list[float] = Field(..., min_length=3, description="theta samples / theta 采样")
    values: list[float] = Field(..., min_length=3, description="h values / h 值")

    def to_hspec(self) -> HSpec:
        return HSpec(lam=self.lam, alpha=self.alpha, thetas=tuple(self.grid), values=tuple(self.values))

    @classmethod
    def from_hspec(cls, spec: HSpec) -> "HSpecModel":
        return cls(lam=spec.lam, alpha=spec.alpha, grid=list(spec.thetas), values=list(spec.values))


class MoranPlanModel(BaseModel):
    """
    Stored Moran plan {d, w0, ratios, x}.
    存储的 Moran 方案 {d, w0, ratios, x}。
    """

    d: int = Field(..., ge=1, description="Ambient dimension / 环境维数")
    w0: float = Field(..., description="Offset / 偏移量")
    ratios: list[float] = Field(..., min_length=1, description="Contraction ratios / 压缩比")
    x: list[float] = Field(..., min_length=1, description="log log(1/rho_k)")

    def to_plan(self) -> MoranPlan:
        return MoranPlan(d=self.d, w0=self.w0, ratios=tuple(self.ratios), x=tuple(self.x))

    @classmethod
    def from_plan(cls, plan: MoranPlan) -> "MoranPlanModel":
        return cls(d=plan.d, w0=plan.w0, ratios=list(plan.ratios), x=list(plan.x))


class DiscretizationRow(BaseModel):
    """One row of the discretization residual table / 离散化残差表的一行。"""

    k: int
    x: float
    ratio: float
    scale_dim: float
    g: float
    residual: float


class MoranBuildReport(BaseModel):
    """Plan plus its residual table / 方案及其残差表。"""

    plan: MoranPlanModel
    worst_residual: float
    residuals: list[DiscretizationRow] = Field(default_factory=list)


class FixedPointModel(BaseModel):
    """Closed-form fixed-point family descriptor / 闭式不动点族描述。"""

    kind: FixedPointKind
    p: float = Field(..., gt=0.0)
    d: int = Field(default=1, ge=1)

    def to_family(self) -> FixedPointFamily:
        return FixedPointFamily(kind=self.kind, p=self.p, d=self.d)


class SimilarityFamilyModel(BaseModel):
    """
    Descriptor of an infinitely generated similarity system.
    无穷生成相似系统的描述。
    """

    kind: SimilarityKind
    a: float = 0.0
    q: float = 0.0
    c: float = 0.0
    rho: float = 0.0
    ratios: list[float] = Field(default_factory=list)
    multiplicity: int = Field(default=1, ge=1)
    fixed_points: FixedPointModel | None = None

    def to_family(self) -> SimilarityFamily:
        return SimilarityFamily(
            kind=self.kind,
            a=self.a,
            q=self.q,
            c=self.c,
            rho=self.rho,
            ratios=tuple(self.ratios),
            multiplicity=self.multiplicity,
            fixed_points=self.fixed_points.to_family() if self.fixed_points else None,
        )


class EquivalenceCheckModel(BaseModel):
    """
    Per-group comparison row; "pass" is a Python keyword, hence the alias.
    按组比较行；"pass" 为 Python 关键字，故使用别名。
    """

    model_config = ConfigDict(populate_by_name=True)

    i: int
    N_ratio: float
    R_ratio: float
    target: float
    passed: bool = Field(..., alias="pass")


class HolderBoundModel(BaseModel):
    """Sampled Holder exponent bound / 采样得到的 Holder 指数上界。"""

    theta_star: float
    bound: float


class EquivalenceReportModel(BaseModel):
    """
    Equivalence decision as written by the CLI.
    命令行输出的等价性判定。
    """

    decision: EquivalenceDecision
    common_grid: tuple[int, int] | None = None
    checks: list[EquivalenceCheckModel] = Field(default_factory=list)
    holder_bound: HolderBoundModel | None = None

    @classmethod
    def from_report(cls, report: EquivalenceReport, *, holder: tuple[float, float] | None = None) -> "EquivalenceReportModel":
        """
        Build from a domain report.
        由领域报告构建。

        Args:
            report: Equivalence report.
                等价性报告。
            holder: Optional (theta_star, bound).
                可选的 (theta_star, 上界)。

        Returns:
            EquivalenceReportModel: Serializable report.
                可序列化的报告。
        """
        return cls(
            decision=report.decision,
            common_grid=report.common_grid,
            checks=[
                EquivalenceCheckModel(i=c.i, N_ratio=c.N_ratio, R_ratio=c.R_ratio, target=c.target, passed=c.passed)
                for c in report.checks
            ],
            holder_bound=HolderBoundModel(theta_star=holder[0], bound=holder[1]) if holder else None,
        )


class OracleReportModel(BaseModel):
    """
    Oracle output {J or K, s, theta?, log_cost or log_count, reference_rate, gap}.
    预言机输出 {J 或 K, s, theta?, log_cost 或 log_count, reference_rate, gap}。
    """

    kind: str
    J: int | None = None
    K: int | None = None
    s: float | None = None
    t: float | None = None
    theta: float | None = None
    log_cost: float | None = None
    log_count: float | None = None
    reference_rate: float | None = None
    gap: float | None = None
    critical_s: float | None = None
    reference_s: float | None = None

    @classmethod
    def from_report(cls, report: OracleReport) -> "OracleReportModel":
        """
        Build from a domain report; level maps to J or K and log_value to log_count or log_cost.
        由领域报告构建；level 映射为 J 或 K，log_value 映射为 log_count 或 log_cost。
        """
        return cls(
            kind=report.kind,
            J=report.level if report.per_scale else None,
            K=None if report.per_scale else report.level,
            s=report.s,
            t=report.t,
            theta=report.theta,
            log_count=report.log_value if report.is_count else None,
            log_cost=None if report.is_count else report.log_value,
            reference_rate=report.reference_rate,
            gap=report.gap,
            critical_s=report.critical_s,
            reference_s=report.reference_s,
        )


def load_model[M: BaseModel](model: type[M], path: str | Path) -> M:
    """
    Read and validate a JSON file.
    读取并校验 JSON 文件。

    Raises:
        DomainError: Unreadable file or schema violation (error_code "bad_input").
            文件不可读或不符合模型（error_code "bad_input"）。
    """
    try:
        raw = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise DomainError(
            message=f"Cannot read {path}: {exc} / 无法读取文件",
            details={"path": str(path)},
            error_code="bad_input",
        ) from exc
    try:
        return model.model_validate_json(raw)
    except ValidationError as exc:
        details: dict[str, Any] = {"path": str(path), "errors": exc.errors(include_url=False)}
        raise DomainError(
            message=f"{path} does not match {model.__name__} / 文件内容不符合 {model.__name__}",
            details=details,
            error_code="bad_input",
        ) from exc
