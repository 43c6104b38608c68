"""Report models 报告模型

Pydantic models for every JSON report the CLI prints
命令行输出的各类 JSON 报告的 Pydantic 模型
"""

from typing import Any, Optional

from pydantic import BaseModel, Field


# ─── gf2 ───


class Gf2SuiteReport(BaseModel):
    """Pass matrix of the GF(2) property suite GF(2) 性质套件的通过矩阵

    Attributes:
        properties: Column names 列名
        matrix: Model name -> property -> passed 模型 -> 性质 -> 是否通过
        fuzz_cases: Number of fuzzed involutions 随机对合数
        seed: Seed of the fuzz generator 随机种子
        failures: Human-readable failure lines 失败说明
    """

    properties: list[str]
    matrix: dict[str, dict[str, bool]] = Field(default_factory=dict)
    fuzz_cases: int = 0
    seed: int = 0
    failures: list[str] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures and all(all(row.values()) for row in self.matrix.values())


# ─── atlas ───


class AtlasCheckReport(BaseModel):
    """Consistency checks over the encoded atlas 图集编码的一致性检查

    Attributes:
        checks: Check name -> passed 检查名 -> 是否通过
        isomorphism: Cubic class -> quintic class under the graph isomorphism found 图同构
        decoration_mismatches: Classes whose (d, Klein type) differ from their image 装饰不符的顶点
        counts: Matching counts per category 各类别匹配数
        failures: Human-readable failure lines 失败说明
    """

    checks: dict[str, bool] = Field(default_factory=dict)
    isomorphism: dict[str, str] = Field(default_factory=dict)
    decoration_mismatches: list[str] = Field(default_factory=list)
    counts: dict[str, int] = Field(default_factory=dict)
    failures: list[str] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures and all(self.checks.values())


# ─── pipeline ───


class FactorEntry(BaseModel):
    """One irreducible factor with its multiplicity 不可约因子及其重数"""

    factor: str
    degree: int
    multiplicity: int = 1


class SpectralSummary(BaseModel):
    """Spectral pair of the marked line 标记直线的谱对

    Attributes:
        quintic: det of the fundamental matrix 谱五次曲线
        theta: L11·L22 − L12² theta 二次曲线
        quintic_vanishes: The quintic is identically zero 五次式恒为零
        theta_vanishes: Theta is identically zero theta 恒为零
        quintic_factors: Irreducible factors over Q, filled when the line is singular 有理因子
        theta_is_square: Theta is a constant times the square of a linear form theta 为平方
    """

    quintic: str
    theta: str
    quintic_vanishes: bool = False
    theta_vanishes: bool = False
    quintic_factors: list[FactorEntry] = Field(default_factory=list)
    theta_is_square: bool = False


class LineDiagnostics(BaseModel):
    """Behaviour of X along the marked line 沿标记直线的诊断"""

    smoothness: str
    line_type: str
    theta_rank: int


class OvalSummary(BaseModel):
    """One oval with a witness point 卵形线及见证点"""

    index: int
    parent: Optional[int] = None
    witness: list[str]


class TopologySummary(BaseModel):
    """Certified topology of the quintic 五次曲线的认证拓扑

    Attributes:
        class_code: Rigid isotopy class code 类代码
        degree: Degree of the curve 次数
        ovals: Ovals with their parents 卵形线及其父卵形线
        j_witness: x and a y-interval of a point on the one-sided component 单侧分支上的点
        chart: Affine chart and shear used by the sweep 扫描使用的仿射图与剪切
        critical_count: Critical x-values of the sweep 临界值个数
        slab_count: Sample slabs of the sweep 扫描样本带数
    """

    class_code: str
    degree: int
    ovals: list[OvalSummary] = Field(default_factory=list)
    j_witness: Optional[list[str]] = None
    chart: dict[str, int] = Field(default_factory=dict)
    critical_count: int = 0
    slab_count: int = 0


class ContactSummary(BaseModel):
    """Contact test of the quintic and theta 五次曲线与 theta 的相切检验

    Attributes:
        is_contact: Every intersection has even multiplicity 所有交点重数均为偶数
        multiplicities: Local intersection multiplicities, sorted 局部交点重数
        field: Number field the intersection points were computed in 交点所在数域
        real_tangencies: Real tangency points with their component 实切点
        parity: Component index -> half the contact on it, mod 2 is the parity 分支上的切触数
    """

    is_contact: bool
    multiplicities: list[int] = Field(default_factory=list)
    field: str = "Q"
    real_tangencies: list[dict[str, Any]] = Field(default_factory=list)
    parity: dict[int, int] = Field(default_factory=dict)


class RegionSummary(BaseModel):
    """Visibility of ovals with respect to the real theta-conic 卵形线相对 theta 的可见性"""

    theta_real_type: str
    visible: dict[int, bool] = Field(default_factory=dict)
    invisible: list[int] = Field(default_factory=list)
    j_sign: int = 0
    theta_inside: Optional[int] = None


class AtlasSummary(BaseModel):
    """Atlas cross-check of the verdict 结论的图集交叉检查

    Attributes:
        status: "Pass" or "Violation" 状态
        quintic: Observed quintic class 观测到的五次曲线类
        verdict: Observed verdict 观测到的结论
        cubic_candidates: Cubic classes still possible for X X 的候选类
        records: Compatible (cubic, quintic, category) records 兼容的图集记录
        citations: Rules and table rows justifying the verdict 支持结论的规则与表行
    """

    status: str
    quintic: str
    verdict: str
    cubic_candidates: list[str] = Field(default_factory=list)
    records: list[dict[str, Any]] = Field(default_factory=list)
    citations: list[str] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.status == "Pass"


class AnalysisReport(BaseModel):
    """Report of one pass through the analysis chain 一次分析链的报告

    A singular marked line stops the chain after the line diagnostics: topology, contact, region,
    verdict and atlas stay empty and degenerate is set.
    标记直线奇异时分析链在直线诊断后停止，degenerate 置位。

    Attributes:
        run_id: Run ID 运行 ID
        source: Input path or example name 输入路径或示例名称
        input: Echo of the input document 输入文档回显
        spectral: Spectral pair, absent for a curve document 谱对
        line: Line diagnostics, absent for a curve document 直线诊断
        degenerate: The marked line is singular on X 标记直线在 X 上奇异
        topology: Quintic topology 五次曲线拓扑
        contact: Contact report 相切报告
        region: Region report 区域报告
        verdict: "Perfect" or "Skew" 结论
        atlas: Atlas cross-check 图集交叉检查
        timings: Stage name -> milliseconds 各阶段耗时（毫秒）
        metadata: Version stamp 版本信息
    """

    run_id: str
    source: Optional[str] = None
    input: dict[str, Any] = Field(default_factory=dict)
    spectral: Optional[SpectralSummary] = None
    line: Optional[LineDiagnostics] = None
    degenerate: bool = False
    topology: Optional[TopologySummary] = None
    contact: Optional[ContactSummary] = None
    region: Optional[RegionSummary] = None
    verdict: Optional[str] = None
    atlas: Optional[AtlasSummary] = None
    timings: dict[str, int] = Field(default_factory=dict)
    metadata: dict[str, str] = Field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.atlas is None or self.atlas.passed


class SectionReport(BaseModel):
    """Real lines of a hyperplane section against the sheet formula 超平面截面实直线与层数公式

    Attributes:
        plane_line: Coefficients (a, b, c) of m 直线 m 的系数
        outside: Real points of S ∩ m outside theta 在 theta 外的实交点数
        inside: Real points of S ∩ m inside theta 在 theta 内的实交点数
        predicted: Real lines predicted by the sheet formula 层数公式预测的实直线数
        counted: Real lines found on the section 截面上的实直线数
        spectrum: r_re, r_im and c of the section's spectrum 截面谱的计数
        truncated_codes: Truncated codes of the counted lines 截断码
        agrees: predicted == counted 二者一致
    """

    run_id: str
    plane_line: list[str]
    outside: int
    inside: int
    predicted: int
    counted: int
    spectrum: dict[str, int] = Field(default_factory=dict)
    truncated_codes: list[str] = Field(default_factory=list)
    agrees: bool = True
    metadata: dict[str, str] = Field(default_factory=dict)


class CorpusEntry(BaseModel):
    """One document of a corpus run 语料运行中的一个文档"""

    source: str
    status: str
    exit_code: int = 0
    report: Optional[AnalysisReport] = None
    error: Optional[dict[str, Any]] = None


class SurfaceReport(BaseModel):
    """Line report for a marked cubic surface 标记三次曲面的直线报告

    Attributes:
        run_id: Run ID 运行 ID
        source: Input path 输入路径
        spectral_form: Binary quintic spectrum form 谱型
        spectrum: One row per spectral point 每个谱点一行
        counts: r_re, r_im and c r_re、r_im 与 c
        line_type: Hyperbolic or Elliptic, None for a parabolic marked line 标记直线类型
        real_lines: Real lines counted among the sixteen coded lines, None when the codes could
            not be certified 在十六条编码直线中统计的实直线数，未认证时为 None
        expected_real_lines: 2^(4−c), or 0 when r_im > 0 由谱计数给出的预期值
        truncated_codes: Truncated codes of those lines 截断码
        codes: The sixteen codes 十六个码
        digits: Working precision of the coded lines, None when they are exact 工作精度
        parity: Common parity of the sixteen codes 十六个码的公共奇偶性
        notes: Stages skipped and why 跳过的阶段及原因
    """

    run_id: str
    source: Optional[str] = None
    spectral_form: str
    spectrum: list[dict[str, Any]] = Field(default_factory=list)
    counts: dict[str, int] = Field(default_factory=dict)
    line_type: Optional[str] = None
    real_lines: Optional[int] = None
    expected_real_lines: int = 0
    truncated_codes: list[str] = Field(default_factory=list)
    codes: list[dict[str, Any]] = Field(default_factory=list)
    parity: Optional[int] = None
    digits: Optional[int] = None
    notes: list[str] = Field(default_factory=list)
    metadata: dict[str, str] = Field(default_factory=dict)
