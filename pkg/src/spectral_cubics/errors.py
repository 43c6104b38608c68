"""Error hierarchy 错误层次

Every failure the library can report, grouped by CLI exit code
库可报告的所有失败，按命令行退出码分组
"""

from typing import Any, Optional

# Exit codes 退出码
EXIT_OK = 0
EXIT_INPUT = 2
EXIT_COMPUTATION = 3
EXIT_ATLAS = 4


class SpectralCubicsError(Exception):
    """Base error 基础错误

    Attributes:
        code: Stable identifier shown in reports 报告中显示的稳定标识
        exit_code: CLI exit status 命令行退出状态
    """

    exit_code = EXIT_COMPUTATION

    def __init__(self, message: str = "", **details: Any):
        super().__init__(message or self.__class__.__name__)
        self.details = details

    @property
    def code(self) -> str:
        return self.__class__.__name__


class InputError(SpectralCubicsError):
    """The input violates a precondition 输入违反前置条件"""

    exit_code = EXIT_INPUT


class ComputationFailure(SpectralCubicsError):
    """A certified computation could not finish 认证计算未能完成"""

    exit_code = EXIT_COMPUTATION


# ─── poly_core ───


class PolySyntaxError(InputError):
    """Malformed polynomial text 多项式文本格式错误"""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} at line {line}, column {column}", line=line, column=column)
        self.line = line
        self.column = column


class ZeroPolynomial(InputError):
    """Zero polynomial where a nonzero one is required 需要非零多项式"""


class DegenerateResultant(InputError):
    """Both arguments constant in the eliminated variable 两者均不含消元变量"""


# ─── threefold_spectral ───


class LineNotOnCubic(InputError):
    """The marked line does not lie on the cubic 标记直线不在三次型上"""


class DegenerateSpan(InputError):
    """The two points do not span a line 两点不张成直线"""


class NotSingularThere(InputError):
    """Gradient does not vanish at the point 梯度在该点不为零"""


class WorseThanQuadratic(InputError):
    """Quadratic part vanishes at the node 节点处二次部分为零"""


# ─── curve_topology ───


class NotSquareFree(InputError):
    """Curve has a repeated component 曲线有重复分支"""


class SingularInput(InputError):
    """Smooth curve required 需要光滑曲线"""


class CommonComponent(InputError):
    """Quintic and conic share a component 五次曲线与二次曲线有公共分支"""


class ThetaNotReduced(InputError):
    """Conic has rank below 2 二次曲线秩小于 2"""


class NonGenericLine(InputError):
    """Line is tangent to S or T, or passes through S ∩ T 直线不一般"""


class ChartFailure(ComputationFailure):
    """No chart in the schedule gave a generic sweep 无可用仿射图"""


class ConvexityUndecided(ComputationFailure):
    """Convexity of four ovals could not be certified 四个卵形线的凸性无法认证"""


# ─── gf2_theta ───


class NotInK(InputError):
    """Class is not fixed by the involution 类不被对合固定"""


class ZeroClass(InputError):
    """Zero class given 给定零类"""


class NotQuadratic(InputError):
    """Function is not a quadratic refinement 函数不是二次加细"""


class ModelVerificationFailed(ComputationFailure):
    """A standard model failed its post-checks 标准模型后验检查失败"""


# ─── surface_lines ───


class SpectrumDegenerate(InputError):
    """Spectrum has a multiple root 谱有重根"""


class NonGeneric(InputError):
    """Parabolic line (vanishing discriminant) 抛物型直线"""


class NotGeneral(InputError):
    """Point configuration is not in general position 点不在一般位置"""


class CertificationFailure(ComputationFailure):
    """Incidence could not be certified 关联无法认证"""


# ─── pipeline / atlas ───


class SectionSingular(InputError):
    """Hyperplane section is singular 超平面截面奇异"""


class AtlasViolation(SpectralCubicsError):
    """Result contradicts the classification atlas 结果与分类图集矛盾"""

    exit_code = EXIT_ATLAS


class StageError(SpectralCubicsError):
    """A pipeline stage failed 流水线阶段失败

    Attributes:
        stage: Stage name 阶段名称
        cause: Underlying error 底层错误
    """

    def __init__(self, stage: str, cause: Exception):
        super().__init__(f"{stage}: {cause}")
        self.stage = stage
        self.cause = cause
        self.exit_code = getattr(cause, "exit_code", EXIT_COMPUTATION)

    @property
    def code(self) -> str:
        return getattr(self.cause, "code", type(self.cause).__name__)


def error_payload(error: Exception, stage: Optional[str] = None) -> dict[str, Any]:
    """Create a structured error payload 创建结构化错误负载

    Args:
        error: Exception 异常
        stage: Stage name when known 阶段名称

    Returns:
        Error payload dict 错误负载字典
    """
    if isinstance(error, StageError):
        stage = error.stage
        inner: Exception = error.cause
    else:
        inner = error
    status = getattr(inner, "exit_code", EXIT_COMPUTATION)
    body: dict[str, Any] = {
        "type": getattr(inner, "code", type(inner).__name__),
        "message": str(inner),
    }
    if stage:
        body["stage"] = stage
    details = getattr(inner, "details", None)
    if details:
        body["details"] = {k: str(v) for k, v in details.items()}
    return {"error": body, "status": status}
