"""Input document models 输入文档模型

Pydantic models for the JSON documents accepted by the CLI
命令行接受的 JSON 文档的 Pydantic 模型
"""

from fractions import Fraction
from typing import Optional, Union

from pydantic import BaseModel, Field, field_validator, model_validator


THREEFOLD_VARIABLES = ["x", "y", "z", "u", "v"]
SURFACE_VARIABLES = ["x", "y", "u", "v"]

# A rational written as an int or as "p/q" text 整数或 "p/q" 文本形式的有理数
RationalText = Union[int, str]


def parse_rational(value: RationalText) -> Fraction:
    """Parse an int or "p/q" string 解析有理数"""
    try:
        return Fraction(str(value).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {value!r}") from exc


def _check_point(point: list[RationalText], arity: int, label: str) -> None:
    if len(point) != arity:
        raise ValueError(f"{label} needs {arity} coordinates, got {len(point)}")
    for value in point:
        parse_rational(value)


class CubicDocument(BaseModel):
    """Cubic threefold with a marked line 带标记直线的三次三维簇

    Attributes:
        variables: Ordered names of the five homogeneous coordinates 五个齐次坐标名
        cubic: Polynomial text of the cubic form 三次型文本
        line: Two points spanning the marked line 张成标记直线的两点
        parameters: Construction parameters of a generated document 生成文档的构造参数
    """

    variables: list[str] = Field(default_factory=lambda: list(THREEFOLD_VARIABLES))
    cubic: str = Field(..., description="Cubic form 三次型")
    line: list[list[RationalText]] = Field(
        default_factory=lambda: [[0, 0, 0, 1, 0], [0, 0, 0, 0, 1]],
        description="Two points of P^4 P^4 中的两点",
    )
    parameters: dict[str, str] = Field(
        default_factory=dict,
        description="How a generated document was built 生成文档的构造参数",
    )

    @field_validator("variables")
    @classmethod
    def _five_names(cls, value: list[str]) -> list[str]:
        if len(value) != 5 or len(set(value)) != 5:
            raise ValueError("variables must be five distinct names")
        return value

    @model_validator(mode="after")
    def _line_shape(self) -> "CubicDocument":
        if len(self.line) != 2:
            raise ValueError("line must be given by exactly two points")
        for i, point in enumerate(self.line):
            _check_point(point, 5, f"line[{i}]")
        return self

    def points(self) -> list[list[Fraction]]:
        return [[parse_rational(c) for c in point] for point in self.line]


class SurfaceDocument(BaseModel):
    """Cubic surface with a marked line 带标记直线的三次曲面

    Attributes:
        variables: Ordered names of the four homogeneous coordinates 四个齐次坐标名
        surface: Polynomial text of the cubic form 三次型文本
        line: Two points spanning the marked line (defaults to x = y = 0) 标记直线
    """

    variables: list[str] = Field(default_factory=lambda: list(SURFACE_VARIABLES))
    surface: str
    line: list[list[RationalText]] = Field(
        default_factory=lambda: [[0, 0, 1, 0], [0, 0, 0, 1]],
    )

    @field_validator("variables")
    @classmethod
    def _four_names(cls, value: list[str]) -> list[str]:
        if len(value) != 4 or len(set(value)) != 4:
            raise ValueError("variables must be four distinct names")
        return value

    @model_validator(mode="after")
    def _line_shape(self) -> "SurfaceDocument":
        if len(self.line) != 2:
            raise ValueError("line must be given by exactly two points")
        for i, point in enumerate(self.line):
            _check_point(point, 4, f"line[{i}]")
        return self

    def points(self) -> list[list[Fraction]]:
        return [[parse_rational(c) for c in point] for point in self.line]


class CurveDocument(BaseModel):
    """Real plane curve, optionally with a conic 实平面曲线（可带二次曲线）"""

    variables: list[str] = Field(default_factory=lambda: ["x", "y", "z"])
    curve: str
    conic: Optional[str] = None
    parameters: dict[str, str] = Field(default_factory=dict)

    @field_validator("variables")
    @classmethod
    def _three_names(cls, value: list[str]) -> list[str]:
        if len(value) != 3 or len(set(value)) != 3:
            raise ValueError("variables must be three distinct names")
        return value
