"""Configuration models 配置模型

Pydantic models for analysis settings
分析设置的 Pydantic 模型
"""

from pydantic import BaseModel, Field, field_validator


DEFAULT_SHEAR_SCHEDULE = [0, 1, -1, 2, -2, 3, -3]


class AnalysisSettings(BaseModel):
    """Analysis settings 分析设置

    Attributes:
        shear_schedule: Shears k tried for x -> x + k*y 依次尝试的剪切参数
        chart_schedule: Lines at infinity z + a*x + b*y tried in order 依次尝试的无穷远直线
        refine_budget: Bisection rounds before giving up 放弃前的二分轮数
        grid_size: Sign-grid resolution for oracle checks 符号网格分辨率
        epsilon_start: Initial perturbation size for example families 示例族的初始扰动
        epsilon_rounds: Maximum halving rounds 最大减半轮数
        seed: Seed for fuzz suites 模糊测试种子
        fuzz_cases: Random involutions in the GF(2) suite GF(2) 套件中的随机对合数
        workers: Worker pool size for corpus mode 语料模式的工作进程数
    """

    shear_schedule: list[int] = Field(
        default_factory=lambda: list(DEFAULT_SHEAR_SCHEDULE),
        description="Shears tried in order 依次尝试的剪切",
    )
    chart_schedule: list[tuple[int, int]] = Field(
        default_factory=lambda: [(0, 0), (1, 0), (0, 1), (1, 1), (2, -1), (-1, 2), (3, 1)],
        description="Charts z + a*x + b*y = 0 tried in order 依次尝试的仿射图",
    )
    refine_budget: int = Field(60, ge=1, description="Bisection rounds 二分轮数")
    grid_size: int = Field(120, ge=8, description="Oracle grid size 网格大小")
    epsilon_start: str = Field("1/10", description="Initial epsilon 初始 epsilon")
    epsilon_rounds: int = Field(12, ge=1, description="Halving rounds 减半轮数")
    seed: int = Field(0, description="Fuzz seed 模糊种子")
    fuzz_cases: int = Field(1000, ge=0, description="Fuzzed involutions 随机对合数")
    workers: int = Field(1, ge=1, description="Corpus workers 工作进程数")

    @field_validator("shear_schedule")
    @classmethod
    def _non_empty(cls, value: list[int]) -> list[int]:
        if not value:
            raise ValueError("shear_schedule cannot be empty")
        return value
