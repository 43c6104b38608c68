"""Spectral matchings 谱匹配

A matching pairs a cubic class [X] with a quintic class [S]. It is spectral, realized by some
real line, exactly when it is perfect (equal discrepancy and Klein type), type-preserving skew
(d_S = d_X + 2, equal types) or admissible mixed skew (d_S = d_X + 2, X of type I with connected
real locus, S of type II).
匹配将三次三维簇类与五次曲线类配对；当且仅当其为完美、保型斜或可容许混合斜匹配时为谱匹配。
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Optional

from ..errors import InputError
from ..utils.logger import logger
from .classes import (
    CUBIC_ORDER,
    KLEIN_I,
    KLEIN_II,
    QUINTIC_ORDER,
    CubicClass,
    QuinticClass,
    cubic_class,
    quintic_class,
)
from .fano import fano_lookup, realizing_choice


class MatchingCategory(str, Enum):
    """Category of a matching 匹配类别"""

    PERFECT = "Perfect"
    SKEW_TYPE_PRESERVING = "SkewTypePreserving"
    SKEW_ADMISSIBLE_MIXED = "SkewAdmissibleMixed"
    NOT_SPECTRAL = "NotSpectral"


CITATIONS = {
    MatchingCategory.PERFECT: "matching rule: d_X = d_S and equal Klein types",
    MatchingCategory.SKEW_TYPE_PRESERVING: "matching rule: d_S = d_X + 2 and equal Klein types",
    MatchingCategory.SKEW_ADMISSIBLE_MIXED: (
        "matching rule: d_S = d_X + 2, X of type I with connected real locus, S of type II"
    ),
    MatchingCategory.NOT_SPECTRAL: "matching rule: no spectral category applies",
}

PASS = "Pass"
VIOLATION = "Violation"


@dataclass(frozen=True)
class MatchingRecord:
    """One spectral deformation class of pairs (X, l) 一个 (X, l) 谱形变类

    Attributes:
        cubic: Cubic class code 三次三维簇类代码
        quintic: Quintic class code 五次曲线类代码
        category: Matching category 匹配类别
        component: Kind of Fano component whose lines realize it 实现该匹配的 Fano 分支类别
        citation: Rule that admits it 允许该匹配的规则
    """

    cubic: str
    quintic: str
    category: MatchingCategory
    component: Optional[str]
    citation: str


@dataclass
class CrossCheck:
    """Comparison of a pipeline verdict with the atlas 流水线结论与图集的比对

    Attributes:
        status: "Pass" or "Violation" 状态
        quintic: Observed quintic class 观测到的五次曲线类
        verdict: Observed verdict, "Perfect" or "Skew" 观测到的结论
        records: Atlas records compatible with the observation 兼容的图集记录
        citations: Citations of the compatible records 引用
    """

    status: str
    quintic: str
    verdict: str
    records: list[MatchingRecord] = field(default_factory=list)
    citations: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.status == PASS


def matching_category(cx: "str | CubicClass", qx: "str | QuinticClass") -> MatchingCategory:
    """Category of the matching ([X], [S]) 匹配 ([X], [S]) 的类别

    Raises:
        InputError: unknown class code 未知类代码
    """
    x = cubic_class(cx)
    s = quintic_class(qx)
    if x.d == s.d and x.klein == s.klein:
        return MatchingCategory.PERFECT
    if s.d != x.d + 2:
        return MatchingCategory.NOT_SPECTRAL
    if x.klein == s.klein:
        return MatchingCategory.SKEW_TYPE_PRESERVING
    if x.klein == KLEIN_I and x.connected and s.klein == KLEIN_II:
        return MatchingCategory.SKEW_ADMISSIBLE_MIXED
    return MatchingCategory.NOT_SPECTRAL


def enumerate_matchings() -> list[MatchingRecord]:
    """Every spectral matching, in class order 按类顺序列出全部谱匹配"""
    records = []
    for x in CUBIC_ORDER:
        for s in QUINTIC_ORDER:
            category = matching_category(x, s)
            if category is MatchingCategory.NOT_SPECTRAL:
                continue
            choice = realizing_choice(x, s)
            records.append(
                MatchingRecord(
                    cubic=x,
                    quintic=s,
                    category=category,
                    component=choice.selector if choice else None,
                    citation=CITATIONS[category],
                )
            )
    return records


def _verdict_value(verdict: object) -> str:
    value = str(getattr(verdict, "value", verdict))
    if value not in ("Perfect", "Skew"):
        raise InputError("verdict must be Perfect or Skew", verdict=value)
    return value


def cross_check(
    qx: "str | QuinticClass",
    verdict: object,
    cubic_candidates: Optional[Iterable[str]] = None,
) -> CrossCheck:
    """Look up the atlas records compatible with an observed quintic and verdict
    查找与观测到的五次曲线类及结论相容的图集记录

    Args:
        qx: Quintic class computed by the topology stage 拓扑阶段得到的五次曲线类
        verdict: Perfect or Skew from the skew test 斜性检验的结论
        cubic_candidates: Cubic classes still possible for X, all when None X 的候选类
    """
    code = quintic_class(qx).code
    value = _verdict_value(verdict)
    candidates = set(CUBIC_ORDER if cubic_candidates is None else map(str, cubic_candidates))
    for c in candidates:
        cubic_class(c)
    records = [
        r
        for r in enumerate_matchings()
        if r.quintic == code
        and r.cubic in candidates
        and (r.category is MatchingCategory.PERFECT) == (value == "Perfect")
    ]
    status = PASS if records else VIOLATION
    citations = {r.citation for r in records} | {fano_lookup(r.cubic).citation for r in records}
    logger.debug("Atlas cross-check", {"quintic": code, "verdict": value, "status": status})
    return CrossCheck(
        status=status,
        quintic=code,
        verdict=value,
        records=records,
        citations=sorted(citations),
    )
