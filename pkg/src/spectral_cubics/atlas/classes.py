"""Deformation classes of cubic threefolds and plane quintics 三次三维簇与平面五次曲线的形变类"""

from dataclasses import dataclass

from ..errors import InputError
from ..gf2.models import CLASS_INVARIANTS
from ..topology.curve import FOUR_I, FOUR_II, NEST, QUINTIC_CLASSES

KLEIN_I = "I"
KLEIN_II = "II"

# Cubic class codes 三次三维簇类代码
C0, C1, C2, C3, C4, C5 = "C0", "C1", "C2", "C3", "C4", "C5"
C3_I = "C3_I"
C1_I = "C1_I"
C1_I2 = "C1_I(2)"

# Order used by every table, descending discrepancy 所有表格使用的顺序
CUBIC_ORDER = [C0, C1_I2, C1_I, C1, C2, C3_I, C3, C4, C5]
QUINTIC_ORDER = list(QUINTIC_CLASSES)


@dataclass(frozen=True)
class CubicClass:
    """Deformation class of real non-singular cubic threefolds 实非奇异三次三维簇的形变类

    Attributes:
        code: Class code 类代码
        d: Smith discrepancy Smith 差
        klein: Klein type, "I" or "II" Klein 类型
        real_locus: Topology of X_R, H = S1xS2 实轨迹拓扑
        connected: Whether X_R is connected 实轨迹是否连通
    """

    code: str
    d: int
    klein: str
    real_locus: str
    connected: bool = True


@dataclass(frozen=True)
class QuinticClass:
    """Deformation class of real non-singular plane quintics 实非奇异平面五次曲线的形变类

    Attributes:
        code: Class code 类代码
        d: Smith discrepancy, 6 minus the number of ovals Smith 差
        klein: Klein type Klein 类型
        ovals: Number of ovals 卵形线数
        nested: Whether two ovals are nested 是否有嵌套
        real_locus: Arrangement of S_R 实轨迹排布
    """

    code: str
    d: int
    klein: str
    ovals: int
    nested: bool
    real_locus: str


def _connected_sum(k: int) -> str:
    if k == 0:
        return "RP3"
    return "RP3 # (S1xS2)" if k == 1 else f"RP3 # {k}(S1xS2)"


CUBIC_CLASSES: dict[str, CubicClass] = {
    C0: CubicClass(C0, 5, KLEIN_II, _connected_sum(0)),
    C1_I2: CubicClass(C1_I2, 4, KLEIN_I, "RP3 ⊔ S3", connected=False),
    C1_I: CubicClass(C1_I, 4, KLEIN_I, "Σ(2,4,6)"),
    C1: CubicClass(C1, 4, KLEIN_II, _connected_sum(1)),
    C2: CubicClass(C2, 3, KLEIN_II, _connected_sum(2)),
    C3_I: CubicClass(C3_I, 2, KLEIN_I, _connected_sum(3)),
    C3: CubicClass(C3, 2, KLEIN_II, _connected_sum(3)),
    C4: CubicClass(C4, 1, KLEIN_II, _connected_sum(4)),
    C5: CubicClass(C5, 0, KLEIN_I, _connected_sum(5)),
}


def _arrangement(code: str, ovals: int) -> str:
    if code == NEST:
        return "J ⊔ nest of 2 ovals"
    if ovals == 0:
        return "J"
    text = "J ⊔ 1 oval" if ovals == 1 else f"J ⊔ {ovals} ovals"
    if code == FOUR_I:
        return f"{text}, not in convex position"
    if code == FOUR_II:
        return f"{text}, in convex position"
    return text


QUINTIC_CLASS_TABLE: dict[str, QuinticClass] = {
    code: QuinticClass(
        code=code,
        d=CLASS_INVARIANTS[code].d,
        klein=CLASS_INVARIANTS[code].klein_type,
        ovals=CLASS_INVARIANTS[code].ovals,
        nested=code == NEST,
        real_locus=_arrangement(code, CLASS_INVARIANTS[code].ovals),
    )
    for code in QUINTIC_ORDER
}


def cubic_class(code: "str | CubicClass") -> CubicClass:
    """Look up a cubic class by code 按代码查找三次三维簇类

    Raises:
        InputError: unknown code 未知代码
    """
    if isinstance(code, CubicClass):
        return code
    try:
        return CUBIC_CLASSES[code]
    except KeyError:
        raise InputError(f"unknown cubic class {code!r}", known=CUBIC_ORDER) from None


def quintic_class(code: "str | QuinticClass") -> QuinticClass:
    """Look up a quintic class by code 按代码查找五次曲线类

    Raises:
        InputError: unknown code 未知代码
    """
    if isinstance(code, QuinticClass):
        return code
    try:
        return QUINTIC_CLASS_TABLE[code]
    except KeyError:
        raise InputError(f"unknown quintic class {code!r}", known=QUINTIC_ORDER) from None
