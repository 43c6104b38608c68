"""Real Fano surfaces and the quintics of their components 实 Fano 曲面及其分支对应的五次曲线

A real line l on X picks a component of F_R(X). Lines on the odd component N(X) give a spectral
quintic with the same discrepancy and Klein type as X; lines on the other components give
d_S = d_X + 2. Tori of C5 and C3_I split into two monodromy orbits, T_I and T_II, according to
the Klein type of the quintic.
X 上的实直线选取 F_R(X) 的一个分支。奇分支 N(X) 上的直线给出与 X 同差同型的谱五次曲线；
其它分支给出 d_S = d_X + 2。
"""

from dataclasses import dataclass, field
from typing import Optional

from ..errors import InputError
from ..topology.curve import FOUR_I, FOUR_II, NEST
from .classes import (
    C0,
    C1,
    C1_I,
    C1_I2,
    C2,
    C3,
    C3_I,
    C4,
    C5,
    CubicClass,
    QuinticClass,
    cubic_class,
    quintic_class,
)

# Component selectors 分支选择符
ODD = "N"
TORUS = "T"
TORUS_I = "T_I"
TORUS_II = "T_II"
N6 = "N6"

# Difference-class tags 差类标签
H_I = "h_I"
H_II = "h_II"


@dataclass(frozen=True)
class FanoChoice:
    """Quintic obtained from lines on one kind of component 一类分支上直线给出的五次曲线

    Attributes:
        selector: Component kind, "N", "T", "T_I", "T_II" or "N6" 分支类别
        quintic: Quintic class code 五次曲线类代码
        tag: Type of the difference class h, "h_I" when h = w_c 差类 h 的类型
    """

    selector: str
    quintic: str
    tag: Optional[str] = None


@dataclass(frozen=True)
class FanoRow:
    """Fano surface row of a cubic class 三次三维簇类的 Fano 曲面行

    Attributes:
        cubic: Cubic class code 三次三维簇类代码
        odd_component: Component with odd Euler characteristic, N(X) 奇欧拉示性数分支
        other_components: Non-toric components besides N(X) 除 N(X) 外的非环面分支
        tori: Number of toric components 环面分支数
        orbits: Sizes of the monodromy orbits on the tori 环面上单值群轨道大小
        choices: Quintic per component kind 各分支类别对应的五次曲线
        real_locus: Topology of F_R(X) F_R(X) 的拓扑
        citation: Source row 出处
    """

    cubic: str
    odd_component: str
    other_components: tuple[str, ...] = ()
    tori: int = 0
    orbits: tuple[int, ...] = ()
    choices: tuple[FanoChoice, ...] = field(default_factory=tuple)
    real_locus: str = ""
    citation: str = ""

    def choice(self, selector: str) -> FanoChoice:
        for c in self.choices:
            if c.selector == selector:
                return c
        raise InputError(
            f"{self.cubic} has no component kind {selector!r}",
            known=[c.selector for c in self.choices],
        )


def _row(
    cubic: str,
    *choices: FanoChoice,
    tori: int = 0,
    orbits: tuple[int, ...] = (),
    odd: str = "N5",
    others: tuple[str, ...] = (),
) -> FanoRow:
    parts = [odd, *others]
    if tori == 1:
        parts.append("T2")
    elif tori:
        parts.append(f"{tori}T2")
    return FanoRow(
        cubic=cubic,
        odd_component=odd,
        other_components=others,
        tori=tori,
        orbits=orbits,
        choices=choices,
        real_locus=" ⊔ ".join(parts),
        citation=f"Fano table, row {cubic}",
    )


FANO_TABLE: dict[str, FanoRow] = {
    C0: _row(C0, FanoChoice(ODD, "J⊔1")),
    C1_I2: _row(C1_I2, FanoChoice(ODD, NEST)),
    C1_I: _row(C1_I, FanoChoice(ODD, NEST), FanoChoice(N6, "J", H_I), odd="RP2", others=("N6",)),
    C1: _row(C1, FanoChoice(ODD, "J⊔2"), FanoChoice(TORUS, "J", H_II), tori=1, orbits=(1,)),
    C2: _row(C2, FanoChoice(ODD, "J⊔3"), FanoChoice(TORUS, "J⊔1"), tori=3, orbits=(3,)),
    C3_I: _row(
        C3_I,
        FanoChoice(ODD, FOUR_I),
        FanoChoice(TORUS_I, NEST),
        FanoChoice(TORUS_II, "J⊔2", H_I),
        tori=6,
        orbits=(3, 3),
    ),
    C3: _row(C3, FanoChoice(ODD, FOUR_II), FanoChoice(TORUS, "J⊔2", H_II), tori=6, orbits=(6,)),
    C4: _row(C4, FanoChoice(ODD, "J⊔5"), FanoChoice(TORUS, "J⊔3"), tori=10, orbits=(10,)),
    C5: _row(
        C5,
        FanoChoice(ODD, "J⊔6"),
        FanoChoice(TORUS_I, FOUR_I),
        FanoChoice(TORUS_II, FOUR_II),
        tori=15,
        orbits=(6, 9),
    ),
}


def fano_lookup(cx: "str | CubicClass") -> FanoRow:
    """Fano row of a cubic class 三次三维簇类的 Fano 行"""
    return FANO_TABLE[cubic_class(cx).code]


def expected_quintic(
    cx: "str | CubicClass", selector: str = ODD
) -> tuple[QuinticClass, Optional[str]]:
    """Quintic class of a line on the selected component, with its difference-class tag
    所选分支上直线的五次曲线类及差类标签

    Raises:
        InputError: unknown class or component kind 未知类或分支类别
    """
    choice = fano_lookup(cx).choice(selector)
    return quintic_class(choice.quintic), choice.tag


def realizing_choice(cx: "str | CubicClass", qx: "str | QuinticClass") -> Optional[FanoChoice]:
    """Component kind whose lines realize the matching (X, S) 实现匹配 (X, S) 的分支类别"""
    code = quintic_class(qx).code
    for choice in fano_lookup(cx).choices:
        if choice.quintic == code:
            return choice
    return None
