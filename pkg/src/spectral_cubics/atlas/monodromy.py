"""Monodromy on the real Fano components 实 Fano 分支上的单值作用"""

from dataclasses import dataclass
from math import factorial
from typing import Optional

from .classes import C0, C1, C1_I, C1_I2, C2, C3, C3_I, C4, C5, CubicClass, cubic_class
from .fano import fano_lookup


@dataclass(frozen=True)
class MonodromyFacts:
    """Group permuting the components of F_R(X) F_R(X) 分支的置换群

    Attributes:
        cubic: Cubic class code 三次三维簇类代码
        group: Group descriptor, None where it is not determined 群描述
        order: Group order 群阶
        torus_orbits: Orbit sizes on the tori 环面上的轨道大小
        citation: Source row 出处
    """

    cubic: str
    group: Optional[str]
    order: Optional[int]
    torus_orbits: tuple[int, ...]
    citation: str


# S_{123,456}: permutations of six symbols preserving {1,2,3} ∪ {4,5,6}, blocks may swap
M_CUBIC_GROUP = "S_{123,456}"
M_CUBIC_ORDER = 2 * factorial(3) ** 2

# C_{5-k}, k ≥ 1: the symmetric group on 6 - k symbols
_SYMMETRIC = {C4: 5, C3: 4, C2: 3, C1: 2}


def monodromy_facts(cx: "str | CubicClass") -> MonodromyFacts:
    """Monodromy descriptor of a cubic class 三次三维簇类的单值群描述

    For C3_I only the two orbits of three tori are known; the group itself is left open.
    """
    code = cubic_class(cx).code
    orbits = fano_lookup(code).orbits
    citation = f"monodromy, row {code}"
    if code == C5:
        return MonodromyFacts(code, M_CUBIC_GROUP, M_CUBIC_ORDER, orbits, citation)
    if code in _SYMMETRIC:
        n = _SYMMETRIC[code]
        return MonodromyFacts(code, f"S{n}", factorial(n), orbits, citation)
    if code in (C0, C1_I, C1_I2):
        # components pairwise non-homeomorphic or a single component
        return MonodromyFacts(code, "trivial", 1, orbits, citation)
    assert code == C3_I
    return MonodromyFacts(code, None, None, orbits, citation)
