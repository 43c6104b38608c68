"""Merging of coded lines under a nodal degeneration 节点退化下编码直线的合并

The codes are taken with respect to a coherent marking of a perturbation: the first two bits
belong to the two tritangent planes that come together in the plane through the node. Lines
coded 01b and 10b merge into the double line b; lines coded bbb' tend to the simple line bb'.
码取自扰动的相容标记：前两位属于汇合到过节点平面的两个三切平面。01b 与 10b 合并为重直线 b；
bbb' 趋于单直线 bb'。
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

from ..errors import InputError

DISJOINT_LINES = 16


class MergeCase(str, Enum):
    """Reality of the colliding planes and of the lines in the nodal plane
    汇合平面与节点平面中直线的实性
    """

    REAL_PLANES_REAL_LINES = "real-planes-real-lines"
    IMAGINARY_PLANES_REAL_LINES = "imaginary-planes-real-lines"
    IMAGINARY_PLANES_IMAGINARY_LINES = "imaginary-planes-imaginary-lines"


@dataclass
class MergePattern:
    """Which coded lines merge and what they tend to 合并模式

    Attributes:
        merging: Pairs (01b, 10b) that merge 合并的码对
        univalent: Codes whose lines do not merge 不合并的码
        limits: Code → code of the limit line (three bits for a double line) 极限直线的码
        violations: Codes contradicting the expected pattern 违反预期模式的码
    """

    merging: list[tuple[str, str]] = field(default_factory=list)
    univalent: list[str] = field(default_factory=list)
    limits: dict[str, str] = field(default_factory=dict)
    violations: list[str] = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        return not self.violations


def _words(codes: Sequence[Sequence[int] | str]) -> list[str]:
    words = ["".join(str(int(b)) for b in c) if not isinstance(c, str) else c for c in codes]
    if any(len(w) != 5 or set(w) - {"0", "1"} for w in words):
        raise InputError("codes must be five-bit words", codes=words)
    if len(set(words)) != len(words):
        raise InputError("codes must be distinct", codes=words)
    return sorted(words)


def _pattern(words: list[str]) -> MergePattern:
    pattern = MergePattern()
    present = set(words)
    for w in words:
        if w[0] == w[1]:
            pattern.univalent.append(w)
            pattern.limits[w] = w[0] + w[2:]
        elif w[0] == "0":
            partner = "10" + w[2:]
            pattern.limits[w] = w[2:]
            if partner in present:
                pattern.merging.append((w, partner))
            else:
                pattern.violations.append(w)
        else:
            pattern.limits[w] = w[2:]
            if "01" + w[2:] not in present:
                pattern.violations.append(w)
    return pattern


def complex_merging(codes: Sequence[Sequence[int] | str]) -> MergePattern:
    """Merging of the sixteen lines disjoint from a simple line 与单直线不相交的十六条直线的合并

    Eight lines merge pairwise into the four double lines disjoint from the line; the other eight
    tend to simple lines.
    """
    words = _words(codes)
    if len(words) != DISJOINT_LINES:
        raise InputError("expected the sixteen codes of one marking", found=len(words))
    pattern = _pattern(words)
    if len(pattern.merging) != 4:
        pattern.violations.append(f"{len(pattern.merging)} merging pairs")
    return pattern


def real_merging_case(planes_real: bool, lines_real: bool) -> MergeCase:
    """Case of a real nodal degeneration 实节点退化的情形

    Raises:
        InputError: real colliding planes with imaginary lines in the nodal plane 不可能的组合
    """
    if planes_real and lines_real:
        return MergeCase.REAL_PLANES_REAL_LINES
    if not planes_real:
        if lines_real:
            return MergeCase.IMAGINARY_PLANES_REAL_LINES
        return MergeCase.IMAGINARY_PLANES_IMAGINARY_LINES
    raise InputError("colliding real planes always carry real lines in the nodal plane")


def real_merging(codes: Sequence[Sequence[int] | str], case: MergeCase, c: int = 0) -> MergePattern:
    """Merging of the real lines disjoint from a real simple line 实直线的合并

    Args:
        codes: Codes of the real lines, 2^(4−c) of them 实直线的码
        case: Reality case of the degeneration 退化情形
        c: Conjugate pairs in the spectrum of the perturbation 扰动谱中的共轭对数
    """
    words = _words(codes)
    if len(words) != 2 ** (4 - c):
        raise InputError("expected 2^(4-c) real codes", found=len(words), c=c)
    pattern = _pattern(words)
    equal = [w for w in words if w[0] == w[1]]
    if case is MergeCase.REAL_PLANES_REAL_LINES and len(equal) * 2 != len(words):
        pattern.violations.append(f"{len(equal)} univalent codes out of {len(words)}")
    elif case is MergeCase.IMAGINARY_PLANES_REAL_LINES:
        pattern.violations += [w for w in words if w[0] != w[1]]
    elif case is MergeCase.IMAGINARY_PLANES_IMAGINARY_LINES:
        pattern.violations += equal
    return pattern
