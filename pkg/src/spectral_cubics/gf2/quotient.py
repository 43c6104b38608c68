"""Quotients h^⊥/h and spectral difference classes 商空间 h^⊥/h 与谱差类"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np

from ..errors import NotInK, ZeroClass
from ..utils.logger import logger
from .bits import as_bits, echelon, in_span, kernel, mat_mul, pack, solve, stack, unpack
from .lattice import SubgroupLattice, subgroup_lattice, symmetrizer
from .space import QuadSpace, arf

# Quotient cases 商的情形
CASE_I0 = "I0"
CASE_I1 = "I1"
CASE_K_MINUS_I = "K-minus-I"

# Change of discrepancy d - d' per case 各情形下差的变化
DISCREPANCY_DROP = {CASE_I0: 2, CASE_I1: 1, CASE_K_MINUS_I: 0}


class DifferenceMode(str, Enum):
    """Kind of spectral matching 谱匹配类型"""

    PERFECT = "perfect"
    SKEW = "skew"


@dataclass(frozen=True, eq=False)
class Quotient:
    """V' = h^⊥/h with its induced structure 带诱导结构的商空间

    Attributes:
        space: Induced pairing, involution and (when it descends) q0 诱导空间
        lattice: Subgroup lattice of V' V' 的子群格
        case: Which of I₀, I₁, K∖I contains h h 所在的情形
        q_descends: Whether q0(h) = 0, so q0 induces a function on V' q0 是否下降
    """

    space: QuadSpace
    lattice: SubgroupLattice
    case: str
    q_descends: bool

    @property
    def d_prime(self) -> int:
        return self.lattice.d


@dataclass(frozen=True, eq=False)
class DifferenceClasses:
    """Admissible difference classes h 可容许差类

    Attributes:
        mode: Perfect or skew 完美或偏斜
        classes: Rows h of K₀∖I (perfect) or (K₀ ∩ I)∖{0} (skew) 差类
        mixed: Skew classes with h = w_c 满足 h = w_c 的偏斜类
        type_preserving: Skew classes with h ≠ w_c 满足 h ≠ w_c 的偏斜类
    """

    mode: DifferenceMode
    classes: np.ndarray
    mixed: Optional[np.ndarray] = None
    type_preserving: Optional[np.ndarray] = None

    @property
    def count(self) -> int:
        return int(self.classes.shape[0])


def _check_class(space: QuadSpace, h: np.ndarray) -> np.ndarray:
    h = as_bits(h)
    if not h.any():
        raise ZeroClass("difference class must be nonzero", space=space.name)
    if not np.array_equal(space.apply(h), h):
        raise NotInK("class is not fixed by conj", space=space.name, h=pack(h))
    return h


def quotient_case(lattice: SubgroupLattice, h: np.ndarray) -> str:
    if lattice.in_i0(h):
        return CASE_I0
    if lattice.in_i(h):
        return CASE_I1
    return CASE_K_MINUS_I


def quotient_discrepancy(space: QuadSpace, h: np.ndarray) -> int:
    """d' = dim((1 + c)(h^⊥) + ⟨h⟩) - 1, without building the quotient 直接计算 d'"""
    h = _check_class(space, h)
    n = space.dim
    perp = kernel([int(bit) for bit in space.dual(h)])
    phi = symmetrizer(space)
    images = [pack(mat_mul(phi, unpack(x, n))) for x in perp]
    return len(echelon(images + [pack(h)])) - 1


def quotient_by(space: QuadSpace, h: np.ndarray) -> Quotient:
    """Induced structure on h^⊥/h for h ∈ K∖{0} 构造 h^⊥/h 上的诱导结构

    Raises:
        ZeroClass: h = 0 零类
        NotInK: c h ≠ h 不属于 K
    """
    h = _check_class(space, h)
    n = space.dim
    hp = pack(h)

    perp = kernel([int(bit) for bit in space.dual(h)])
    span = echelon([hp])
    complement: list[int] = []
    for v in perp:
        if not in_span(v, span):
            complement.append(v)
            span = echelon(list(span.values()) + [v])
    frame = [hp] + complement
    w = stack(complement, n)

    conj_cols: list[int] = []
    for v in complement:
        coords = solve(frame, pack(space.apply(unpack(v, n))))
        if coords is None:
            raise NotInK("conj does not preserve h^⊥", space=space.name)
        conj_cols.append(coords >> 1)
    m = len(complement)
    conj = stack(conj_cols, m).T.copy()

    q_descends = space.q0 is not None and space.quad(h) == 0
    labels = tuple(f"w{i + 1}" for i in range(m))
    quotient = QuadSpace(
        gram=mat_mul(mat_mul(w, space.gram), w.T),
        conj=conj,
        q0=space.values(w) if q_descends else None,
        labels=labels,
        name=f"{space.name}/h" if space.name else "",
    )
    case = quotient_case(subgroup_lattice(space), h)
    result = Quotient(
        space=quotient, lattice=subgroup_lattice(quotient), case=case, q_descends=q_descends
    )
    logger.debug("Quotient built", {"space": space.name, "case": case, "d_prime": result.d_prime})
    return result


def theta_quotient_class(space: QuadSpace, h: np.ndarray) -> tuple[str, int]:
    """Case label of h and the discrepancy d' of h^⊥/h h 的情形与 d'"""
    h = _check_class(space, h)
    return quotient_case(subgroup_lattice(space), h), quotient_discrepancy(space, h)


def contact_class_parity(space: QuadSpace, h: np.ndarray) -> int:
    """Arf(q0 + h*), which equals q0(h) + 1 for real q0 of Arf 1 Arf(q0 + h*)"""
    return arf(space, space.shifted(as_bits(h)))


def admissible_difference_classes(space: QuadSpace, mode: DifferenceMode) -> DifferenceClasses:
    """Classes h that can be spectral difference classes 可作为谱差类的 h

    Perfect matchings use K₀∖I. Skew matchings use (K₀ ∩ I)∖{0}, split by whether h = w_c.
    """
    lattice = subgroup_lattice(space)
    k0, _ = lattice.split_k(space)
    i_span = echelon(lattice.i_basis)
    in_i = np.array([in_span(pack(row), i_span) for row in k0], dtype=bool)
    if mode == DifferenceMode.PERFECT:
        return DifferenceClasses(mode=mode, classes=k0[~in_i])
    skew = k0[in_i & k0.any(axis=1)]
    is_wc = np.array([np.array_equal(row, lattice.w_c) for row in skew], dtype=bool)
    return DifferenceClasses(
        mode=mode,
        classes=skew,
        mixed=skew[is_wc],
        type_preserving=skew[~is_wc],
    )
