"""Kernel, image and characteristic element of 1 + c 1 + c 的核、像与特征元

K = ker(1 + c), I = im(1 + c), d = rank(1 + c). The characteristic element w_c satisfies
x·cx = x·w_c, V₀ = {x : x·cx = 0} and I₀ = (1 + c)(V₀).
"""

from dataclasses import dataclass

import numpy as np

from ..errors import ModelVerificationFailed
from .bits import (
    columns,
    echelon,
    identity,
    in_span,
    kernel,
    mat_mul,
    pack,
    solve,
    span_elements,
    unpack,
)
from .space import QuadSpace


@dataclass(frozen=True, eq=False)
class SubgroupLattice:
    """Subgroups K ⊇ I ⊇ I₀ of V and the element w_c 子群格

    Attributes:
        dim: Dimension of V 空间维数
        k_basis: Packed basis of K K 的打包基
        i_basis: Packed basis of I I 的打包基
        i0_basis: Packed basis of I₀ I₀ 的打包基
        w_c: Characteristic element of x ↦ x·cx 特征元
        d: Smith discrepancy rank(1 + c) Smith 差
        v0_form: Packed linear form x ↦ x·cx 线性型
    """

    dim: int
    k_basis: tuple[int, ...]
    i_basis: tuple[int, ...]
    i0_basis: tuple[int, ...]
    w_c: np.ndarray
    d: int
    v0_form: int

    @property
    def klein_type(self) -> str:
        return "II" if self.w_c.any() else "I"

    @property
    def i1_nonempty(self) -> bool:
        return bool(self.w_c.any())

    def in_k(self, h: np.ndarray) -> bool:
        return in_span(pack(h), echelon(self.k_basis))

    def in_i(self, h: np.ndarray) -> bool:
        return in_span(pack(h), echelon(self.i_basis))

    def in_i0(self, h: np.ndarray) -> bool:
        return in_span(pack(h), echelon(self.i0_basis))

    def in_i1(self, h: np.ndarray) -> bool:
        return self.in_i(h) and not self.in_i0(h)

    def k_elements(self) -> np.ndarray:
        return span_elements(self.k_basis, self.dim)

    def i_elements(self) -> np.ndarray:
        return span_elements(self.i_basis, self.dim)

    def split_k(self, space: QuadSpace) -> tuple[np.ndarray, np.ndarray]:
        """K₀ and K₁, the elements of K where q0 is 0 or 1 按 q0 的值划分 K"""
        elements = self.k_elements()
        values = space.values(elements)
        return elements[values == 0], elements[values == 1]


def symmetrizer(space: QuadSpace) -> np.ndarray:
    """Matrix of 1 + c 1 + c 的矩阵"""
    return identity(space.dim) ^ space.conj


def subgroup_lattice(space: QuadSpace) -> SubgroupLattice:
    """Exact GF(2) computation of K, I, I₀, w_c and d 精确计算子群格

    Raises:
        ModelVerificationFailed: the pairing is degenerate, so w_c is undefined 配对退化
    """
    n = space.dim
    phi = symmetrizer(space)
    images = columns(phi)
    k_basis = tuple(kernel(images))
    i_echelon = echelon(images)
    i_basis = tuple(i_echelon.values())

    # x·cx on the basis vectors, i.e. the diagonal of G·c
    form = mat_mul(space.gram, space.conj).diagonal().copy()
    w = solve(columns(space.gram), pack(form))
    if w is None:
        raise ModelVerificationFailed("pairing is degenerate", space=space.name)

    v0 = kernel([int(bit) for bit in form])
    i0 = echelon(pack(mat_mul(phi, unpack(x, n))) for x in v0)
    return SubgroupLattice(
        dim=n,
        k_basis=k_basis,
        i_basis=i_basis,
        i0_basis=tuple(i0.values()),
        w_c=unpack(w, n),
        d=len(i_basis),
        v0_form=pack(form),
    )

