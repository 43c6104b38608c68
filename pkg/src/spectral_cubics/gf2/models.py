"""Standard models of quintic homology 五次曲线同调的标准模型

Each class gets a 12-dimensional space built from symplectic pairs (a_k, b_k):
    identity pairs      c = 1
    transvection pairs  c(a) = a, c(b) = a + b                 (type II, one per unit of d)
    coupled pairs       c(b₁) = b₁ + a₂, c(b₂) = b₂ + a₁        (type I, two pairs per block)
The result is verified against the class's discrepancy and Klein type before it is returned.
"""

from dataclasses import dataclass
from typing import Any

import numpy as np

from ..errors import InputError, ModelVerificationFailed
from ..topology.curve import FOUR_I, FOUR_II, NEST, QUINTIC_CLASSES
from ..utils.logger import logger
from .bits import hex_row, identity, inverse, mat_mul
from .lattice import subgroup_lattice
from .space import QuadSpace, arf

GENUS = 6
DIM = 2 * GENUS


@dataclass(frozen=True)
class ClassInvariants:
    """Discrepancy data of a quintic class 五次曲线类的差数据

    Attributes:
        code: Class code 类代码
        ovals: Number of ovals 卵形线数
        d: Smith discrepancy, 6 - ovals Smith 差
        klein_type: "I" or "II" Klein 类型
    """

    code: str
    ovals: int
    d: int
    klein_type: str


def _ovals(code: str) -> int:
    if code == NEST:
        return 2
    if code in (FOUR_I, FOUR_II):
        return 4
    return int(code.split("⊔")[1]) if "⊔" in code else 0


_TYPE_I = {"J⊔6", FOUR_I, NEST}

CLASS_INVARIANTS: dict[str, ClassInvariants] = {
    code: ClassInvariants(
        code=code,
        ovals=_ovals(code),
        d=GENUS - _ovals(code),
        klein_type="I" if code in _TYPE_I else "II",
    )
    for code in QUINTIC_CLASSES
}


def class_invariants(code: str) -> ClassInvariants:
    try:
        return CLASS_INVARIANTS[code]
    except KeyError:
        raise InputError(f"unknown quintic class {code!r}", known=QUINTIC_CLASSES) from None


# ─── construction ───


def _symplectic_gram(genus: int) -> np.ndarray:
    g = np.zeros((2 * genus, 2 * genus), dtype=np.uint8)
    for k in range(genus):
        g[2 * k, 2 * k + 1] = g[2 * k + 1, 2 * k] = 1
    return g


def standard_model(code: str) -> QuadSpace:
    """Build and verify the model of a quintic class 构造并验证标准模型

    Args:
        code: One of the nine quintic class codes 九个五次曲线类代码之一

    Raises:
        ModelVerificationFailed: a post-check failed 后验检查失败
    """
    inv = class_invariants(code)
    conj = identity(DIM)
    q0 = np.zeros(DIM, dtype=np.uint8)
    kinds: list[str] = []

    if inv.klein_type == "I":
        for _ in range(inv.d // 2):
            k = len(kinds)
            a1, b1, a2, b2 = 2 * k, 2 * k + 1, 2 * k + 2, 2 * k + 3
            conj[a2, b1] = 1
            conj[a1, b2] = 1
            kinds += ["coupled", "coupled"]
    else:
        for _ in range(inv.d):
            k = len(kinds)
            conj[2 * k, 2 * k + 1] = 1
            q0[2 * k] = 1
            kinds.append("transvection")
    while len(kinds) < GENUS:
        q0[2 * len(kinds)] = 1
        kinds.append("identity")

    # Arf(q0) = Σ q0(a_k)·q0(b_k); turn it on at the first pair where q0(a_k) = 1
    first = next(k for k, kind in enumerate(kinds) if kind != "coupled")
    q0[2 * first + 1] = 1

    labels = tuple(f"{s}{k + 1}" for k in range(GENUS) for s in ("a", "b"))
    space = QuadSpace(gram=_symplectic_gram(GENUS), conj=conj, q0=q0, labels=labels, name=code)
    verify_model(space, inv)
    logger.debug("Standard model built", {"class": code, "d": inv.d, "type": inv.klein_type})
    return space


def verify_model(space: QuadSpace, inv: ClassInvariants) -> None:
    """Check rank(1 + c) = d, w_c = 0 iff type I, and Arf(q0) = 1 校验模型

    Raises:
        ModelVerificationFailed: any check fails 任一检查失败
    """
    problems = space.problems()
    lattice = subgroup_lattice(space)
    if lattice.d != inv.d:
        problems.append(f"rank(1+c) = {lattice.d}, expected {inv.d}")
    if lattice.klein_type != inv.klein_type:
        problems.append(f"Klein type {lattice.klein_type}, expected {inv.klein_type}")
    if not problems and arf(space) != 1:
        problems.append("Arf(q0) != 1")
    if problems:
        raise ModelVerificationFailed(
            "standard model failed verification", model=space.name, problems=problems
        )


def standard_models() -> list[QuadSpace]:
    return [standard_model(code) for code in QUINTIC_CLASSES]


# ─── transport ───


def random_symplectic(dim: int, rng: np.random.Generator, steps: int = 0) -> np.ndarray:
    """Product of random transvections x ↦ x + (x·v)v 随机平延之积

    Transvections generate Sp(dim, 2), so enough steps reach every element.
    """
    gram = _symplectic_gram(dim // 2)
    out = identity(dim)
    for _ in range(steps or 3 * dim):
        v = rng.integers(0, 2, size=dim, dtype=np.uint8)
        if not v.any():
            continue
        t = identity(dim) ^ mat_mul(v[:, None], mat_mul(v[None, :], gram))
        out = mat_mul(t, out)
    return out


def conjugate(space: QuadSpace, g: np.ndarray) -> QuadSpace:
    """Transport by a symplectic g: c ↦ g c g⁻¹, q0 ↦ q0 ∘ g⁻¹ 用辛矩阵搬运

    Raises:
        ModelVerificationFailed: g does not preserve the pairing g 不保持配对
    """
    if not np.array_equal(mat_mul(mat_mul(g.T, space.gram), g), space.gram):
        raise ModelVerificationFailed("matrix is not symplectic", space=space.name)
    g_inv = inverse(g)
    q0 = None if space.q0 is None else space.values(g_inv.T)
    return QuadSpace(
        gram=space.gram,
        conj=mat_mul(mat_mul(g, space.conj), g_inv),
        q0=q0,
        labels=space.labels,
        name=f"{space.name}^g" if space.name else "",
    )


def dump_model(space: QuadSpace) -> dict[str, Any]:
    """Hex-packed rows of gram, conj and q0 以十六进制打包行导出模型"""
    return {
        "name": space.name,
        "dim": space.dim,
        "labels": list(space.labels),
        "gram": [hex_row(row) for row in space.gram],
        "conj": [hex_row(row) for row in space.conj],
        "q0": None if space.q0 is None else hex_row(space.q0),
    }
