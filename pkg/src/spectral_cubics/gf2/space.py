"""Symplectic GF(2) spaces with an involution and a quadratic function
带对合与二次函数的 GF(2) 辛空间
"""

from dataclasses import dataclass, replace
from typing import Optional

import numpy as np

from ..errors import NotQuadratic
from .bits import all_vectors, as_bits, identity, mat_mul, matrix_rank, walsh_transform


@dataclass(frozen=True, eq=False)
class QuadSpace:
    """V = H₁(S; Z/2) with pairing, involution c and quadratic function q0
    带配对、对合 c 与二次函数 q0 的空间

    Attributes:
        gram: Alternating nondegenerate pairing 交错非退化配对
        conj: Involution, column j is c(e_j) 对合矩阵，第 j 列为 c(e_j)
        q0: Values of q0 on the basis, None when no function descends 基上的 q0 值
        labels: Basis labels 基标签
        name: Model name, usually a class code 模型名称
    """

    gram: np.ndarray
    conj: np.ndarray
    q0: Optional[np.ndarray] = None
    labels: tuple[str, ...] = ()
    name: str = ""

    @property
    def dim(self) -> int:
        return int(self.gram.shape[0])

    def pair(self, x: np.ndarray, y: np.ndarray) -> int:
        return int(mat_mul(mat_mul(as_bits(x)[None, :], self.gram), as_bits(y)[:, None])[0, 0])

    def apply(self, x: np.ndarray) -> np.ndarray:
        return mat_mul(self.conj, as_bits(x))

    def dual(self, h: np.ndarray) -> np.ndarray:
        """h* as a row of values on the basis, h*(x) = h·x 对偶类在基上的值"""
        return mat_mul(self.gram, as_bits(h))

    def shifted(self, h: np.ndarray) -> np.ndarray:
        """Basis values of q0 + h* q0 + h* 在基上的值"""
        return self._require_q0() ^ self.dual(h)

    def values(self, vectors: np.ndarray, q: Optional[np.ndarray] = None) -> np.ndarray:
        """Quadratic function on rows of vectors 对各行向量求二次函数值

        q(x) = Σ x_i q_i + Σ_{i<j} x_i x_j (e_i·e_j)
        """
        base = self._require_q0() if q is None else as_bits(q)
        x = np.asarray(vectors, dtype=np.int64)
        upper = np.triu(self.gram.astype(np.int64), 1)
        cross = np.einsum("ij,ij->i", x @ upper, x)
        return ((x @ base.astype(np.int64) + cross) % 2).astype(np.uint8)

    def quad(self, x: np.ndarray, q: Optional[np.ndarray] = None) -> int:
        return int(self.values(as_bits(x)[None, :], q)[0])

    def with_q(self, q: Optional[np.ndarray]) -> "QuadSpace":
        return replace(self, q0=None if q is None else as_bits(q))

    def _require_q0(self) -> np.ndarray:
        if self.q0 is None:
            raise NotQuadratic("no quadratic function on this space", space=self.name)
        return self.q0

    def problems(self) -> list[str]:
        """Structural checks, empty when V is a valid real space 结构检查"""
        n = self.dim
        g, c = self.gram, self.conj
        out: list[str] = []
        if n % 2:
            out.append("odd dimension")
        if not np.array_equal(g, g.T) or g.diagonal().any():
            out.append("pairing is not alternating")
        if matrix_rank(g) != n:
            out.append("pairing is degenerate")
        if not np.array_equal(mat_mul(c, c), identity(n)):
            out.append("conj is not an involution")
        if not np.array_equal(mat_mul(mat_mul(c.T, g), c), g):
            out.append("conj does not preserve the pairing")
        if self.q0 is not None:
            trial = _basis_and_pairs(n)
            if not np.array_equal(self.values(trial), self.values(mat_mul(trial, c.T))):
                out.append("q0 is not real")
        return out


def _basis_and_pairs(n: int) -> np.ndarray:
    rows = [identity(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = np.zeros(n, dtype=np.uint8)
            v[i] = v[j] = 1
            rows.append(v[None, :])
    return np.concatenate(rows)


# ─── Arf invariant ───


def _basis_values(space: QuadSpace, q: Optional[np.ndarray]) -> np.ndarray:
    """Accept basis values or a full value table 接受基值或完整取值表

    Raises:
        NotQuadratic: the table violates q(x+y) = q(x)+q(y)+x·y 取值表不满足二次关系
    """
    if q is None:
        return space._require_q0()
    raw = np.asarray(q, dtype=np.int64).ravel()
    if np.any((raw != 0) & (raw != 1)):
        raise NotQuadratic("values must be bits")
    n = space.dim
    if raw.size == n:
        return raw.astype(np.uint8)
    if raw.size != 2**n:
        raise NotQuadratic("expected basis values or a full table", size=int(raw.size))
    table = raw.astype(np.uint8)
    if table[0]:
        raise NotQuadratic("q(0) must vanish")
    vectors = all_vectors(n)
    pairings = mat_mul(vectors, space.gram)
    index = np.arange(2**n)
    for i in range(n):
        shifted = table[index ^ (1 << i)]
        if not np.array_equal(shifted, table ^ table[1 << i] ^ pairings[:, i]):
            raise NotQuadratic("q(x+y) != q(x)+q(y)+x·y", basis_index=i)
    return table[[1 << i for i in range(n)]]


def arf(space: QuadSpace, q: Optional[np.ndarray] = None) -> int:
    """Arf invariant by symplectic reduction Arf 不变量（辛约化）

    Args:
        space: Space carrying the pairing 带配对的空间
        q: Basis values or a full table of 2^dim values; q0 when omitted 基值或完整取值表

    Raises:
        NotQuadratic: q is not a quadratic refinement, or the pairing is degenerate 非二次加细
    """
    values = _basis_values(space, q)
    remaining = list(identity(space.dim))
    total = 0
    while remaining:
        e = remaining.pop(0)
        j = next((k for k, v in enumerate(remaining) if space.pair(e, v)), None)
        if j is None:
            raise NotQuadratic("pairing is degenerate", space=space.name)
        f = remaining.pop(j)
        total ^= space.quad(e, values) & space.quad(f, values)
        remaining = [v ^ (space.pair(v, f) * e) ^ (space.pair(v, e) * f) for v in remaining]
    return total


def arf_by_majority(space: QuadSpace, q: Optional[np.ndarray] = None) -> int:
    """Arf as the value q takes most often 以多数值计算 Arf"""
    values = _basis_values(space, q)
    table = space.values(all_vectors(space.dim), values)
    return int(2 * int(table.sum()) > table.size)


def shifted_arfs(space: QuadSpace, classes: np.ndarray) -> np.ndarray:
    """Arf(q0 + h*) for each row h, through one Walsh transform 批量计算 Arf(q0 + h*)

    W(u) = Σ (-1)^(q0(x) + u·x) is ±2^g, and h* is the standard dot product with G·h.
    """
    table = space.values(all_vectors(space.dim))
    spectrum = walsh_transform(1 - 2 * table.astype(np.int64))
    weights = 1 << np.arange(space.dim, dtype=np.int64)
    duals = mat_mul(np.atleast_2d(classes), space.gram.T).astype(np.int64)
    return (spectrum[duals @ weights] < 0).astype(np.uint8)
