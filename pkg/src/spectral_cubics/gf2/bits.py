"""GF(2) vectors and matrices GF(2) 向量与矩阵

Matrices are numpy uint8 arrays reduced mod 2. Elimination runs on vectors packed into Python
integers, bit i holding coordinate i.
矩阵为模 2 的 numpy uint8 数组；消元在打包成整数的向量上进行，第 i 位对应第 i 个坐标。
"""

from typing import Iterable, Optional, Sequence

import numpy as np


def as_bits(data: object) -> np.ndarray:
    """Reduce an array-like mod 2 to uint8 模 2 约化为 uint8"""
    return (np.asarray(data, dtype=np.int64) % 2).astype(np.uint8)


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.uint8)


def mat_mul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Product over GF(2) GF(2) 上的乘积"""
    return ((np.asarray(a, dtype=np.int64) @ np.asarray(b, dtype=np.int64)) % 2).astype(np.uint8)


# ─── packing ───


def pack(vec: object) -> int:
    """Bit vector to integer, coordinate i at bit i 位向量打包为整数"""
    out = 0
    for i, bit in enumerate(np.asarray(vec).ravel()):
        if int(bit) & 1:
            out |= 1 << i
    return out


def unpack(value: int, n: int) -> np.ndarray:
    return np.array([(value >> i) & 1 for i in range(n)], dtype=np.uint8)


def columns(m: np.ndarray) -> list[int]:
    """Packed columns, i.e. images of the basis vectors 打包的列（基向量的像）"""
    return [pack(m[:, j]) for j in range(m.shape[1])]


def from_columns(cols: Sequence[int], n: int) -> np.ndarray:
    if not cols:
        return np.zeros((n, 0), dtype=np.uint8)
    return np.stack([unpack(c, n) for c in cols], axis=1)


def stack(vectors: Sequence[int], n: int) -> np.ndarray:
    """Packed vectors as the rows of a matrix 打包向量作为矩阵的行"""
    if not vectors:
        return np.zeros((0, n), dtype=np.uint8)
    return np.stack([unpack(v, n) for v in vectors])


def hex_row(row: np.ndarray) -> str:
    width = max(1, (len(row) + 3) // 4)
    return format(pack(row), f"0{width}x")


# ─── elimination ───


def reduce_by(value: int, basis: dict[int, int]) -> int:
    """Reduce against a fully reduced basis keyed by leading bit 用完全约化基约化"""
    for lead, b in basis.items():
        if (value >> lead) & 1:
            value ^= b
    return value


def echelon(vectors: Iterable[int]) -> dict[int, int]:
    """Fully reduced basis of the span, keyed by leading bit 张成空间的完全约化基"""
    basis: dict[int, int] = {}
    for v in vectors:
        v = reduce_by(v, basis)
        if not v:
            continue
        lead = v.bit_length() - 1
        for k in list(basis):
            if (basis[k] >> lead) & 1:
                basis[k] ^= v
        basis[lead] = v
    return basis


def rank(vectors: Iterable[int]) -> int:
    return len(echelon(vectors))


def matrix_rank(m: np.ndarray) -> int:
    return rank(columns(m))


def in_span(value: int, basis: dict[int, int]) -> bool:
    return reduce_by(value, basis) == 0


def _tracked(images: Sequence[int]) -> tuple[dict[int, tuple[int, int]], list[int]]:
    """Eliminate images while tracking combinations 消元并记录组合

    Returns the reduced basis (image, combination) and the kernel combinations.
    """
    basis: dict[int, tuple[int, int]] = {}
    kernel: list[int] = []
    for j, img in enumerate(images):
        combo = 1 << j
        for lead, (b, c) in basis.items():
            if (img >> lead) & 1:
                img ^= b
                combo ^= c
        if not img:
            kernel.append(combo)
            continue
        lead = img.bit_length() - 1
        for k in list(basis):
            b, c = basis[k]
            if (b >> lead) & 1:
                basis[k] = (b ^ img, c ^ combo)
        basis[lead] = (img, combo)
    return basis, kernel


def kernel(images: Sequence[int]) -> list[int]:
    """Basis of {x : Σ x_j images[j] = 0} 线性映射的核"""
    return _tracked(images)[1]


def solve(images: Sequence[int], target: int) -> Optional[int]:
    """Some x with Σ x_j images[j] = target, None if unsolvable 解线性方程"""
    basis, _ = _tracked(images)
    combo = 0
    for lead, (b, c) in basis.items():
        if (target >> lead) & 1:
            target ^= b
            combo ^= c
    return combo if target == 0 else None


def inverse(m: np.ndarray) -> np.ndarray:
    """Inverse over GF(2) GF(2) 上的逆矩阵

    Raises:
        ValueError: the matrix is singular 矩阵奇异
    """
    n = m.shape[0]
    cols = columns(m)
    out: list[int] = []
    for i in range(n):
        x = solve(cols, 1 << i)
        if x is None:
            raise ValueError("singular matrix over GF(2)")
        out.append(x)
    return from_columns(out, n)


# ─── enumeration ───


def all_vectors(n: int) -> np.ndarray:
    """All 2^n vectors, row k holding the bits of k 全部 2^n 个向量"""
    k = np.arange(2**n, dtype=np.int64)
    return ((k[:, None] >> np.arange(n)) & 1).astype(np.uint8)


def span_elements(basis: Sequence[int], n: int) -> np.ndarray:
    """Every element of the span of packed vectors 张成空间的全部元素"""
    rows = stack(list(basis), n)
    coeffs = all_vectors(len(basis))
    return mat_mul(coeffs, rows)


def walsh_transform(values: np.ndarray) -> np.ndarray:
    """W(u) = Σ_x values[x]·(-1)^(u·x), natural order Walsh 变换"""
    a = np.asarray(values, dtype=np.int64).copy()
    h = 1
    while h < a.size:
        a = a.reshape(-1, 2, h)
        a = np.stack((a[:, 0] + a[:, 1], a[:, 0] - a[:, 1]), axis=1)
        a = a.reshape(-1)
        h *= 2
    return a
