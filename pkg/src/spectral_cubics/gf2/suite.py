"""Exhaustive GF(2) property suite GF(2) 性质穷举套件

Every standard model is checked exhaustively (all of K, all 2^12 vectors where needed);
fuzzed models, conjugates of standard models by random symplectic matrices, get the
structural checks.
"""

from typing import Callable, Optional, Sequence

import numpy as np

from ..models.reports import Gf2SuiteReport
from ..utils.logger import logger
from .bits import all_vectors, echelon, in_span, mat_mul, pack, stack
from .lattice import SubgroupLattice, subgroup_lattice, symmetrizer
from .models import CLASS_INVARIANTS, conjugate, random_symplectic, standard_model
from .quotient import (
    DISCREPANCY_DROP,
    DifferenceMode,
    admissible_difference_classes,
    quotient_by,
    quotient_case,
    quotient_discrepancy,
)
from .space import QuadSpace, arf, arf_by_majority, shifted_arfs

STRUCTURAL = [
    "structure",
    "image_in_kernel",
    "annihilators",
    "wc_in_image",
    "i0_index",
    "fibres",
    "wc_parity",
    "arf_q0",
]
EXHAUSTIVE = [
    "arf_oracle",
    "real_restriction",
    "arf_shift",
    "quotient_ranks",
    "difference_classes",
]
PROPERTIES = STRUCTURAL + EXHAUSTIVE

# Full quotients cross-checked against the rank formula per model 每个模型完整构造的商数
QUOTIENT_SAMPLES = 8

Check = Callable[[QuadSpace, SubgroupLattice], bool]


# ─── structural checks ───


def _structure(space: QuadSpace, lattice: SubgroupLattice) -> bool:
    return not space.problems()


def _image_in_kernel(space: QuadSpace, lattice: SubgroupLattice) -> bool:
    phi = symmetrizer(space)
    return not mat_mul(phi, phi).any()


def _annihilators(space: QuadSpace, lattice: SubgroupLattice) -> bool:
    n = space.dim
    pairings = mat_mul(mat_mul(stack(lattice.i_basis, n), space.gram), stack(lattice.k_basis, n).T)
    return len(lattice.k_basis) + lattice.d == space.dim and not pairings.any()


def _wc_in_image(space: QuadSpace, lattice: SubgroupLattice) -> bool:
    k_in_v0 = all(bin(k & lattice.v0_form).count("1") % 2 == 0 for k in lattice.k_basis)
    return lattice.in_i(lattice.w_c) and k_in_v0


def _i0_index(space: QuadSpace, lattice: SubgroupLattice) -> bool:
    expected = lattice.d - 1 if lattice.w_c.any() else lattice.d
    return len(lattice.i0_basis) == expected


def _fibres(space: QuadSpace, lattice: SubgroupLattice) -> bool:
    """x·cx depends only on (1 + c)x x·cx 只依赖于 (1 + c)x"""
    n = space.dim
    vectors = all_vectors(n)
    weights = 1 << np.arange(n, dtype=np.int64)
    keys = mat_mul(vectors, symmetrizer(space).T).astype(np.int64) @ weights
    form = (vectors.astype(np.int64) @ ((lattice.v0_form >> np.arange(n)) & 1)) % 2
    seen = np.zeros((2, 2**n), dtype=bool)
    seen[form, keys] = True
    return not (seen[0] & seen[1]).any()


def _wc_parity(space: QuadSpace, lattice: SubgroupLattice) -> bool:
    return lattice.in_i0(lattice.w_c) == (lattice.d % 2 == 0)


def _arf_q0(space: QuadSpace, lattice: SubgroupLattice) -> bool:
    return arf(space) == 1


# ─── exhaustive checks ───


def _arf_oracle(space: QuadSpace, lattice: SubgroupLattice) -> bool:
    return arf(space) == arf_by_majority(space)


def _real_restriction(space: QuadSpace, lattice: SubgroupLattice) -> bool:
    """h* vanishes on I for h ∈ K, and q0 = i exactly on I_i h* 在 I 上为零"""
    image = lattice.i_elements()
    duals = mat_mul(mat_mul(image, space.gram), lattice.k_elements().T)
    i0 = echelon(lattice.i0_basis)
    expected = np.array([0 if in_span(pack(x), i0) else 1 for x in image], dtype=np.uint8)
    return not duals.any() and np.array_equal(space.values(image), expected)


def _arf_shift(space: QuadSpace, lattice: SubgroupLattice) -> bool:
    classes = lattice.k_elements()
    return np.array_equal(shifted_arfs(space, classes), space.values(classes) ^ 1)


def _quotient_ranks(space: QuadSpace, lattice: SubgroupLattice) -> bool:
    for index, h in enumerate(lattice.k_elements()[1:]):
        d_prime = quotient_discrepancy(space, h)
        case = quotient_case(lattice, h)
        if lattice.d - d_prime != DISCREPANCY_DROP[case]:
            return False
        if index < QUOTIENT_SAMPLES:
            quotient = quotient_by(space, h)
            if quotient.d_prime != d_prime or quotient.space.problems():
                return False
    return True


def _difference_classes(space: QuadSpace, lattice: SubgroupLattice) -> bool:
    inv = CLASS_INVARIANTS.get(space.name.split("^")[0])
    if inv is None:
        return True
    perfect = admissible_difference_classes(space, DifferenceMode.PERFECT)
    skew = admissible_difference_classes(space, DifferenceMode.SKEW)
    i0_star = (1 << len(lattice.i0_basis)) - 1
    return (
        (perfect.count > 0) == (inv.ovals >= 1)
        and (skew.count > 0) == (inv.ovals <= 4)
        and skew.count == i0_star
    )


CHECKS: dict[str, Check] = {
    "structure": _structure,
    "image_in_kernel": _image_in_kernel,
    "annihilators": _annihilators,
    "wc_in_image": _wc_in_image,
    "i0_index": _i0_index,
    "fibres": _fibres,
    "wc_parity": _wc_parity,
    "arf_q0": _arf_q0,
    "arf_oracle": _arf_oracle,
    "real_restriction": _real_restriction,
    "arf_shift": _arf_shift,
    "quotient_ranks": _quotient_ranks,
    "difference_classes": _difference_classes,
}


def check_model(space: QuadSpace, properties: Sequence[str] = PROPERTIES) -> dict[str, bool]:
    """Run the named checks on one space 对单个空间运行检查"""
    lattice = subgroup_lattice(space)
    return {name: bool(CHECKS[name](space, lattice)) for name in properties}


def verify_suite(
    models: Optional[Sequence[str]] = None,
    fuzz: int = 1000,
    seed: int = 0,
) -> Gf2SuiteReport:
    """Run the suite over standard models and fuzzed conjugates 运行完整性质套件

    Args:
        models: Class codes to check, all nine by default 要检查的类代码
        fuzz: Number of random symplectic conjugates 随机共轭数
        seed: Seed for numpy's generator 随机种子

    Returns:
        Gf2SuiteReport with one row per model plus a "fuzz" row 通过矩阵
    """
    codes = list(models) if models is not None else list(CLASS_INVARIANTS)
    report = Gf2SuiteReport(properties=list(PROPERTIES), fuzz_cases=fuzz, seed=seed)
    bases: list[QuadSpace] = []
    for code in codes:
        space = standard_model(code)
        bases.append(space)
        row = check_model(space)
        report.matrix[code] = row
        report.failures += [f"{code}: {name}" for name, ok in row.items() if not ok]
        logger.debug("Model checked", {"class": code, "passed": all(row.values())})

    if fuzz and bases:
        rng = np.random.default_rng(seed)
        fuzz_row = {name: True for name in STRUCTURAL}
        fuzz_row["quotient_ranks"] = True
        for case in range(fuzz):
            base = bases[int(rng.integers(len(bases)))]
            space = conjugate(base, random_symplectic(base.dim, rng))
            row = check_model(space, STRUCTURAL)
            row["quotient_ranks"] = _random_quotient(space, rng)
            for name, ok in row.items():
                if not ok and fuzz_row[name]:
                    report.failures.append(f"fuzz #{case} ({base.name}): {name}")
                fuzz_row[name] = fuzz_row[name] and ok
        report.matrix["fuzz"] = fuzz_row
    logger.info(
        "GF(2) suite finished", {"models": len(codes), "fuzz": fuzz, "passed": report.passed}
    )
    return report


def _random_quotient(space: QuadSpace, rng: np.random.Generator) -> bool:
    """Rank law for one random nonzero h ∈ K 随机 h 的秩关系"""
    lattice = subgroup_lattice(space)
    elements = lattice.k_elements()
    if len(elements) < 2:
        return True
    h = elements[int(rng.integers(1, len(elements)))]
    quotient = quotient_by(space, h)
    return lattice.d - quotient.d_prime == DISCREPANCY_DROP[quotient.case]

