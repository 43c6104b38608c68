"""GF(2) homology layer tests GF(2) 同调层测试"""

import numpy as np
import pytest

from spectral_cubics.errors import NotInK, NotQuadratic, ZeroClass
from spectral_cubics.gf2 import (
    CASE_I0,
    CASE_I1,
    CASE_K_MINUS_I,
    CLASS_INVARIANTS,
    DifferenceMode,
    admissible_difference_classes,
    arf,
    arf_by_majority,
    check_model,
    conjugate,
    contact_class_parity,
    dump_model,
    quotient_by,
    random_symplectic,
    shifted_arfs,
    standard_model,
    standard_models,
    subgroup_lattice,
    theta_quotient_class,
    verify_suite,
)
from spectral_cubics.gf2.bits import all_vectors, identity, mat_mul
from spectral_cubics.gf2.suite import STRUCTURAL


def _basis(space, *labels):
    v = np.zeros(space.dim, dtype=np.uint8)
    for label in labels:
        v[space.labels.index(label)] ^= 1
    return v


def test_m_curve_model_has_trivial_involution():
    space = standard_model("J⊔6")
    lattice = subgroup_lattice(space)
    assert np.array_equal(space.conj, identity(12))
    assert lattice.d == 0
    assert not lattice.w_c.any()
    assert len(lattice.k_basis) == 12


def test_empty_oval_model_has_full_discrepancy():
    space = standard_model("J")
    lattice = subgroup_lattice(space)
    assert lattice.d == 6
    assert lattice.klein_type == "II"
    assert lattice.in_i0(lattice.w_c)
    assert len(lattice.k_basis) == 6
    for k in lattice.k_basis:
        assert lattice.in_i(np.array([(k >> i) & 1 for i in range(12)], dtype=np.uint8))


def test_nest_model_is_type_one_with_discrepancy_four():
    lattice = subgroup_lattice(standard_model("J⊔1⟨1⟩"))
    assert lattice.d == 4
    assert not lattice.w_c.any()


@pytest.mark.parametrize("code", list(CLASS_INVARIANTS))
def test_every_model_matches_its_class(code):
    space = standard_model(code)
    lattice = subgroup_lattice(space)
    inv = CLASS_INVARIANTS[code]
    assert lattice.d == inv.d == 6 - inv.ovals
    assert lattice.klein_type == inv.klein_type
    assert arf(space) == 1
    assert arf_by_majority(space) == 1
    assert space.problems() == []


def test_arf_of_zero_function_is_zero():
    space = standard_model("J⊔3")
    assert arf(space, np.zeros(12, dtype=np.uint8)) == 0
    assert arf_by_majority(space, np.zeros(12, dtype=np.uint8)) == 0


def test_arf_rejects_non_quadratic_input():
    space = standard_model("J⊔6")
    with pytest.raises(NotQuadratic):
        arf(space, [2] * 12)
    with pytest.raises(NotQuadratic):
        arf(space, [0] * 7)
    table = np.zeros(2**12, dtype=np.uint8)
    table[1] = 1
    with pytest.raises(NotQuadratic):
        arf(space, table)


def test_arf_accepts_a_full_value_table():
    space = standard_model("J⊔2")
    table = space.values(all_vectors(12))
    assert arf(space, table) == 1


def test_arf_shift_identity_over_k():
    space = standard_model("J⊔5")
    classes = subgroup_lattice(space).k_elements()
    assert np.array_equal(shifted_arfs(space, classes), space.values(classes) ^ 1)
    for h in classes[:48]:
        assert contact_class_parity(space, h) == (space.quad(h) + 1) % 2


def test_quotient_by_i0_class_drops_two():
    space = standard_model("J")
    quotient = quotient_by(space, _basis(space, "a1", "a2"))
    assert quotient.case == CASE_I0
    assert quotient.d_prime == 4
    assert quotient.space.dim == 10
    assert quotient.space.problems() == []
    assert quotient.q_descends


def test_quotient_by_i1_class_drops_one():
    space = standard_model("J")
    quotient = quotient_by(space, _basis(space, "a1"))
    assert quotient.case == CASE_I1
    assert quotient.d_prime == 5
    assert not quotient.q_descends
    assert quotient.space.q0 is None


def test_quotient_by_class_outside_image_keeps_discrepancy():
    space = standard_model("J⊔5")
    h = _basis(space, "a2")
    assert theta_quotient_class(space, h) == (CASE_K_MINUS_I, 1)
    assert quotient_by(space, h).d_prime == 1


def test_quotient_of_trivial_involution_stays_trivial():
    space = standard_model("J⊔6")
    assert quotient_by(space, _basis(space, "b3")).d_prime == 0


def test_quotient_rejects_zero_and_unfixed_classes():
    space = standard_model("J")
    with pytest.raises(ZeroClass):
        quotient_by(space, np.zeros(12, dtype=np.uint8))
    with pytest.raises(NotInK):
        quotient_by(space, _basis(space, "b1"))


def test_difference_classes_follow_oval_counts():
    assert admissible_difference_classes(standard_model("J⊔6"), DifferenceMode.SKEW).count == 0
    assert admissible_difference_classes(standard_model("J⊔5"), DifferenceMode.PERFECT).count > 0
    assert admissible_difference_classes(standard_model("J"), DifferenceMode.PERFECT).count == 0

    skew = admissible_difference_classes(standard_model("J"), DifferenceMode.SKEW)
    assert len(skew.mixed) == 1
    assert len(skew.type_preserving) > 0
    assert skew.count == 31


def test_random_symplectic_preserves_pairing():
    space = standard_model("J⊔4_II")
    g = random_symplectic(12, np.random.default_rng(7))
    assert np.array_equal(mat_mul(mat_mul(g.T, space.gram), g), space.gram)


def test_conjugated_models_pass_structural_checks():
    rng = np.random.default_rng(11)
    for code in ("J⊔4_I", "J⊔3", "J⊔1⟨1⟩"):
        space = conjugate(standard_model(code), random_symplectic(12, rng))
        assert all(check_model(space, STRUCTURAL).values())
        assert subgroup_lattice(space).d == CLASS_INVARIANTS[code].d


def test_verify_suite_small_run_passes():
    report = verify_suite(models=["J", "J⊔4_I"], fuzz=10, seed=3)
    assert report.passed, report.failures
    assert set(report.matrix) == {"J", "J⊔4_I", "fuzz"}


def test_dump_model_uses_hex_rows():
    dump = dump_model(standard_model("J⊔2"))
    assert dump["dim"] == 12
    assert len(dump["gram"]) == 12
    assert all(len(row) == 3 for row in dump["conj"])
    assert dump["labels"][:2] == ["a1", "b1"]


def test_standard_models_cover_every_class():
    models = standard_models()
    assert [m.name for m in models] == list(CLASS_INVARIANTS)
    assert all(check_model(m)[name] for m in models for name in STRUCTURAL)
