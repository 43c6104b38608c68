"""Deformation atlas tests 形变图集测试"""

import json
from collections import Counter
from pathlib import Path

import pytest

from spectral_cubics.atlas import (
    CUBIC_ORDER,
    QUINTIC_ORDER,
    MatchingCategory,
    adjacency,
    cross_check,
    cubic_class,
    dump_atlas,
    enumerate_matchings,
    expected_quintic,
    fano_lookup,
    graph_properties_check,
    matching_category,
    monodromy_facts,
    quintic_class,
)
from spectral_cubics.errors import InputError

GOLDEN = Path(__file__).parent / "data" / "atlas_golden.json"


def test_matching_category_examples():
    assert matching_category("C5", "J⊔6") is MatchingCategory.PERFECT
    assert matching_category("C1_I(2)", "J") is MatchingCategory.NOT_SPECTRAL
    assert matching_category("C5", "J⊔4_II") is MatchingCategory.SKEW_ADMISSIBLE_MIXED
    assert matching_category("C3", "J⊔1⟨1⟩") is MatchingCategory.NOT_SPECTRAL


def test_eighteen_spectral_matchings():
    records = enumerate_matchings()
    counts = Counter(r.category for r in records)
    assert len(records) == 18
    assert counts[MatchingCategory.PERFECT] == 9
    assert counts[MatchingCategory.SKEW_TYPE_PRESERVING] == 6
    assert counts[MatchingCategory.SKEW_ADMISSIBLE_MIXED] == 3
    assert [r.category for r in records if r.cubic == "C0"] == [MatchingCategory.PERFECT]


def test_mixed_matchings_are_the_listed_three():
    mixed = {
        (r.cubic, r.quintic)
        for r in enumerate_matchings()
        if r.category is MatchingCategory.SKEW_ADMISSIBLE_MIXED
    }
    assert mixed == {("C1_I", "J"), ("C3_I", "J⊔2"), ("C5", "J⊔4_II")}


def test_records_agree_with_the_rule():
    listed = {(r.cubic, r.quintic): r.category for r in enumerate_matchings()}
    for x in CUBIC_ORDER:
        for s in QUINTIC_ORDER:
            category = matching_category(x, s)
            if category is MatchingCategory.NOT_SPECTRAL:
                assert (x, s) not in listed
            else:
                assert listed[(x, s)] is category
                skew = category is not MatchingCategory.PERFECT
                assert quintic_class(s).d == cubic_class(x).d + (2 if skew else 0)


def test_adjacency_examples():
    assert adjacency("C0", "C1_I(2)").label == "0"
    assert adjacency("C2", "C3_I").label == "3_I"
    assert adjacency("J⊔6", "J⊔5") is not None
    assert adjacency("C5", "C3") is None
    with pytest.raises(InputError):
        adjacency("C5", "J⊔6")


def test_graph_properties_hold():
    report = graph_properties_check()
    assert report.passed, report.failures
    assert report.isomorphism["C5"] == "J⊔6"
    assert report.isomorphism["C3_I"] == "J⊔4_I"
    assert len(report.decoration_mismatches) == 1


def test_fano_rows():
    row = fano_lookup("C5")
    assert row.real_locus == "N5 ⊔ 15T2"
    assert row.orbits == (6, 9)
    assert expected_quintic("C5")[0].code == "J⊔6"
    assert expected_quintic("C5", "T_I")[0].code == "J⊔4_I"
    assert expected_quintic("C5", "T_II")[0].code == "J⊔4_II"

    assert fano_lookup("C1_I(2)").tori == 0
    assert expected_quintic("C1_I(2)")[0].code == "J⊔1⟨1⟩"

    assert fano_lookup("C1_I").real_locus == "RP2 ⊔ N6"
    assert expected_quintic("C1_I", "N6") == (quintic_class("J"), "h_I")
    with pytest.raises(InputError):
        expected_quintic("C0", "T")


def test_torus_counts_are_binomial():
    for k in range(6):
        assert fano_lookup(f"C{k}").tori == k * (k + 1) // 2


def test_monodromy_facts():
    assert monodromy_facts("C5").group == "S_{123,456}"
    assert monodromy_facts("C5").order == 72
    assert monodromy_facts("C4").group == "S5"
    assert monodromy_facts("C1").group == "S2"
    assert monodromy_facts("C0").order == 1
    assert monodromy_facts("C3_I").group is None
    assert monodromy_facts("C3_I").torus_orbits == (3, 3)


def test_cross_check():
    result = cross_check("J⊔1⟨1⟩", "Perfect", ["C1_I", "C1_I(2)"])
    assert result.passed
    assert {r.cubic for r in result.records} == {"C1_I", "C1_I(2)"}
    assert "Fano table, row C1_I" in result.citations

    assert cross_check("J⊔6", "Skew").status == "Violation"
    assert not cross_check("J", "Perfect").passed
    with pytest.raises(InputError):
        cross_check("J", "maybe")


def test_unknown_codes_are_rejected():
    with pytest.raises(InputError):
        cubic_class("C6")
    with pytest.raises(InputError):
        matching_category("C5", "J⊔7")


def test_dump_matches_golden_file():
    text = dump_atlas()
    assert text == dump_atlas()
    assert json.loads(text) == json.loads(GOLDEN.read_text(encoding="utf-8"))
