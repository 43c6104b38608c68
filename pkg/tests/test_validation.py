"""Validation tests 文档验证测试"""

from spectral_cubics.utils.validation import (
    document_kind,
    format_validation_errors,
    validate_document,
)


def _base_body():
    return {
        "cubic": "u^2*x + 2*u*v*y + v^2*z + x^3 + y^3 + z^3",
        "line": [["0", "0", "0", "1", "0"], ["0", "0", "0", "0", "1"]],
    }


def test_validation_passes_for_minimal_valid_document():
    result = validate_document(_base_body())
    assert result.valid is True
    assert result.errors == []
    assert result.kind == "cubic"


def test_document_kind_by_polynomial_field():
    assert document_kind({"surface": "x^3"}) == "surface"
    assert document_kind({"curve": "x^5"}) == "curve"
    assert document_kind(["cubic"]) is None


def test_validation_rejects_non_object():
    result = validate_document("cubic")
    assert result.valid is False
    assert result.errors[0].field == "body"


def test_validation_rejects_unknown_kind():
    result = validate_document({"quartic": "x^4"})
    assert result.valid is False
    assert "cubic, surface, curve" in result.errors[0].message


def test_validation_rejects_wrong_kind():
    result = validate_document({"curve": "x^5 + y^5 + z^5"}, expected="cubic")
    assert result.valid is False
    assert result.kind == "curve"
    assert result.errors[0].message == "expected a cubic document"


def test_validation_reports_parse_position():
    body = _base_body()
    body["cubic"] = "u^2*x + q"
    result = validate_document(body)
    assert result.valid is False
    assert result.errors[0].field == "cubic"
    assert "line 1, column 9" in result.errors[0].message


def test_validation_rejects_wrong_degree():
    body = _base_body()
    body["cubic"] = "x^2 + y^2"
    result = validate_document(body)
    assert result.valid is False
    assert "degree 3" in result.errors[0].message


def test_validation_rejects_bad_line_points():
    body = _base_body()
    body["line"] = [["0", "0", "0", "1"], ["0", "0", "0", "0", "1"]]
    result = validate_document(body)
    assert result.valid is False
    assert any("line[0] needs 5 coordinates" in err.message for err in result.errors)


def test_validation_checks_the_conic_of_a_curve():
    result = validate_document({"curve": "x^5 + y^5 + z^5", "conic": "x^2 + y"})
    assert result.valid is False
    assert result.errors[0].field == "conic"


def test_format_validation_errors():
    result = validate_document({"curve": "x^5 + y^5 + z^5", "conic": "x^2 + y"})
    text = format_validation_errors(result.errors)
    assert text.startswith("conic: ")
