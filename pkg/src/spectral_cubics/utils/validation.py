"""Document validation 文档验证

Functions for validating input documents before any computation runs
在计算开始前验证输入文档的函数
"""

from typing import Any, Optional

from pydantic import BaseModel
from pydantic import ValidationError as PydanticValidationError

from ..algebra import parse_poly
from ..errors import PolySyntaxError
from ..models.documents import CubicDocument, CurveDocument, SurfaceDocument

# Document kind -> (model, polynomial field, degree) 文档类型 -> (模型, 多项式字段, 次数)
DOCUMENT_KINDS: dict[str, tuple[type[BaseModel], str, Optional[int]]] = {
    "cubic": (CubicDocument, "cubic", 3),
    "surface": (SurfaceDocument, "surface", 3),
    "curve": (CurveDocument, "curve", None),
}


class ValidationError(BaseModel):
    """Validation error 验证错误

    Attributes:
        field: Field name 字段名称
        message: Error message 错误消息
    """

    field: str
    message: str


class ValidationResult(BaseModel):
    """Validation result 验证结果

    Attributes:
        valid: Whether valid 是否有效
        errors: List of errors 错误列表
        kind: Detected document kind 检测到的文档类型
    """

    valid: bool
    errors: list[ValidationError]
    kind: Optional[str] = None


def document_kind(body: Any) -> Optional[str]:
    """Kind of a document body by its polynomial field 按多项式字段判断文档类型"""
    if not isinstance(body, dict):
        return None
    return next((kind for kind in DOCUMENT_KINDS if kind in body), None)


def _check_poly(
    body: dict[str, Any], key: str, degree: Optional[int], variables: list[str]
) -> list[ValidationError]:
    text = body.get(key)
    if not isinstance(text, str):
        return []
    try:
        poly = parse_poly(text, variables)
    except PolySyntaxError as e:
        return [ValidationError(field=key, message=str(e))]
    if poly.is_zero:
        return [ValidationError(field=key, message=f"{key} must not be zero")]
    if degree is not None and not poly.is_homogeneous(degree):
        return [ValidationError(field=key, message=f"{key} must be homogeneous of degree {degree}")]
    if degree is None and not poly.is_homogeneous(poly.total_degree()):
        return [ValidationError(field=key, message=f"{key} must be homogeneous")]
    return []


def validate_document(body: Any, expected: Optional[str] = None) -> ValidationResult:
    """Validate an input document 验证输入文档

    Args:
        body: Parsed JSON body 解析后的 JSON
        expected: Required kind ("cubic", "surface" or "curve") 要求的文档类型

    Returns:
        Validation result 验证结果
    """
    errors: list[ValidationError] = []

    if not isinstance(body, dict):
        errors.append(ValidationError(field="body", message="document must be an object"))
        return ValidationResult(valid=False, errors=errors)

    kind = document_kind(body)
    if kind is None:
        errors.append(
            ValidationError(field="body", message="document needs one of cubic, surface, curve")
        )
        return ValidationResult(valid=False, errors=errors)
    if expected is not None and kind != expected:
        errors.append(ValidationError(field=kind, message=f"expected a {expected} document"))
        return ValidationResult(valid=False, errors=errors, kind=kind)

    model, key, degree = DOCUMENT_KINDS[kind]
    try:
        doc = model.model_validate(body)
    except PydanticValidationError as e:
        for err in e.errors():
            field = ".".join(str(p) for p in err["loc"]) or kind
            errors.append(ValidationError(field=field, message=err["msg"]))
        return ValidationResult(valid=False, errors=errors, kind=kind)

    variables = list(getattr(doc, "variables"))
    errors.extend(_check_poly(body, key, degree, variables))
    if kind == "curve":
        errors.extend(_check_poly(body, "conic", 2, variables))
    return ValidationResult(valid=not errors, errors=errors, kind=kind)


def format_validation_errors(errors: list[ValidationError]) -> str:
    """Format validation errors as readable string
    将验证错误格式化为可读字符串
    """
    return "; ".join([f"{err.field}: {err.message}" for err in errors])
