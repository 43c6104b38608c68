"""Input documents 输入文档

Read a JSON document from disk, validate it and build its model
从磁盘读取 JSON 文档、验证并构建模型
"""

import json
from pathlib import Path
from typing import Any, Optional, Union

from ..errors import InputError
from ..models.documents import CubicDocument, CurveDocument, SurfaceDocument
from ..utils.validation import DOCUMENT_KINDS, format_validation_errors, validate_document

AnyDocument = Union[CubicDocument, CurveDocument, SurfaceDocument]


def read_json(path: Union[str, Path]) -> Any:
    """Parse a JSON file 解析 JSON 文件

    Raises:
        InputError: unreadable file or malformed JSON 文件不可读或 JSON 格式错误
    """
    p = Path(path)
    try:
        with open(p, "r", encoding="utf-8") as f:
            return json.load(f)
    except OSError as e:
        raise InputError(f"cannot read {p}: {e.strerror}", path=str(p)) from e
    except json.JSONDecodeError as e:
        raise InputError(
            f"malformed JSON at line {e.lineno}, column {e.colno}", path=str(p)
        ) from e


def document_from_body(body: Any, expected: Optional[str] = None) -> AnyDocument:
    """Validate a body and build its document model 验证并构建文档模型

    Raises:
        InputError: the body fails validation, with every field error 验证失败
    """
    result = validate_document(body, expected)
    if not result.valid or result.kind is None:
        raise InputError(
            format_validation_errors(result.errors),
            fields=",".join(e.field for e in result.errors),
        )
    model = DOCUMENT_KINDS[result.kind][0]
    return model.model_validate(body)  # type: ignore[return-value]


def load_document(path: Union[str, Path], expected: Optional[str] = None) -> AnyDocument:
    """Read, validate and build a document 读取、验证并构建文档"""
    return document_from_body(read_json(path), expected)
