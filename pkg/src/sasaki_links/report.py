"""
Report rendering: plain-text tables and canonical JSON.
"""

import json
import logging
from dataclasses import asdict, is_dataclass
from enum import Enum
from fractions import Fraction
from typing import Any

from .config import REPORT_WIDTH
from .errors import InvalidInputError

logger = logging.getLogger(__name__)
LINE = "=" * REPORT_WIDTH
NO_RESULTS = "(no results)"


def to_plain(value: Any) -> Any:
    """
    Convert a report value to JSON-compatible data.

    Fractions become "p/q" strings, enums their values, tuples lists; objects
    with a to_dict() method and dataclasses become dicts.
    """
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, Enum):
        return value.value
    if hasattr(value, "to_dict"):
        return to_plain(value.to_dict())
    if is_dataclass(value) and not isinstance(value, type):
        return to_plain(asdict(value))
    if isinstance(value, dict):
        return {str(k): to_plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_plain(v) for v in value]
    raise InvalidInputError(f"cannot render value of type {type(value).__name__}")


def _scalar(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "none"
    if isinstance(value, list):
        if not value:
            return "()"
        return "(" + ",".join(_scalar(v) for v in value) + ")"
    return str(value)


def _is_flat(value: Any) -> bool:
    # lists of numbers print inline as tuples; strings get a row each
    return not isinstance(value, (dict, list)) or (
        isinstance(value, list) and bool(value) and all(not isinstance(v, (dict, list, str)) for v in value)
    )


def _row(item: Any) -> str:
    if isinstance(item, dict):
        return ", ".join(f"{k}={_scalar(v) if _is_flat(v) else json.dumps(v, sort_keys=True)}"
                         for k, v in item.items())
    return _scalar(item)


def _text_lines(value: Any, indent: int = 0) -> list[str]:
    pad = "  " * indent
    if isinstance(value, dict):
        lines = []
        for key, v in value.items():
            if _is_flat(v):
                lines.append(f"{pad}{key}: {_scalar(v)}")
            elif isinstance(v, list) and not v:
                lines.append(f"{pad}{key}: {NO_RESULTS}")
            else:
                lines.append(f"{pad}{key}:")
                lines.extend(_text_lines(v, indent + 1))
        return lines
    if isinstance(value, list):
        if not value:
            return [pad + NO_RESULTS]
        return [f"{pad}{i}. {_row(item)}" for i, item in enumerate(value, 1)]
    return [pad + _scalar(value)]


def render_report(report: Any, fmt: str = "text", title: str | None = None) -> str:
    """
    Render a finalized report as text or JSON.

    JSON is sorted and indented so that re-serializing the parsed output
    reproduces it byte for byte.
    """
    plain = to_plain(report)
    if fmt == "json":
        return json.dumps(plain, sort_keys=True, indent=2)
    if fmt != "text":
        raise InvalidInputError(f"unknown report format {fmt!r}")
    lines = [LINE]
    if title:
        lines.append(f"  {title}")
        lines.append(LINE)
    lines.extend(_text_lines(plain))
    lines.append(LINE)
    logger.debug("Rendered %d text lines", len(lines))
    return "\n".join(lines)
