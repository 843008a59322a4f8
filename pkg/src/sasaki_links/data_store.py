"""
Built-in reference data: standard manifold summaries and the sporadic table.
"""

import logging
import re
from typing import Any

from .config import SPORADIC_TABLE
from .summary import LinkSummary, poincare_summary, sphere_summary

logger = logging.getLogger(__name__)

_SPHERE_RE = re.compile(r"s\^?(\d+)")


# ---------- Sporadic table ----------

def list_fixture_rows() -> list[dict[str, Any]]:
    """Return a copy of the sporadic table rows (b2, listed w, polynomial)."""
    return [dict(row) for row in SPORADIC_TABLE]


# ---------- Built-in summaries ----------

def get_builtin_summary(name: str) -> LinkSummary | None:
    """
    Look up a built-in summary by name (case-insensitive).

    Known names: "poincare" and odd spheres "S3", "S^5", ... Returns None
    for anything else.
    """
    key = name.strip().lower()
    if key in ("poincare", "s3/i*", "l(2,3,5)"):
        return poincare_summary()
    m = _SPHERE_RE.fullmatch(key)
    if m:
        dim = int(m.group(1))
        if dim >= 3 and dim % 2 == 1:
            return sphere_summary((dim - 1) // 2)
    logger.debug("No built-in summary named %s", name)
    return None
