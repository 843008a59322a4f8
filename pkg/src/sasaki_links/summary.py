"""
Manifold summaries consumed by the join arithmetic.

A LinkSummary carries just the invariants the join theorems need: order,
canonical index, type and a few topological flags. Summaries are computed
from links or read from JSON files for manifolds outside our reach.
"""

import json
import logging
from dataclasses import asdict, dataclass
from enum import Enum
from pathlib import Path
from typing import Any

from .config import POINCARE_EXPONENTS, POINCARE_FANO_INDEX, POINCARE_ORDER
from .errors import InvalidInputError

logger = logging.getLogger(__name__)


class SasakiType(Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    STANDARD_SPHERE = "standard_sphere"


_REQUIRED_KEYS = (
    "name", "dim", "upsilon", "index", "type",
    "homology_sphere", "poincare", "simply_connected", "csc_base",
)


@dataclass(frozen=True)
class LinkSummary:
    """
    Invariants of one factor of a join.

    index is the canonical index I (negative means Fano index -I).
    d_total is d_a = a_0...a_n for homology-sphere Brieskorn links, else 0.
    """
    name: str
    dim: int
    upsilon: int
    index: int
    sasaki_type: SasakiType
    is_homology_sphere: bool
    is_poincare: bool
    is_simply_connected: bool
    has_csc_base: bool
    d_total: int = 0
    b2: int | None = None
    einstein_base: bool = False

    def __post_init__(self) -> None:
        if self.dim < 3 or self.dim % 2 == 0:
            raise InvalidInputError(f"{self.name}: dimension must be odd and >= 3, got {self.dim}")
        if self.upsilon < 1:
            raise InvalidInputError(f"{self.name}: order must be >= 1, got {self.upsilon}")
        if self.sasaki_type is SasakiType.STANDARD_SPHERE:
            raise InvalidInputError(f"{self.name}: summaries are either positive or negative")
        if self.is_poincare and not (
            self.is_homology_sphere and self.sasaki_type is SasakiType.POSITIVE and self.dim == 3
        ):
            raise InvalidInputError(f"{self.name}: Poincare flag needs a positive homology 3-sphere")
        if self.b2 is not None and self.b2 < 0:
            raise InvalidInputError(f"{self.name}: b2 cannot be negative")

    @property
    def is_negative(self) -> bool:
        return self.sasaki_type is SasakiType.NEGATIVE

    @property
    def is_positive(self) -> bool:
        return self.sasaki_type is SasakiType.POSITIVE

    def to_dict(self) -> dict[str, Any]:
        out = asdict(self)
        return {
            "name": out["name"],
            "dim": out["dim"],
            "upsilon": out["upsilon"],
            "index": out["index"],
            "d_total": out["d_total"],
            "b2": out["b2"],
            "type": self.sasaki_type.value,
            "homology_sphere": out["is_homology_sphere"],
            "poincare": out["is_poincare"],
            "simply_connected": out["is_simply_connected"],
            "csc_base": out["has_csc_base"],
            "einstein_base": out["einstein_base"],
        }


def summary_from_dict(data: dict[str, Any]) -> LinkSummary:
    """
    Build a LinkSummary from its JSON object form.

    Raises:
        InvalidInputError: On missing keys or values of the wrong kind
    """
    missing = [k for k in _REQUIRED_KEYS if k not in data]
    if missing:
        raise InvalidInputError(f"summary is missing keys: {', '.join(missing)}")
    try:
        sasaki_type = SasakiType(data["type"])
    except ValueError:
        raise InvalidInputError(f"summary type must be 'positive' or 'negative', got {data['type']!r}")
    for key in ("dim", "upsilon", "index"):
        if not isinstance(data[key], int) or isinstance(data[key], bool):
            raise InvalidInputError(f"summary field '{key}' must be an integer")
    b2 = data.get("b2")
    if b2 is not None and (not isinstance(b2, int) or isinstance(b2, bool)):
        raise InvalidInputError("summary field 'b2' must be an integer or null")
    return LinkSummary(
        name=str(data["name"]),
        dim=data["dim"],
        upsilon=data["upsilon"],
        index=data["index"],
        d_total=int(data.get("d_total") or 0),
        b2=b2,
        sasaki_type=sasaki_type,
        is_homology_sphere=bool(data["homology_sphere"]),
        is_poincare=bool(data["poincare"]),
        is_simply_connected=bool(data["simply_connected"]),
        has_csc_base=bool(data["csc_base"]),
        einstein_base=bool(data.get("einstein_base", False)),
    )


def load_summary(path: str | Path) -> LinkSummary:
    """Read a LinkSummary JSON file."""
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, dict):
        raise InvalidInputError(f"{path}: summary must be a JSON object")
    summary = summary_from_dict(data)
    logger.info("Loaded summary %s from %s", summary.name, path)
    return summary


def sphere_summary(r: int) -> LinkSummary:
    """The round sphere S^(2r+1) with its regular structure (Fano index r+1)."""
    if r < 1:
        raise InvalidInputError(f"sphere parameter r must be >= 1, got {r}")
    return LinkSummary(
        name=f"S^{2 * r + 1}",
        dim=2 * r + 1,
        upsilon=1,
        index=-(r + 1),
        b2=0,
        sasaki_type=SasakiType.POSITIVE,
        is_homology_sphere=True,
        is_poincare=False,
        is_simply_connected=True,
        has_csc_base=True,
        einstein_base=True,
    )


def poincare_summary() -> LinkSummary:
    """S^3/I*, the link L(2,3,5)."""
    return LinkSummary(
        name="L" + str(POINCARE_EXPONENTS).replace(" ", ""),
        dim=3,
        upsilon=POINCARE_ORDER,
        index=-POINCARE_FANO_INDEX,
        d_total=POINCARE_ORDER,
        b2=0,
        sasaki_type=SasakiType.POSITIVE,
        is_homology_sphere=True,
        is_poincare=True,
        is_simply_connected=False,
        has_csc_base=True,
        einstein_base=True,
    )
