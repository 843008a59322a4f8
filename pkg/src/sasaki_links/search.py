"""
Enumeration of pairwise coprime exponents, eta-Einstein join pairs, admissible
(k, l) for a join, and the two infinite series / sporadic table of negative
5-dimensional hypersurface links.

All searches return results in a fixed order so outputs are reproducible.
"""

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import Iterator

from .brieskorn_ci import build_link, canonical_index, sasaki_type
from .config import DEFAULT_BUDGET, DEFAULT_KL_BOUND, DEFAULT_N, DEFAULT_WORKERS
from .data_store import list_fixture_rows
from .errors import InvalidInputError, InvalidParameterError
from .exact_core import IntVec, gcd_all, product
from .sasaki_join import JoinSpec, join_smooth, relative_indices
from .summary import LinkSummary, SasakiType
from .wh_link import WeightedPoly, infer_weights, parse_poly

logger = logging.getLogger(__name__)


class Series(Enum):
    FIRST = 1
    SECOND = 2


@dataclass(frozen=True)
class SearchConfig:
    bound: int
    n: int = DEFAULT_N
    kl_bound: int = DEFAULT_KL_BOUND
    budget: int = DEFAULT_BUDGET
    workers: int = DEFAULT_WORKERS

    def __post_init__(self) -> None:
        if self.n < 2:
            raise InvalidInputError(f"tuple length n+1 needs n >= 2, got {self.n}")
        if self.bound < 2:
            raise InvalidInputError(f"bound must be >= 2, got {self.bound}")
        if self.kl_bound < 1:
            raise InvalidInputError(f"kl_bound must be >= 1, got {self.kl_bound}")
        if self.budget < 1:
            raise InvalidInputError(f"budget must be >= 1, got {self.budget}")
        if self.workers < 1:
            raise InvalidInputError(f"workers must be >= 1, got {self.workers}")


@dataclass(frozen=True)
class FixtureRow:
    b2_expected: int
    w_listed: IntVec
    poly_text: str
    consistent: bool
    w_inferred: IntVec
    d_inferred: int


@dataclass(frozen=True)
class EtaEinsteinPair:
    a: IntVec
    b: IntVec
    k: int
    l: int  # noqa: E741


# ---------- Coprime tuples ----------

def _extend(prefix: list[int], remaining: int, bound: int) -> Iterator[IntVec]:
    if remaining == 0:
        yield tuple(prefix)
        return
    start = prefix[-1] + 1 if prefix else 2
    for x in range(start, bound - remaining + 2):
        if all(math.gcd(x, y) == 1 for y in prefix):
            prefix.append(x)
            yield from _extend(prefix, remaining - 1, bound)
            prefix.pop()


def enum_pairwise_coprime(cfg: SearchConfig) -> Iterator[IntVec]:
    """
    Stream strictly increasing pairwise coprime tuples 2 <= a_0 < ... < a_n <= bound.

    Tuples come out in lexicographic order.
    """
    return _extend([], cfg.n + 1, cfg.bound)


def _tuples_with_leading(leading: int, cfg: SearchConfig) -> Iterator[IntVec]:
    return _extend([leading], cfg.n, cfg.bound)


# ---------- eta-Einstein pairs ----------

def _negative_tuples(cfg: SearchConfig) -> list[tuple[IntVec, int, int]]:
    out = []
    for a in enum_pairwise_coprime(cfg):
        link = build_link(a)
        if sasaki_type(link) is SasakiType.NEGATIVE:
            out.append((a, product(a), canonical_index(link)))
    return out


def _pairs_for_leading(
    args: tuple[int, SearchConfig, list[tuple[IntVec, int, int]]]
) -> list[EtaEinsteinPair]:
    leading, cfg, candidates = args
    found = []
    for a in _tuples_with_leading(leading, cfg):
        link = build_link(a)
        if sasaki_type(link) is not SasakiType.NEGATIVE:
            continue
        d_a, i_a = product(a), canonical_index(link)
        for b, d_b, i_b in candidates:
            if b <= a or math.gcd(d_a, d_b) != 1:
                continue
            k, l = relative_indices(i_a, i_b)  # noqa: E741
            found.append(EtaEinsteinPair(a=a, b=b, k=k, l=l))
    return found


def scan_eta_einstein(cfg: SearchConfig) -> list[EtaEinsteinPair]:
    """
    Pairs a < b of negative homology-sphere exponents with gcd(d_a, d_b) = 1.

    Each pair carries its relative-index plan (k, l), which kills c1 of the
    contact bundle. The result is sorted by (a, b) and cut at cfg.budget;
    the order does not depend on cfg.workers.
    """
    leadings = list(range(2, cfg.bound + 1))
    candidates = _negative_tuples(cfg)
    jobs = [(x, cfg, candidates) for x in leadings]
    if cfg.workers > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            chunks = list(pool.map(_pairs_for_leading, jobs))
    else:
        chunks = [_pairs_for_leading(job) for job in jobs]
    pairs = sorted((p for chunk in chunks for p in chunk), key=lambda p: (p.a, p.b))
    logger.info("Found %d eta-Einstein pairs with bound %d", len(pairs), cfg.bound)
    return pairs[: cfg.budget]


# ---------- Admissible (k, l) ----------

def scan_joins(m1: LinkSummary, m2: LinkSummary, kl_bound: int) -> list[tuple[int, int]]:
    """All coprime (k, l) <= kl_bound for which the join is smooth, ordered by (k + l, k)."""
    if kl_bound < 1:
        raise InvalidInputError(f"kl_bound must be >= 1, got {kl_bound}")
    found = []
    for k in range(1, kl_bound + 1):
        for l in range(1, kl_bound + 1):  # noqa: E741
            if math.gcd(k, l) != 1:
                continue
            if join_smooth(JoinSpec(m1=m1, m2=m2, k=k, l=l)):
                found.append((k, l))
    found.sort(key=lambda kl: (kl[0] + kl[1], kl[0]))
    return found


# ---------- Families ----------

def gomez_series(which: Series, k: int) -> WeightedPoly:
    """
    Polynomial of the k-th member of one of the two series.

    First:  z0^4 + z1^(8k+2) + z2^(4k+1) z3 + z3^(2k+1) z2, k >= 1 (b2 = 2k+1).
    Second: z0^4 + z1^2 + z2^k + z3^k, k >= 9 odd (b2 = k-1, I = k-8).

    Raises:
        InvalidParameterError: If k is out of range for the series
    """
    if which is Series.FIRST:
        if k < 1:
            raise InvalidParameterError(f"first series needs k >= 1, got {k}")
        rows = (
            (4, 0, 0, 0),
            (0, 8 * k + 2, 0, 0),
            (0, 0, 4 * k + 1, 1),
            (0, 0, 1, 2 * k + 1),
        )
    else:
        if k < 9 or k % 2 == 0:
            raise InvalidParameterError(f"second series needs odd k >= 9, got {k}")
        rows = ((4, 0, 0, 0), (0, 2, 0, 0), (0, 0, k, 0), (0, 0, 0, k))
    return WeightedPoly(nvars=4, monomials=rows)


def gomez_expectations(which: Series, k: int) -> dict[str, int]:
    """Closed forms for b2, the canonical index and the stated order of the k-th member."""
    if which is Series.FIRST:
        return {
            "b2": 2 * k + 1,
            "index": 48 * k * k - 8 * k - 9,
            "index_product_form": 16 * k * (4 * k + 1) - (4 * k + 3) ** 2,
            "upsilon_stated": 2 * (4 * k + 1),
        }
    return {"b2": k - 1, "index": k - 8, "index_product_form": k - 8, "upsilon_stated": 2 * k}


def sporadic_fixtures() -> list[FixtureRow]:
    """The five sporadic rows, each checked against the inferred weights of its polynomial."""
    rows = []
    for raw in list_fixture_rows():
        ws = infer_weights(parse_poly(raw["poly"]))
        listed = tuple(raw["w"])
        g = gcd_all(listed)
        consistent = tuple(x // g for x in listed) == ws.w
        if not consistent:
            logger.warning("Listed weights %s inconsistent with %s; using inferred %s",
                           listed, raw["poly"], ws.w)
        rows.append(
            FixtureRow(
                b2_expected=raw["b2"],
                w_listed=listed,
                poly_text=raw["poly"],
                consistent=consistent,
                w_inferred=ws.w,
                d_inferred=ws.d,
            )
        )
    return rows

