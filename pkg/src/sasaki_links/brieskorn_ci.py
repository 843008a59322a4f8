"""
Invariants of Brieskorn complete-intersection links L(a_0, ..., a_n).

The link is cut out of C^{n+1} by n-1 generic equations
sum_j c_ij z_j^{a_j} = 0 and intersected with the unit sphere. It is a
Seifert 3-manifold; everything here is computed from the exponents alone.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Sequence

from .config import POINCARE_EXPONENTS
from .errors import (
    EuclideanOrbifoldError,
    InconsistentSeifertDataError,
    InvalidInputError,
    NullTypeError,
)
from .exact_core import IntVec, as_int, lcm_all, pairwise_coprime, product
from .summary import LinkSummary, SasakiType

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BrieskornLink:
    a: IntVec
    n: int
    lcm: int
    w: IntVec
    d: int
    num_equations: int
    d_total: int
    w_total: int

    @property
    def is_standard_sphere(self) -> bool:
        return 1 in self.a

    @property
    def is_poincare(self) -> bool:
        return self.a == POINCARE_EXPONENTS

    @property
    def name(self) -> str:
        return "L(" + ",".join(str(x) for x in self.a) + ")"


@dataclass(frozen=True)
class SeifertCone:
    alpha: int
    beta: Fraction
    multiplicity: int


@dataclass(frozen=True)
class SeifertData:
    genus: int
    euler: Fraction
    cones: tuple[SeifertCone, ...]


def _check_exponents(a: Sequence[int]) -> IntVec:
    if len(a) < 3:
        raise InvalidInputError(f"a link needs at least 3 exponents, got {len(a)}")
    for x in a:
        if not isinstance(x, int) or x < 1:
            raise InvalidInputError(f"exponents must be integers >= 1, got {x!r}")
    return tuple(a)


def is_homology_sphere(a: Sequence[int]) -> bool:
    """
    Check whether L(a) is an integral homology 3-sphere.

    This happens exactly when the exponents are pairwise relatively prime.

    Raises:
        InvalidInputError: If fewer than 3 exponents are given
    """
    return pairwise_coprime(_check_exponents(a))


def build_link(a: Sequence[int]) -> BrieskornLink:
    """
    Build the link L(a) with weights w_j = lcm(a)/a_j and degree d = lcm(a).

    The exponents are stored in ascending order; every invariant is
    symmetric in them.
    """
    exps = tuple(sorted(_check_exponents(a)))
    n = len(exps) - 1
    lcm = lcm_all(exps)
    w = tuple(lcm // x for x in exps)
    link = BrieskornLink(
        a=exps,
        n=n,
        lcm=lcm,
        w=w,
        d=lcm,
        num_equations=n - 1,
        d_total=(n - 1) * lcm,
        w_total=sum(w),
    )
    logger.debug("Built %s: w=%s d=%d", link.name, w, lcm)
    return link


def seifert_data(link: BrieskornLink) -> SeifertData:
    """
    Unnormalized Seifert invariants of L(a).

    alpha_j = lcm(a)/lcm(a without a_j), s_j = prod(a without a_j)/lcm(a without a_j),
    2g = 2 + (n-1) prod(a)/lcm(a) - sum s_j and -e = prod(a)/lcm(a)^2.
    beta_j = 1/((n+1) w_j) so that sum beta_j w_j = 1; for homology spheres this
    is a_j/((n+1)d).

    Raises:
        InconsistentSeifertDataError: If the genus is not a nonnegative integer
    """
    a = link.a
    total = product(a)
    cones = []
    for j in range(len(a)):
        rest = a[:j] + a[j + 1:]
        lcm_rest = lcm_all(rest)
        cones.append(
            SeifertCone(
                alpha=link.lcm // lcm_rest,
                beta=Fraction(1, (link.n + 1) * link.w[j]),
                multiplicity=product(rest) // lcm_rest,
            )
        )
    twice_genus = 2 + (link.n - 1) * Fraction(total, link.lcm) - sum(c.multiplicity for c in cones)
    genus = as_int(twice_genus / 2)
    if genus is None or genus < 0:
        raise InconsistentSeifertDataError(f"{link.name}: genus evaluates to {twice_genus / 2}")
    euler = -Fraction(total, link.lcm ** 2)
    return SeifertData(genus=genus, euler=euler, cones=tuple(cones))


def canonical_index(link: BrieskornLink) -> int:
    """I = |d| - |w|; a negative value is the Fano index with its sign flipped."""
    return link.d_total - link.w_total


def orbifold_c1(link: BrieskornLink) -> Fraction:
    """Coefficient of the area form in the orbifold first Chern class, (|w| - |d|)/d."""
    return Fraction(link.w_total - link.d_total, link.d)


def sasaki_type(link: BrieskornLink) -> SasakiType:
    """
    Classify the natural Sasakian structure on L(a).

    Raises:
        NullTypeError: If |w| == |d| (transversally Calabi-Yau)
    """
    if link.is_standard_sphere:
        return SasakiType.STANDARD_SPHERE
    if link.is_poincare:
        return SasakiType.POSITIVE
    if pairwise_coprime(link.a):
        return SasakiType.NEGATIVE
    sign = link.w_total - link.d_total
    if sign == 0:
        raise NullTypeError(f"{link.name}: |w| = |d| = {link.d_total}")
    return SasakiType.POSITIVE if sign > 0 else SasakiType.NEGATIVE


def link_order(link: BrieskornLink) -> int:
    """Order of the Sasakian structure: lcm of the alpha_j (prod a_j for homology spheres)."""
    return lcm_all([c.alpha for c in seifert_data(link).cones])


def riemann_hurwitz_order(cone_orders: Sequence[int], genus: int = 0) -> Fraction:
    """
    |G| = 2 / (2 - 2g - sum(1 - 1/m_i)) for a global quotient of S^2.

    A positive integer means a spherical orbifold S^2/G; a negative or
    fractional value means there is no such finite group.

    Raises:
        InvalidInputError: If a cone order is < 2 or the genus is negative
        EuclideanOrbifoldError: If the orbifold Euler characteristic vanishes
    """
    if genus < 0:
        raise InvalidInputError(f"genus cannot be negative, got {genus}")
    for m in cone_orders:
        if m < 2:
            raise InvalidInputError(f"cone orders must be >= 2, got {m}")
    chi = 2 - 2 * genus - sum((1 - Fraction(1, m) for m in cone_orders), Fraction(0))
    if chi == 0:
        raise EuclideanOrbifoldError(f"cone orders {tuple(cone_orders)} give Euler characteristic 0")
    return Fraction(2) / chi


def base_orbifold_order(link: BrieskornLink) -> Fraction:
    """Riemann-Hurwitz order of the base orbifold of L(a) (60 for the Poincare sphere)."""
    data = seifert_data(link)
    orders = [c.alpha for c in data.cones if c.alpha >= 2 for _ in range(c.multiplicity)]
    return riemann_hurwitz_order(orders, data.genus)


def link_summary(link: BrieskornLink) -> LinkSummary:
    """
    Summarize L(a) for the join arithmetic.

    A link with some a_j = 1 is a standard sphere and is summarized as a
    simply connected positive homology sphere.
    """
    kind = sasaki_type(link)
    homology_sphere = pairwise_coprime(link.a)
    standard = kind is SasakiType.STANDARD_SPHERE
    if standard:
        kind = SasakiType.POSITIVE
    return LinkSummary(
        name=link.name,
        dim=3,
        upsilon=link_order(link),
        index=canonical_index(link),
        d_total=product(link.a) if homology_sphere else 0,
        b2=2 * seifert_data(link).genus,
        sasaki_type=kind,
        is_homology_sphere=homology_sphere,
        is_poincare=link.is_poincare,
        is_simply_connected=standard,
        has_csc_base=True,
        einstein_base=kind is SasakiType.POSITIVE,
    )


def link_report(link: BrieskornLink) -> dict[str, Any]:
    """Collect every invariant of L(a) into a flat report."""
    data = seifert_data(link)
    index = canonical_index(link)
    try:
        kind = sasaki_type(link).value
    except NullTypeError:
        kind = "null"
        logger.warning("%s is transversally Calabi-Yau (|w| = |d|)", link.name)
    try:
        base_order: Fraction | None = base_orbifold_order(link)
    except EuclideanOrbifoldError:
        base_order = None
    sum_beta_w = sum((c.beta * w for c, w in zip(data.cones, link.w)), Fraction(0))
    report = {
        "link": link.name,
        "a": list(link.a),
        "n": link.n,
        "w": list(link.w),
        "d": link.d,
        "d_total": link.d_total,
        "w_total": link.w_total,
        "homology_sphere": pairwise_coprime(link.a),
        "type": kind,
        "index": index,
        "fano_index": -index if index < 0 else None,
        "upsilon": link_order(link),
        "genus": data.genus,
        "b1": 2 * data.genus,
        "euler": data.euler,
        "orbifold_c1": orbifold_c1(link),
        "sum_beta_w": sum_beta_w,
        "base_orbifold_order": base_order,
        "cones": [
            {"alpha": c.alpha, "beta": c.beta, "s": c.multiplicity} for c in data.cones
        ],
        "gcd_d_index": math.gcd(product(link.a), index),
    }
    logger.info("Computed invariants of %s", link.name)
    return report
