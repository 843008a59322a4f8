"""
Arithmetic of the join M1 *_{k,l} M2 of two quasi-regular Sasakian manifolds.

The join is the circle orbibundle over the product of the two quotient
orbifolds with class k.omega_1 + l.omega_2. This module decides smoothness,
computes the first Chern class of the contact bundle, describes the
fundamental group and low-degree cohomology, and checks which of the
CSC / eta-Einstein / Sasaki-Einstein existence results apply. No metric is
ever constructed: the flags say which existence result covers the join.
"""

import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from .config import POINCARE_ORDER
from .errors import InvalidInputError, TypeMismatchError, UnknownInvariantError, UnsupportedError
from .summary import LinkSummary, poincare_summary

logger = logging.getLogger(__name__)


class Pi1Kind(Enum):
    ICOSAHEDRAL = "icosahedral"
    ICOSAHEDRAL_OR_BINARY = "icosahedral_or_binary_icosahedral"
    ZL_EXTENSION = "zl_extension"
    TRIVIAL = "trivial"


class RingPrediction(Enum):
    INTEGRAL_S2xS = "integral_s2xs"
    RATIONAL_S2xS = "rational_s2xs"
    H2_SPLIT_ONLY = "h2_split_only"


@dataclass(frozen=True)
class JoinSpec:
    m1: LinkSummary
    m2: LinkSummary
    k: int
    l: int  # noqa: E741

    def __post_init__(self) -> None:
        if self.k <= 0 or self.l <= 0:
            raise InvalidInputError(f"k and l must be positive, got ({self.k}, {self.l})")
        if math.gcd(self.k, self.l) != 1:
            raise InvalidInputError(f"k and l must be coprime, got ({self.k}, {self.l})")

    @property
    def name(self) -> str:
        return f"{self.m1.name} *_({self.k},{self.l}) {self.m2.name}"


@dataclass(frozen=True)
class Pi1Descriptor:
    kind: Pi1Kind
    l: int | None = None  # noqa: E741
    base: str | None = None
    perfect: bool = True

    def describe(self) -> str:
        if self.kind is Pi1Kind.ICOSAHEDRAL:
            return "I (icosahedral, order 60)"
        if self.kind is Pi1Kind.ICOSAHEDRAL_OR_BINARY:
            return "I or I* (undetermined)"
        if self.kind is Pi1Kind.ZL_EXTENSION:
            return f"Z_{self.l} extension of {self.base}"
        return "trivial"

    def to_dict(self) -> dict[str, Any]:
        return {
            "kind": self.kind.value,
            "l": self.l,
            "base": self.base,
            "perfect": self.perfect,
            "description": self.describe(),
        }


@dataclass(frozen=True)
class JoinReport:
    spec: JoinSpec
    smooth: bool
    dim: int
    c1_coeff: int
    w2_nonzero: bool
    pi1: Pi1Descriptor | None
    h2_rank: int | None
    ring: RingPrediction
    csc_ray: bool
    eta_einstein: bool
    lorentzian_se: bool
    sasaki_einstein: bool
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict[str, Any]:
        return {
            "join": self.spec.name,
            "m1": self.spec.m1.to_dict(),
            "m2": self.spec.m2.to_dict(),
            "k": self.spec.k,
            "l": self.spec.l,
            "smooth": self.smooth,
            "dim": self.dim,
            "c1_coeff": self.c1_coeff,
            "w2_nonzero": self.w2_nonzero,
            "pi1": self.pi1.to_dict() if self.pi1 else None,
            "h2_rank": self.h2_rank,
            "ring": self.ring.value,
            "csc_ray": self.csc_ray,
            "eta_einstein": self.eta_einstein,
            "lorentzian_se": self.lorentzian_se,
            "sasaki_einstein": self.sasaki_einstein,
            "notes": list(self.notes),
        }


def join_smooth(spec: JoinSpec) -> bool:
    """The join is a manifold iff gcd(upsilon_1 l, upsilon_2 k) == 1."""
    return math.gcd(spec.m1.upsilon * spec.l, spec.m2.upsilon * spec.k) == 1


def contact_c1(i1: int, i2: int, k: int, l: int) -> int:  # noqa: E741
    """Coefficient of the generator gamma in c1 of the contact bundle: I2 k - I1 l."""
    return i2 * k - i1 * l


def relative_indices(i1: int, i2: int) -> tuple[int, int]:
    """
    Divide two canonical indices of the same sign by their gcd.

    The result is returned as positive integers so it can be used as (k, l).

    Raises:
        InvalidInputError: If an index is zero
        TypeMismatchError: If the indices have different signs
    """
    if i1 == 0 or i2 == 0:
        raise InvalidInputError("relative indices need nonzero indices")
    if (i1 > 0) != (i2 > 0):
        raise TypeMismatchError(f"indices {i1} and {i2} have different signs")
    g = math.gcd(i1, i2)
    return abs(i1) // g, abs(i2) // g


def pi1_descriptor(m1: LinkSummary, l: int) -> Pi1Descriptor:  # noqa: E741
    """
    Fundamental group of M1 *_{k,l} N for a homology 3-sphere M1 and simply connected N.

    Raises:
        UnsupportedError: If m1 is not a homology sphere
    """
    if not m1.is_homology_sphere:
        raise UnsupportedError(f"{m1.name} is not a homology sphere")
    if m1.is_simply_connected:
        return Pi1Descriptor(kind=Pi1Kind.TRIVIAL)
    if m1.is_poincare:
        kind = Pi1Kind.ICOSAHEDRAL if l % 2 else Pi1Kind.ICOSAHEDRAL_OR_BINARY
        return Pi1Descriptor(kind=kind, l=l)
    return Pi1Descriptor(kind=Pi1Kind.ZL_EXTENSION, l=l, base=f"pi1({m1.name})/Z")


def h2_rank(spec: JoinSpec) -> int:
    """
    Rank of H^2 of the join: b2(M2) + 1 (H^2(N) plus the class of the join circle).

    Raises:
        UnsupportedError: If the first factor is not a homology sphere, or the
            second is neither simply connected nor a homology 3-sphere
        UnknownInvariantError: If b2 of the second factor is unknown
    """
    if not spec.m1.is_homology_sphere:
        raise UnsupportedError(f"{spec.m1.name} is not a homology sphere")
    if not (spec.m2.is_simply_connected or _is_homology_3_sphere(spec.m2)):
        raise UnsupportedError(f"{spec.m2.name} is neither simply connected nor a homology 3-sphere")
    if spec.m2.b2 is None:
        raise UnknownInvariantError(f"b2 of {spec.m2.name} is unknown")
    return spec.m2.b2 + 1


def ring_prediction(r: int, k: int, l: int) -> RingPrediction:  # noqa: E741
    """
    Cohomology ring of M *_{k,l} S^{2r+1} for a homology 3-sphere M.

    Integral S^2 x S^{2r+1} when l == 1 or r == 1; rational otherwise.
    """
    if r < 1:
        raise InvalidInputError(f"sphere parameter r must be >= 1, got {r}")
    if l == 1 or r == 1:
        return RingPrediction.INTEGRAL_S2xS
    return RingPrediction.RATIONAL_S2xS


def _is_sphere(m: LinkSummary) -> bool:
    return m.is_homology_sphere and m.is_simply_connected


def _is_homology_3_sphere(m: LinkSummary) -> bool:
    return m.is_homology_sphere and m.dim == 3


def eta_einstein_plan(m1: LinkSummary, m2: LinkSummary) -> JoinSpec | None:
    """
    Choose (k, l) killing c1 of the contact bundle for two negative factors.

    (k, l) are the relative indices. For two homology 3-spheres the plan
    applies when gcd(d_a, d_b) == 1; for a general second factor it applies
    when gcd(d_a I_2, upsilon_2) == 1 with I_2 its relative index.
    Returns None when the plan does not apply.

    Raises:
        TypeMismatchError: If either factor is not negative
    """
    if not (m1.is_negative and m2.is_negative):
        raise TypeMismatchError(f"{m1.name} and {m2.name} must both be negative")
    if not m1.is_homology_sphere or m1.dim != 3 or m1.d_total <= 0:
        logger.debug("eta-Einstein plan needs a homology 3-sphere first factor, got %s", m1.name)
        return None
    k, l = relative_indices(m1.index, m2.index)  # noqa: E741
    if m2.is_homology_sphere and m2.dim == 3 and m2.d_total > 0:
        applicable = math.gcd(m1.d_total, m2.d_total) == 1
    else:
        applicable = math.gcd(m1.d_total * l, m2.upsilon) == 1
    if not applicable:
        logger.debug("eta-Einstein plan for %s and %s fails the gcd condition", m1.name, m2.name)
        return None
    return JoinSpec(m1=m1, m2=m2, k=k, l=l)


def sasaki_einstein_plan(n: LinkSummary) -> JoinSpec | None:
    """
    Plan S^3/I* *_{1, I_F} N for a simply connected positive Sasaki-Einstein N.

    Applies when gcd(30 I_F, upsilon) == 1. Returns None otherwise.
    """
    fano = -n.index
    if not (n.is_simply_connected and n.is_positive and n.einstein_base and fano > 0):
        logger.debug("%s does not meet the Sasaki-Einstein plan hypotheses", n.name)
        return None
    if math.gcd(POINCARE_ORDER * fano, n.upsilon) != 1:
        logger.debug("gcd(30 * %d, %d) != 1 for %s", fano, n.upsilon, n.name)
        return None
    return JoinSpec(m1=poincare_summary(), m2=n, k=1, l=fano)


def homotopy_notes(spec: JoinSpec) -> list[str]:
    """Higher homotopy facts about the join, as text."""
    m1, m2 = spec.m1, spec.m2
    notes = []
    if not m1.is_homology_sphere:
        return notes
    if m2.is_simply_connected:
        if m1.is_poincare:
            notes.append(f"pi_i(join) = pi_i(S^3) + pi_i({m2.name}) for i >= 3")
        elif not m1.is_simply_connected:
            notes.append(f"pi_i(join) = pi_i({m2.name}) for i >= 2")
    elif _is_homology_3_sphere(m2):
        notes.append(f"pi1(join) is a perfect quotient of pi1({m1.name}) x pi1({m2.name})")
        if not (m1.is_poincare or m2.is_poincare):
            notes.append("pi_i(join) = 0 for i >= 3")
    return notes


def _ring_for(spec: JoinSpec) -> RingPrediction:
    m1, m2 = spec.m1, spec.m2
    if _is_homology_3_sphere(m1):
        if _is_sphere(m2):
            return ring_prediction((m2.dim - 1) // 2, spec.k, spec.l)
        if _is_homology_3_sphere(m2):
            return RingPrediction.INTEGRAL_S2xS
    return RingPrediction.H2_SPLIT_ONLY


def join_report(spec: JoinSpec) -> JoinReport:
    """
    Full invariant and eligibility report for a join.

    A non-smooth join gets a report with smooth=False and every metric flag off.
    """
    m1, m2 = spec.m1, spec.m2
    smooth = join_smooth(spec)
    c1 = contact_c1(m1.index, m2.index, spec.k, spec.l)

    # pi1 is only described over a simply connected second factor
    covered = m1.is_homology_sphere and m2.is_simply_connected
    pi1 = pi1_descriptor(m1, spec.l) if covered else None
    h2_known = m1.is_homology_sphere and (m2.is_simply_connected or _is_homology_3_sphere(m2))
    h2 = h2_rank(spec) if h2_known and m2.b2 is not None else None

    csc = eta = se = False
    if smooth:
        csc = m1.is_homology_sphere and m2.has_csc_base
        if m1.is_negative and m2.is_negative and c1 == 0:
            plan = eta_einstein_plan(m1, m2)
            eta = plan is not None and (plan.k, plan.l) == (spec.k, spec.l)
        if m1.is_poincare and c1 == 0:
            plan = sasaki_einstein_plan(m2)
            se = plan is not None and (plan.k, plan.l) == (spec.k, spec.l)
    else:
        logger.warning("%s is not smooth: gcd(%d, %d) > 1", spec.name, m1.upsilon * spec.l, m2.upsilon * spec.k)

    report = JoinReport(
        spec=spec,
        smooth=smooth,
        dim=m1.dim + m2.dim - 1,
        c1_coeff=c1,
        w2_nonzero=c1 % 2 == 1,
        pi1=pi1,
        h2_rank=h2,
        ring=_ring_for(spec),
        csc_ray=csc,
        eta_einstein=eta,
        lorentzian_se=eta,
        sasaki_einstein=se,
        notes=homotopy_notes(spec),
    )
    logger.info("Join report for %s: smooth=%s c1=%d", spec.name, smooth, c1)
    return report
