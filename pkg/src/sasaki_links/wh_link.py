"""
Links of weighted homogeneous hypersurface singularities in C^{n+1}.

Polynomials are kept as exponent matrices with generic coefficients. From
the weights we get the Milnor number, the divisor of the characteristic
polynomial of the monodromy (Milnor-Orlik), the middle Betti number of the
link, the isotropy strata of the circle action and the order of the
Sasakian structure.
"""

import logging
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product as cartesian
from typing import Any, Sequence

from .config import BRUTEFORCE_BUDGET
from .errors import (
    CalculusError,
    InvalidInputError,
    NoSolutionError,
    NotIsolatedError,
    NotUniqueError,
    NotWeightedHomogeneousError,
    NullTypeError,
    PolySyntaxError,
    TooLargeError,
    WeightsUndeterminedError,
)
from .exact_core import IntVec, as_int, gcd_all, lcm_all, product, solve_primitive_ray
from .summary import LinkSummary, SasakiType

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WeightedPoly:
    """A polynomial with generic nonzero coefficients, one row per monomial."""
    nvars: int
    monomials: tuple[IntVec, ...]

    def __post_init__(self) -> None:
        if not self.monomials:
            raise InvalidInputError("a polynomial needs at least one monomial")
        if len(set(self.monomials)) != len(self.monomials):
            raise InvalidInputError("duplicate monomials")
        for mono in self.monomials:
            if len(mono) != self.nvars:
                raise InvalidInputError(f"monomial {mono} does not have {self.nvars} exponents")
            if any(e < 0 for e in mono):
                raise InvalidInputError(f"negative exponent in {mono}")
            if not any(mono):
                raise InvalidInputError("constant monomials are not allowed")
        for j in range(self.nvars):
            if not any(mono[j] for mono in self.monomials):
                raise InvalidInputError(f"variable z{j} does not appear in any monomial")


@dataclass(frozen=True)
class WeightSystem:
    w: IntVec
    d: int

    def __post_init__(self) -> None:
        if not self.w or self.d <= 0 or any(x <= 0 for x in self.w):
            raise InvalidInputError(f"weights and degree must be positive: w={self.w} d={self.d}")

    @property
    def nvars(self) -> int:
        return len(self.w)


@dataclass(frozen=True)
class MonodromyDivisor:
    """
    Formal sum sum_k c_k L_k standing for prod_k (t^k - 1)^{c_k}.

    terms holds (k, c_k) pairs with c_k != 0, sorted by decreasing k.
    """
    terms: tuple[tuple[int, int], ...]

    def coeff(self, k: int) -> int:
        return dict(self.terms).get(k, 0)

    @property
    def degree(self) -> int:
        return sum(k * c for k, c in self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for i, (k, c) in enumerate(self.terms):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = f"L{k}" if mag == 1 else f"{mag}*L{k}"
            if i == 0:
                out.append(body if c > 0 else "-" + body)
            else:
                out.append(f" {sign} {body}")
        return "".join(out)


@dataclass(frozen=True)
class StratumReport:
    subset: IntVec
    present: bool
    isotropy: int | None


# ---------- Polynomial text form ----------

_TOKEN_RE = re.compile(r"\s*(?:(?P<var>[zZ]_?(?P<idx>\d+))|(?P<num>\d+)|(?P<op>[\^*+{}]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN_RE.match(text, pos)
        if not m:
            bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise PolySyntaxError(f"unexpected character {text[bad]!r}", bad)
        start = m.end() - len(m.group(0).lstrip())
        if m.group("var"):
            tokens.append(("var", m.group("idx"), start))
        elif m.group("num"):
            tokens.append(("num", m.group("num"), start))
        else:
            tokens.append(("op", m.group("op"), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _PolyParser:
    """Recursive descent over  poly := term ('+' term)* ; term := factor ('*'? factor)*."""

    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def take(self) -> tuple[str, str, int]:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op: str) -> None:
        kind, value, pos = self.take()
        if kind != "op" or value != op:
            raise PolySyntaxError(f"expected {op!r}", pos)

    def poly(self) -> list[dict[int, int]]:
        terms = [self.term()]
        while self.peek()[:2] == ("op", "+"):
            self.take()
            terms.append(self.term())
        kind, value, pos = self.peek()
        if kind != "end":
            raise PolySyntaxError(f"unexpected {value!r}", pos)
        return terms

    def term(self) -> dict[int, int]:
        start = self.peek()[2]
        exps: dict[int, int] = {}
        self.factor(exps)
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value == "*":
                self.take()
                self.factor(exps)
            elif kind in ("var", "num"):
                self.factor(exps)
            else:
                break
        if not exps:
            raise PolySyntaxError("constant term", start)
        return exps

    def factor(self, exps: dict[int, int]) -> None:
        kind, value, pos = self.take()
        if kind == "num":
            return  # coefficient, discarded
        if kind != "var":
            raise PolySyntaxError("expected a variable or coefficient", pos)
        exponent = 1
        if self.peek()[:2] == ("op", "^"):
            self.take()
            braced = self.peek()[:2] == ("op", "{")
            if braced:
                self.take()
            ekind, evalue, epos = self.take()
            if ekind != "num":
                raise PolySyntaxError("expected an exponent", epos)
            exponent = int(evalue)
            if exponent < 1:
                raise PolySyntaxError("exponent must be >= 1", epos)
            if braced:
                self.expect_op("}")
        idx = int(value)
        exps[idx] = exps.get(idx, 0) + exponent


def parse_poly(text: str) -> WeightedPoly:
    """
    Parse text such as "z0^12+z1^6+z2^4+z3^2*z0" into a WeightedPoly.

    Numeric coefficients are accepted and discarded. Repeated monomials
    collapse into one (coefficients are generic).

    Raises:
        PolySyntaxError: On empty input, bad syntax or an exponent < 1
        InvalidInputError: If some variable below the largest index is unused
    """
    if not text or not text.strip():
        raise PolySyntaxError("empty polynomial", 0)
    terms = _PolyParser(text).poly()
    nvars = 1 + max(max(t) for t in terms)
    rows: list[IntVec] = []
    for t in terms:
        row = tuple(t.get(j, 0) for j in range(nvars))
        if row in rows:
            logger.debug("Dropping repeated monomial %s", row)
            continue
        rows.append(row)
    return WeightedPoly(nvars=nvars, monomials=tuple(rows))


def render_poly(p: WeightedPoly) -> str:
    terms = []
    for mono in p.monomials:
        factors = [f"z{j}" if e == 1 else f"z{j}^{e}" for j, e in enumerate(mono) if e]
        terms.append("*".join(factors))
    return "+".join(terms)


def poly_to_json(p: WeightedPoly) -> dict[str, Any]:
    return {"nvars": p.nvars, "monomials": [list(m) for m in p.monomials]}


def poly_from_json(data: dict[str, Any]) -> WeightedPoly:
    try:
        nvars = int(data["nvars"])
        rows = tuple(tuple(int(e) for e in m) for m in data["monomials"])
    except (KeyError, TypeError, ValueError) as e:
        raise InvalidInputError(f"bad exponent-matrix JSON: {e}")
    return WeightedPoly(nvars=nvars, monomials=rows)


def brieskorn_pham(a: Sequence[int]) -> WeightedPoly:
    """The polynomial z_0^{a_0} + ... + z_n^{a_n}."""
    n = len(a)
    rows = tuple(tuple(a[i] if i == j else 0 for i in range(n)) for j in range(n))
    return WeightedPoly(nvars=n, monomials=rows)


# ---------- Weights, Milnor number, monodromy ----------

def infer_weights(p: WeightedPoly) -> WeightSystem:
    """
    Primitive weights and degree making every monomial of p homogeneous.

    Raises:
        NotWeightedHomogeneousError: If no positive weight system exists
        WeightsUndeterminedError: If the weights are not determined up to scale
    """
    try:
        w, d = solve_primitive_ray(p.monomials)
    except NoSolutionError as e:
        raise NotWeightedHomogeneousError(f"{render_poly(p)}: {e}")
    except NotUniqueError as e:
        raise WeightsUndeterminedError(f"{render_poly(p)}: {e}")
    logger.debug("Weights of %s: w=%s d=%d", render_poly(p), w, d)
    return WeightSystem(w=w, d=d)


def milnor_number(ws: WeightSystem) -> int:
    """
    mu = prod_j (d - w_j)/w_j.

    Raises:
        NotIsolatedError: If some w_j >= d or the product is not an integer
    """
    if any(x >= ws.d for x in ws.w):
        raise NotIsolatedError(f"weights {ws.w} reach the degree {ws.d}")
    mu = math.prod((Fraction(ws.d - x, x) for x in ws.w), start=Fraction(1))
    value = as_int(mu)
    if value is None:
        raise NotIsolatedError(f"Milnor number {mu} is not an integer for w={ws.w} d={ws.d}")
    return value


def _multiply(x: dict[int, Fraction], y: dict[int, Fraction]) -> dict[int, Fraction]:
    # L_a * L_b = gcd(a, b) L_lcm(a, b)
    out: dict[int, Fraction] = {}
    for a, ca in x.items():
        for b, cb in y.items():
            k = math.lcm(a, b)
            out[k] = out.get(k, Fraction(0)) + ca * cb * math.gcd(a, b)
    return {k: c for k, c in out.items() if c != 0}


def monodromy_divisor(ws: WeightSystem) -> MonodromyDivisor:
    """
    Divisor of the characteristic polynomial of the Milnor monodromy.

    With u_j = d/gcd(d, w_j) and v_j = w_j/gcd(d, w_j) the divisor is
    prod_j ((1/v_j) L_{u_j} - L_1), where L_1 is the identity.

    Raises:
        CalculusError: If a final coefficient is not an integer
    """
    acc: dict[int, Fraction] = {1: Fraction(1)}
    for x in ws.w:
        g = math.gcd(ws.d, x)
        u, v = ws.d // g, x // g
        factor = {u: Fraction(1, v)}
        factor[1] = factor.get(1, Fraction(0)) - 1
        acc = _multiply(acc, {k: c for k, c in factor.items() if c != 0})
    terms = []
    for k in sorted(acc, reverse=True):
        c = as_int(acc[k])
        if c is None:
            raise CalculusError(f"coefficient {acc[k]} of L{k} is not an integer for w={ws.w} d={ws.d}")
        terms.append((k, c))
    divisor = MonodromyDivisor(terms=tuple(terms))
    logger.debug("Divisor for w=%s d=%d: %s", ws.w, ws.d, divisor)
    return divisor


def betti_from_divisor(divisor: MonodromyDivisor) -> int:
    """
    Multiplicity of the eigenvalue 1, i.e. b_{n-1} of the link.

    Raises:
        CalculusError: If the count is negative
    """
    total = sum(c for _, c in divisor.terms)
    if total < 0:
        raise CalculusError(f"negative eigenvalue-1 multiplicity {total}")
    return total


def alexander_at_one(divisor: MonodromyDivisor) -> Fraction | None:
    """
    Delta(1) = prod_k k^{c_k} when 1 is not an eigenvalue, else None.

    The link is an integral homology sphere exactly when this is +-1.
    """
    if betti_from_divisor(divisor) != 0:
        return None
    value = Fraction(1)
    for k, c in divisor.terms:
        value *= Fraction(k) ** c
    return value


def betti_bruteforce_bp(a: Sequence[int], budget: int = BRUTEFORCE_BUDGET) -> int:
    """
    Count tuples 1 <= j_i <= a_i - 1 with sum j_i/a_i integral.

    This is the eigenvalue-1 multiplicity of the diagonal monodromy of
    z_0^{a_0} + ... + z_n^{a_n}, counted without the divisor calculus.

    Raises:
        InvalidInputError: If some a_i < 2
        TooLargeError: If prod(a_i - 1) exceeds the budget
    """
    if not a or any(x < 2 for x in a):
        raise InvalidInputError(f"exponents must be >= 2, got {tuple(a)}")
    size = product([x - 1 for x in a])
    if size > budget:
        raise TooLargeError(f"{size} tuples exceed the enumeration budget {budget}")
    lcm = lcm_all(a)
    steps = [lcm // x for x in a]
    ranges = [range(1, x) for x in a]
    return sum(
        1 for js in cartesian(*ranges)
        if sum(j * s for j, s in zip(js, steps)) % lcm == 0
    )


# ---------- Circle action ----------

def strata(p: WeightedPoly, ws: WeightSystem) -> list[StratumReport]:
    """
    Isotropy strata {z_j != 0 exactly for j in J} of the circle action on the link.

    A stratum is present unless exactly one monomial of p is supported in J
    (a single monomial never vanishes on the torus; with generic coefficients
    two or more always do; none means f vanishes identically there).
    """
    supports = [frozenset(j for j, e in enumerate(m) if e) for m in p.monomials]
    out = []
    for size in range(1, p.nvars + 1):
        for subset in combinations(range(p.nvars), size):
            js = frozenset(subset)
            count = sum(1 for s in supports if s <= js)
            present = count != 1
            isotropy = gcd_all([ws.w[j] for j in subset]) if present else None
            out.append(StratumReport(subset=subset, present=present, isotropy=isotropy))
    return out


def order_upsilon(p: WeightedPoly, ws: WeightSystem) -> int:
    """lcm of the isotropy orders over the present strata (1 if there are none)."""
    orders = [s.isotropy for s in strata(p, ws) if s.present and s.isotropy]
    return lcm_all(orders) if orders else 1


def hypersurface_index(ws: WeightSystem) -> int:
    """I = d - |w|; negative values are Fano indices with the sign flipped."""
    return ws.d - sum(ws.w)


# ---------- Reports ----------

def analyze(p: WeightedPoly) -> dict[str, Any]:
    """Run the whole pipeline on p and collect the results."""
    ws = infer_weights(p)
    divisor = monodromy_divisor(ws)
    betti = betti_from_divisor(divisor)
    index = hypersurface_index(ws)
    upsilon = order_upsilon(p, ws)
    report = {
        "poly": render_poly(p),
        "nvars": p.nvars,
        "dim": 2 * p.nvars - 3,
        "w": list(ws.w),
        "d": ws.d,
        "milnor_number": milnor_number(ws),
        "divisor": str(divisor),
        "divisor_degree": divisor.degree,
        "betti_middle": betti,
        "alexander_at_one": alexander_at_one(divisor),
        "index": index,
        "fano_index": -index if index < 0 else None,
        "upsilon": upsilon,
        "gcd_index_upsilon": math.gcd(index, upsilon),
        "strata": [
            {"subset": list(s.subset), "present": s.present, "isotropy": s.isotropy}
            for s in strata(p, ws)
        ],
    }
    if p.nvars == 4:
        report["b2"] = betti
    logger.info("Analyzed %s", report["poly"])
    return report


def hypersurface_summary(p: WeightedPoly, name: str | None = None) -> LinkSummary:
    """
    Summarize the link of p for the join arithmetic.

    Raises:
        NotIsolatedError: If the singularity at the origin is not isolated
        NullTypeError: If the canonical index is 0
    """
    ws = infer_weights(p)
    milnor_number(ws)
    divisor = monodromy_divisor(ws)
    betti = betti_from_divisor(divisor)
    index = hypersurface_index(ws)
    if index == 0:
        raise NullTypeError(f"{render_poly(p)}: d = |w| = {ws.d}")
    delta = alexander_at_one(divisor)
    homology_sphere = delta is not None and abs(delta) == 1
    kind = SasakiType.POSITIVE if index < 0 else SasakiType.NEGATIVE
    dim = 2 * p.nvars - 3
    return LinkSummary(
        name=name or render_poly(p),
        dim=dim,
        upsilon=order_upsilon(p, ws),
        index=index,
        d_total=ws.d if homology_sphere else 0,
        b2=betti if p.nvars <= 4 else 0,
        sasaki_type=kind,
        is_homology_sphere=homology_sphere,
        is_poincare=dim == 3 and homology_sphere and kind is SasakiType.POSITIVE,
        is_simply_connected=p.nvars >= 4,
        has_csc_base=dim == 3,
    )
