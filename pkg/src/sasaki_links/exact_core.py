"""
Exact integer and rational helpers shared by the rest of the package.

Everything here is exact: integers are Python ints, rationals are
fractions.Fraction. No floating point is used anywhere in the package.
"""

import logging
import math
from fractions import Fraction
from functools import reduce
from itertools import combinations
from typing import Sequence

import sympy as sp

from .errors import InvalidInputError, NoSolutionError, NotUniqueError

logger = logging.getLogger(__name__)

IntVec = tuple[int, ...]


def gcd_all(v: Sequence[int]) -> int:
    """
    Nonnegative gcd of all entries.

    Args:
        v: Nonempty sequence of integers

    Returns:
        int: gcd of the entries; gcd_all([x]) == abs(x)

    Raises:
        InvalidInputError: If v is empty
    """
    if not v:
        raise InvalidInputError("gcd of an empty vector")
    return reduce(math.gcd, (abs(int(x)) for x in v), 0)


def lcm_all(v: Sequence[int]) -> int:
    """
    Positive lcm of all entries.

    Raises:
        InvalidInputError: If v is empty or has an entry <= 0
    """
    if not v:
        raise InvalidInputError("lcm of an empty vector")
    for x in v:
        if x <= 0:
            raise InvalidInputError(f"lcm needs positive entries, got {x}")
    return reduce(math.lcm, (int(x) for x in v), 1)


def product(v: Sequence[int]) -> int:
    return math.prod(int(x) for x in v)


def pairwise_coprime(v: Sequence[int]) -> bool:
    """True iff gcd(v_i, v_j) == 1 for all i != j."""
    return all(math.gcd(x, y) == 1 for x, y in combinations(v, 2))


def as_int(q: Fraction) -> int | None:
    """Return q as an int if it is integral, else None."""
    return q.numerator if q.denominator == 1 else None


def solve_primitive_ray(rows: Sequence[Sequence[int]]) -> tuple[IntVec, int]:
    """
    Solve E.w = d.1 for the primitive positive integer ray (w, d).

    The homogeneous system (E | -1).(w, d)^T = 0 is solved exactly with
    sympy's rational nullspace. The kernel must be a line; its generator is
    scaled to integers, divided by the gcd and oriented so that d > 0.

    Args:
        rows: Exponent matrix, one row per monomial, nonnegative entries

    Returns:
        tuple: (w, d) with gcd(w_0, ..., w_n, d) == 1

    Raises:
        InvalidInputError: If the matrix is empty, ragged or has negative entries
        NoSolutionError: If there is no positive solution
        NotUniqueError: If the solution space is not one-dimensional
    """
    if not rows or not rows[0]:
        raise InvalidInputError("exponent matrix needs at least one row and column")
    ncols = len(rows[0])
    for row in rows:
        if len(row) != ncols:
            raise InvalidInputError("exponent matrix rows differ in length")
        if any(e < 0 for e in row):
            raise InvalidInputError("exponents must be nonnegative")

    augmented = sp.Matrix([[int(e) for e in row] + [-1] for row in rows])
    kernel = augmented.nullspace()
    logger.debug("Kernel dimension %d for %d x %d system", len(kernel), len(rows), ncols)
    if not kernel:
        raise NoSolutionError("only the zero solution exists")
    if len(kernel) > 1:
        raise NotUniqueError(f"solution space has dimension {len(kernel)}")

    ray = [Fraction(int(x.p), int(x.q)) for x in kernel[0]]
    scale = lcm_all([q.denominator for q in ray])
    ints = [int(q * scale) for q in ray]
    g = gcd_all(ints)
    ints = [x // g for x in ints]
    if ints[-1] < 0:
        ints = [-x for x in ints]
    *w, d = ints
    if d <= 0 or any(x <= 0 for x in w):
        raise NoSolutionError(f"kernel ray {tuple(ints)} is not positive")
    return tuple(w), d
