"""exact is the integer and rational vector kernel behind every algebraic
analysis: gcd normalisation, exact rank, greedy basis extraction and exact
linear solving. There is no floating point anywhere in this module.
"""

import logging
from fractions import Fraction
from functools import reduce
from math import gcd

from sympy import Matrix, Rational

from ..exceptions import DimensionError

logger = logging.getLogger(__name__)


def as_integer_vector(values):
    """Returns values as a tuple of Python ints."""
    values = tuple(values)
    vector = tuple(int(v) for v in values)
    if any(a != b for a, b in zip(vector, values)):
        raise ValueError("integer vector expected, got {!r}".format(values))
    return vector


def as_rational_vector(values):
    """Returns values as a tuple of Fractions in lowest terms."""
    return tuple(Fraction(v) for v in values)


def gcd_normalize(vector):
    """Divides vector by the gcd g of its nonzero entries.

    Returns (vector / g, g); the zero vector comes back unchanged with
    g = 0.
    """
    vector = as_integer_vector(vector)
    g = reduce(gcd, (abs(v) for v in vector if v), 0)
    if g == 0:
        return vector, 0
    return tuple(v // g for v in vector), g


def _check_dimensions(vectors):
    dimensions = {len(v) for v in vectors}
    if len(dimensions) > 1:
        raise DimensionError(
            "vectors of different dimensions: {}".format(sorted(dimensions)))
    return dimensions.pop() if dimensions else 0


def _to_sympy(rows):
    return Matrix([[Rational(f.numerator, f.denominator) for f in row]
                   for row in rows])


def _to_fraction(value):
    value = Rational(value)
    return Fraction(int(value.p), int(value.q))


def rational_rank(vectors):
    """Rank over Q of the space spanned by vectors."""
    vectors = [as_rational_vector(v) for v in vectors]
    dimension = _check_dimensions(vectors)
    if not vectors or dimension == 0:
        return 0
    return _to_sympy(vectors).rank()


def extract_independent_subset(vectors):
    """Scans vectors from left to right and keeps each one that increases
    the rank. The result is a basis of their span; ties are broken by
    input order.
    """
    vectors = list(vectors)
    _check_dimensions(vectors)
    kept = []
    rank = 0
    for vector in vectors:
        new_rank = rational_rank(kept + [vector])
        if new_rank > rank:
            kept.append(vector)
            rank = new_rank
    return kept


def solve_rational(columns, target):
    """Solves sum(alpha_i * columns[i]) = target exactly over Q.

    Returns (alpha, None) when the system is consistent, with free
    coefficients set to zero. Otherwise returns (None, (rank_columns,
    rank_augmented)): the augmented rank exceeding the column rank is the
    certificate that no solution exists.
    """
    columns = [as_rational_vector(c) for c in columns]
    target = as_rational_vector(target)
    dimension = _check_dimensions(columns + [target])
    if not columns:
        if any(target):
            return None, (0, 1)
        return (), None
    rows = [[column[i] for column in columns] + [target[i]]
            for i in range(dimension)]
    if not rows:
        return tuple(Fraction(0) for _ in columns), None
    reduced, pivots = _to_sympy(rows).rref()
    width = len(columns)
    if width in pivots:
        logger.debug("inconsistent system: column rank %d, augmented rank %d",
                     len(pivots) - 1, len(pivots))
        return None, (len(pivots) - 1, len(pivots))
    alpha = [Fraction(0)] * width
    for row, column in enumerate(pivots):
        alpha[column] = _to_fraction(reduced[row, width])
    return tuple(alpha), None
