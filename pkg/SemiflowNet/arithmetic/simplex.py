"""simplex finds non-negative rational solutions of linear systems with an
exact phase-one simplex. Pivoting follows Bland's rule, so the procedure is
deterministic and always terminates.
"""

import logging
from fractions import Fraction

from ..exceptions import DimensionError

logger = logging.getLogger(__name__)


class SimplexTableau:
    """Phase-one tableau for A.x = b, x >= 0.

    One artificial variable is added per row; the tableau minimises their
    sum. Variables 0..n-1 are the original ones, n..n+m-1 the artificial
    ones.
    """

    def __init__(self, rows, rhs):
        self.m = len(rows)
        self.n = len(rows[0]) if rows else 0
        self.A = []
        self.b = []
        for row, value in zip(rows, rhs):
            row = [Fraction(v) for v in row]
            value = Fraction(value)
            if value < 0:
                row = [-v for v in row]
                value = -value
            artificial = [Fraction(0)] * self.m
            artificial[len(self.A)] = Fraction(1)
            self.A.append(row + artificial)
            self.b.append(value)
        self.basis = list(range(self.n, self.n + self.m))
        # Reduced costs of the phase-one objective sum(artificials)
        self.c = [-sum(self.A[i][j] for i in range(self.m))
                  for j in range(self.n)] + [Fraction(0)] * self.m
        self.objective = sum(self.b, Fraction(0))
        self.pivots = 0

    def pivot(self, i, j):
        """Makes variable j basic in row i."""
        piv = self.A[i][j]
        self.A[i] = [v / piv for v in self.A[i]]
        self.b[i] /= piv
        for k in range(self.m):
            if k != i and self.A[k][j]:
                f = self.A[k][j]
                self.A[k] = [a - f * p for a, p in zip(self.A[k], self.A[i])]
                self.b[k] -= f * self.b[i]
        f = self.c[j]
        self.c = [a - f * p for a, p in zip(self.c, self.A[i])]
        self.objective += f * self.b[i]
        self.basis[i] = j
        self.pivots += 1

    def bland_step(self):
        """Performs one pivot; returns False once the tableau is optimal."""
        entering = next((j for j, cost in enumerate(self.c) if cost < 0),
                        None)
        if entering is None:
            return False
        candidates = [(self.b[i] / self.A[i][entering], self.basis[i], i)
                      for i in range(self.m) if self.A[i][entering] > 0]
        # Phase one is bounded below by zero, so candidates is never empty
        _, _, leaving = min(candidates)
        self.pivot(leaving, entering)
        return True

    def solve(self):
        """Runs Bland pivots to optimality and returns the objective."""
        while self.bland_step():
            pass
        return self.objective

    def primal_solution(self):
        """Values of the original variables at the current basis."""
        values = [Fraction(0)] * self.n
        for i, var in enumerate(self.basis):
            if var < self.n:
                values[var] = self.b[i]
        return tuple(values)


def find_nonnegative_solution(columns, target):
    """Looks for alpha >= 0 with sum(alpha_i * columns[i]) = target.

    Returns (alpha, None) on success, or (None, optimum) where optimum is
    the strictly positive phase-one value proving infeasibility.
    """
    columns = [tuple(c) for c in columns]
    target = tuple(target)
    if any(len(c) != len(target) for c in columns):
        raise DimensionError("generators and target differ in dimension")
    rows = [[column[i] for column in columns] for i in range(len(target))]
    if not target:
        return tuple(Fraction(0) for _ in columns), None
    if not columns:
        if any(target):
            return None, sum((abs(Fraction(v)) for v in target), Fraction(0))
        return (), None
    tableau = SimplexTableau(rows, target)
    optimum = tableau.solve()
    logger.debug("phase one finished after %d pivots, optimum %s",
                 tableau.pivots, optimum)
    if optimum > 0:
        return None, optimum
    return tableau.primal_solution(), None
