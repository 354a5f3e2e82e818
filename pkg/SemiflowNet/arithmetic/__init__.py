from .exact import as_integer_vector, as_rational_vector, gcd_normalize
from .exact import rational_rank, extract_independent_subset, solve_rational
from .simplex import SimplexTableau, find_nonnegative_solution

__all__ = ['as_integer_vector', 'as_rational_vector', 'gcd_normalize',
           'rational_rank', 'extract_independent_subset', 'solve_rational',
           'SimplexTableau', 'find_nonnegative_solution']
