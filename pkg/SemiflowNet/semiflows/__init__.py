from .semiflow import Semiring, GeneratorKind, Semiflow, GeneratingSet
from .semiflow import semiflow_from_places, is_semiflow, is_canonical
from .semiflow import support_union, enabling_threshold
from .semiflow import satisfies_enabling_threshold
from .farkas import farkas_rays, compute_fundamental_set, minimal_supports
from .farkas import structurally_bounded_support, sperner_bound
from .farkas import optimized_sperner_bound
from .hilbert import compute_minimal_semiflows, is_minimal, q_basis_of
from .hilbert import compute_q_basis
from .decomposition import Decomposition, Infeasible, decompose
from .bounds import BoundReport, place_bounds
from .analysis import StructuralAnalysis

__all__ = ['Semiring', 'GeneratorKind', 'Semiflow', 'GeneratingSet',
           'semiflow_from_places', 'is_semiflow', 'is_canonical',
           'support_union', 'enabling_threshold',
           'satisfies_enabling_threshold', 'farkas_rays',
           'compute_fundamental_set', 'minimal_supports',
           'structurally_bounded_support', 'sperner_bound',
           'optimized_sperner_bound', 'compute_minimal_semiflows',
           'is_minimal', 'q_basis_of', 'compute_q_basis', 'Decomposition',
           'Infeasible', 'decompose', 'BoundReport', 'place_bounds',
           'StructuralAnalysis']
