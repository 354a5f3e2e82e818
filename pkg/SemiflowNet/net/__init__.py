from .petri_net import Net, Marking
from .petri_net import enabled, fire, fire_sequence, incidence
from .petri_net import parikh_vector, unit_parikh, state_equation_residual

__all__ = ['Net', 'Marking', 'enabled', 'fire', 'fire_sequence', 'incidence',
           'parikh_vector', 'unit_parikh', 'state_equation_residual']
