from .graph import ReachGraph, build_rg
from .properties import CheckResult, HomeSpaceQuery, LivenessReport
from .properties import SafenessReport, PropertyReport
from .properties import UnreachabilityCertificate, check_linear_invariant
from .properties import is_home_space, is_home_state, live_transitions
from .properties import safeness_and_deadlocks, property_report
from .properties import mutual_exclusion_holds, unreachability_certificate
from .properties import find_starvation_cycle, draw_reachability_graph
from .sweep import SweepRow, TEMPLATES, expected_verdicts, parameter_sweep
from .analysis import BehaviouralAnalysis

__all__ = ['ReachGraph', 'build_rg', 'CheckResult', 'HomeSpaceQuery',
           'LivenessReport', 'SafenessReport', 'PropertyReport',
           'UnreachabilityCertificate', 'check_linear_invariant',
           'is_home_space', 'is_home_state', 'live_transitions',
           'safeness_and_deadlocks', 'property_report',
           'mutual_exclusion_holds', 'unreachability_certificate',
           'find_starvation_cycle', 'draw_reachability_graph', 'SweepRow',
           'TEMPLATES', 'expected_verdicts', 'parameter_sweep',
           'BehaviouralAnalysis']
