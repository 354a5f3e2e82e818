from .parser import SourceNet, parse_net, parse_source, load_net, emit_net
from .parser import parse_assignments, parse_grid, parse_generators
from .report import to_json_value, emit_report
from .fixtures import TinyNet, TinyKNet, MutexNet, MutexParamNet, Mutex3Net
from .fixtures import TelecomNet, STC2Vectors, STC3Vectors, VectorFixture
from .fixtures import load_fixture, fixture_names, fixture_text
from .fixtures import published_semiflows

__all__ = ['SourceNet', 'parse_net', 'parse_source', 'load_net', 'emit_net',
           'parse_assignments', 'parse_grid', 'parse_generators',
           'to_json_value', 'emit_report', 'TinyNet', 'TinyKNet', 'MutexNet',
           'MutexParamNet', 'Mutex3Net', 'TelecomNet', 'STC2Vectors',
           'STC3Vectors', 'VectorFixture', 'load_fixture', 'fixture_names',
           'fixture_text', 'published_semiflows']
