__version__ = '0.1.0'

from . import arithmetic, net, netio, reachability, semiflows
from .config import DEFAULT_SETTINGS, Settings
from .exceptions import SemiflowNetError

__all__ = ['arithmetic', 'net', 'netio', 'reachability', 'semiflows',
           'Settings', 'DEFAULT_SETTINGS', 'SemiflowNetError', '__version__']
