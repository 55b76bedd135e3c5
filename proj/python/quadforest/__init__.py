"""Exact induced forests, reductions and discharging on bipartite plane graphs."""

try:
    from ._quadforest import *  # noqa: F401,F403
    from ._quadforest import __doc__ as _native_doc  # noqa: F401
except ImportError:  # in-tree builds put the native module on sys.path directly
    from _quadforest import *  # noqa: F401,F403

__version__ = "0.1.0"
