"""Finite-category engine for monoidal monad liftings.

Thin wrapper around the native module; all operations take a fixture
directory and return ``{"exit_code": int, "report": dict}``.
"""

try:
    from ._oidal import run, check, em, lift, laws, coeq, __version__
except ImportError:  # built in-tree, module on sys.path directly
    from _oidal import run, check, em, lift, laws, coeq, __version__

__all__ = ["run", "check", "em", "lift", "laws", "coeq", "__version__"]
