"""Numerical complex-analysis toolkit for the zeta family.

Thin re-export of the compiled extension. Installed wheels carry the
extension inside this package; in a build tree it sits on sys.path next
to the package instead, so fall back to the top-level name.
"""

try:
    from ._zetalab import *  # noqa: F401,F403
    from ._zetalab import __version__  # noqa: F401
except ImportError:  # build-tree layout
    from _zetalab import *  # noqa: F401,F403
    from _zetalab import __version__  # noqa: F401
