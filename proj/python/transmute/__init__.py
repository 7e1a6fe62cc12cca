"""Transmutation operators for the 1-D Schrodinger operator d2/dx2 - q(x).

Thin package front for the compiled extension; everything lives in _core.
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__ as _core_doc

__doc__ = _core_doc
