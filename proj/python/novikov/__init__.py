"""Exact arithmetic for fermionic Novikov algebras with invariant forms."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401
