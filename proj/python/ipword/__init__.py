"""Exact-arithmetic uniformly recurrent words and finite IP/central-set certificates."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
