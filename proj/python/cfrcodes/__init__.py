"""Zero skip-cost fractional repetition codes built from covering designs."""

from ._core import *  # noqa: F401,F403
from ._core import Error  # noqa: F401
