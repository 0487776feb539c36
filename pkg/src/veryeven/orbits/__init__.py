"""Nilpotent orbits of so(2n): partitions, closure order, Richardson orbits."""
from .partitions import *  # noqa: F401,F403
from .partitions import __all__ as _p
from .richardson import *  # noqa: F401,F403
from .richardson import __all__ as _r

__all__ = [*_p, *_r]
