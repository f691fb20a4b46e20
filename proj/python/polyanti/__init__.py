"""Geometry of antimatroidal point sets.

Point sets are lists of integer tuples, chains are lists of points ordered
from the origin, cuboids are (min_corner, max_corner) tuple pairs.
"""

from polyanti._core import *  # noqa: F401,F403
from polyanti._core import __version__  # noqa: F401
