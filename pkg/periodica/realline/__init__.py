"""
実数直線上の単位周期的な集合
"""

from .exact import *
from .cells import *
from .real_ops import *
