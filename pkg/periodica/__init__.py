"""
有限マグマと実数直線上の周期的な集合
"""

from ._util import *
from .subset import *
from .magma import *
from .builders import *
from .structs import *
from .subset_algebra import *
from .periodic import *
from .representation import *
from .solver import *
from .topology import *
from .realline import *
