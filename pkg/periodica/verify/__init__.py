"""
性質の検証スイート
"""

from . import suites, suites_real
from .registry import SUITES, Suite, find_suite, suite
from .report import *
from .runner import *
