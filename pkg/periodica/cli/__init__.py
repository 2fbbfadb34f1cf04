"""
コマンドラインから各演算を呼び出す
"""

from .main import *
