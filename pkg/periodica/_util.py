import logging
from typing import Any, Optional, TypeVar
from collections.abc import Callable
from functools import wraps
import os


_LOG = logging.getLogger(__name__)

DEFAULT_MAX_N = 24
DEFAULT_WORKERS = 4


class PeriodicaError(Exception):
    "periodicaの演算が定義域外の入力を受け取ったことを示す。"
    error_msg: str
    details:   dict[str, Any]

    def __init__(self, error_msg:str, **details):
        super().__init__(error_msg)
        self.error_msg = error_msg
        self.details = details

    def to_dict(self) -> dict[str, Any]:
        "CLIが標準エラー出力に書き出すJSON用の辞書"
        return {'error': type(self).__name__, 'message': self.error_msg, **{k: _jsonable(v) for k, v in self.details.items()}}


def _jsonable(value):
    match value:
        case str() | int() | float() | bool() | None:
            return value
        case list() | tuple():
            return [_jsonable(v) for v in value]
        case _:
            return str(value)


class InvalidTable(PeriodicaError):
    "Cayley表の形式が正しくない。"

class MagmaMismatch(PeriodicaError):
    "異なるマグマの部分集合同士を演算しようとした。"

class EmptyGenerator(PeriodicaError):
    "空集合から部分半群を生成しようとした。"

class NotAssociative(PeriodicaError):
    "結合的でないマグマに半群の演算を要求した。"

class NoSubgroup(PeriodicaError):
    "与えられた集合を含む部分群が存在しない。"

class NotLeftIdentity(PeriodicaError):
    "指定された元が左単位元ではない。"

class NotLeftInvertible(PeriodicaError):
    "ある元が指定された左単位元に関する左逆元を持たない。"
    element: int

    def __init__(self, error_msg:str, element:int):
        super().__init__(error_msg, element=element)
        self.element = element

class NotLeftSubgroup(PeriodicaError):
    "左部分群ではない。"

class NotLeftFactor(PeriodicaError):
    "左因子部分群ではない。"

class NotGroup(PeriodicaError):
    "群ではない。"

class BadFactorization(PeriodicaError):
    "因数分解の大きさの積が群の位数と一致しない。"

class NotFound(PeriodicaError):
    "探索が解を見つけられなかった。"

class NotPeriodic(PeriodicaError):
    "周期的ではない。"

class NotUpperPeriodic(PeriodicaError):
    "上周期的ではない。"

class PreconditionFailed(PeriodicaError):
    "定理の前提条件が満たされていない。`which`に失敗した条件の名前が入る。"
    which: str

    def __init__(self, error_msg:str, which:str):
        super().__init__(error_msg, which=which)
        self.which = which

class TooManyPairs(PeriodicaError):
    "逆元の組が多すぎて分割を列挙できない。"

class NotInSet(PeriodicaError):
    "元が集合に属していない。"

class SearchSpaceTooLarge(PeriodicaError):
    "探索空間が大きすぎる。"

class NotATopology(PeriodicaError):
    "位相にならない。"
    kind:   str
    reason: str

    def __init__(self, error_msg:str, kind:str, reason:str):
        super().__init__(error_msg, kind=kind, reason=reason)
        self.kind = kind
        self.reason = reason

class TooLarge(PeriodicaError):
    "全列挙の上限を超えている。"

class ZeroModulus(PeriodicaError):
    "法として0が指定された。"

class Unsupported(PeriodicaError):
    "この入力に対しては未対応の演算。"

class EmptySet(PeriodicaError):
    "空集合は分類できない。"

class Clash(PeriodicaError):
    "混合構成の条件 H1 ∩ (H2 − H2) = ∅ が成り立たない。"

class InvalidRealSet(PeriodicaError):
    "実数集合の標準形の不変条件が崩れている。"

class PrecisionExhausted(PeriodicaError):
    "精度の上限まで上げても区間が0を含み、符号が決まらない。"


def _env_int(name:str, default:int) -> int:
    raw = os.environ.get(name)
    if not raw:
        return default
    try:
        return int(raw)
    except ValueError:
        _LOG.warning('環境変数%sの値が整数ではないので無視します: %s', name, raw)
        return default

def max_exhaustive_n() -> int:
    "全列挙を許す集合の大きさの上限。環境変数`PERIODICA_MAX_N`で変更できる。"
    return _env_int('PERIODICA_MAX_N', DEFAULT_MAX_N)

def default_workers() -> int:
    return max(1, _env_int('PERIODICA_WORKERS', DEFAULT_WORKERS))

def require_exhaustive(size:int, what:str, *, force:bool=False, limit:Optional[int]=None) -> None:
    """
    `size`個の要素の冪集合を全列挙してよいか確認する。
    `force`が真なら上限を無視する。
    """
    cap = max_exhaustive_n() if limit is None else limit
    if not force and size > cap:
        raise TooLarge(f'{what}の全列挙には大きすぎます: {size} > {cap}', size=size, limit=cap)


_F = TypeVar('_F', bound=Callable)
def report_errors(error_logger:logging.Logger) -> Callable[[_F], _F]:
    "ワーカースレッドで発生した例外をログに残してから再送出する"
    def _decorator(func):
        @wraps(func)
        def _wrapper(*args, **kwargs):
            try:
                return func(*args, **kwargs)
            except BaseException:
                error_logger.exception(str(func))
                raise
        return _wrapper
    return _decorator # type: ignore


__all__ = (
    'PeriodicaError', 'InvalidTable', 'MagmaMismatch', 'EmptyGenerator', 'NotAssociative', 'NoSubgroup',
    'NotLeftIdentity', 'NotLeftInvertible', 'NotLeftSubgroup', 'NotLeftFactor', 'NotGroup', 'BadFactorization',
    'NotFound', 'NotPeriodic', 'NotUpperPeriodic', 'PreconditionFailed', 'TooManyPairs', 'NotInSet',
    'SearchSpaceTooLarge', 'NotATopology', 'TooLarge', 'ZeroModulus', 'Unsupported', 'EmptySet', 'Clash',
    'InvalidRealSet', 'PrecisionExhausted', 'max_exhaustive_n', 'default_workers', 'require_exhaustive',
    'report_errors',
)
