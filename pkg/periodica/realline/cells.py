"""
単位周期的な実数集合 A = (ℤ∔D) ∪̇ (ℤ₊⁰∔E) の有限表示と、実数直線上の演算の結果
"""

from dataclasses import dataclass
from enum import Enum
from typing import Any, Optional, Union
import json
import logging
import os

from ..magma import PERIODICA_ROOT
from ..structs import PeriodicaStruct
from .._util import InvalidRealSet
from .exact import ExactReal


_LOG = logging.getLogger(__name__)

Bounds = tuple[ExactReal, ExactReal, bool, bool]


@dataclass(slots=True, frozen=True)
class PointCell:
    v: ExactReal

    def __post_init__(self):
        object.__setattr__(self, 'v', ExactReal.coerce(self.v))

    @property
    def bounds(self) -> Bounds:
        return (self.v, self.v, True, True)

    @property
    def length(self) -> ExactReal:
        return ExactReal()

    def contains(self, x:ExactReal) -> bool:
        return self.v == x

    def shift(self, k) -> 'PointCell':
        return PointCell(self.v + k)

    def midpoint(self) -> ExactReal:
        return self.v

    def to_json(self) -> dict[str, Any]:
        return {'point': self.v.to_num()}

    def __str__(self):
        return f'{{{self.v}}}'


@dataclass(slots=True, frozen=True)
class IntervalCell:
    lo:        ExactReal
    hi:        ExactReal
    lo_closed: bool = True
    hi_closed: bool = False

    def __post_init__(self):
        object.__setattr__(self, 'lo', ExactReal.coerce(self.lo))
        object.__setattr__(self, 'hi', ExactReal.coerce(self.hi))
        if not self.lo < self.hi:
            raise InvalidRealSet(f'区間の端点が lo < hi を満たしません: {self.lo}, {self.hi}')

    @property
    def bounds(self) -> Bounds:
        return (self.lo, self.hi, self.lo_closed, self.hi_closed)

    @property
    def length(self) -> ExactReal:
        return self.hi - self.lo

    def contains(self, x:ExactReal) -> bool:
        above = self.lo < x or (self.lo_closed and self.lo == x)
        below = x < self.hi or (self.hi_closed and self.hi == x)
        return above and below

    def shift(self, k) -> 'IntervalCell':
        return IntervalCell(self.lo + k, self.hi + k, self.lo_closed, self.hi_closed)

    def midpoint(self) -> ExactReal:
        return (self.lo + self.hi) / 2

    def to_json(self) -> dict[str, Any]:
        return {'lo': self.lo.to_num(), 'hi': self.hi.to_num(), 'lo_closed': self.lo_closed, 'hi_closed': self.hi_closed}

    def __str__(self):
        return f'{"[" if self.lo_closed else "("}{self.lo}, {self.hi}{"]" if self.hi_closed else ")"}'


Cell = Union[PointCell, IntervalCell]


def cell_from_json(obj:Any) -> Cell:
    match obj:
        case {'point': v}:
            return PointCell(ExactReal.from_json(v))
        case {'lo': lo, 'hi': hi, **rest}:
            return IntervalCell(ExactReal.from_json(lo), ExactReal.from_json(hi),
                                bool(rest.get('lo_closed', True)), bool(rest.get('hi_closed', False)))
        case _:
            raise InvalidRealSet(f'セルとして読めません: {obj!r}')


def _cell_key(cell:Cell):
    lo, hi, lo_closed, hi_closed = cell.bounds
    return (lo, not lo_closed, hi, hi_closed)


def intersects(c1:Cell, c2:Cell) -> bool:
    lo1, hi1, lc1, hc1 = c1.bounds
    lo2, hi2, lc2, hc2 = c2.bounds
    if lo1 == lo2:
        lo, lo_closed = lo1, lc1 and lc2
    elif lo2 < lo1:
        lo, lo_closed = lo1, lc1
    else:
        lo, lo_closed = lo2, lc2
    if hi1 == hi2:
        hi, hi_closed = hi1, hc1 and hc2
    elif hi1 < hi2:
        hi, hi_closed = hi1, hc1
    else:
        hi, hi_closed = hi2, hc2
    return lo < hi or (lo == hi and lo_closed and hi_closed)


def meets_modulo_one(c1:Cell, c2:Cell) -> bool:
    "c1 ∩ (c2 + k) ≠ ∅ となる整数kがあるか"
    lo1, hi1, _, _ = c1.bounds
    lo2, hi2, _, _ = c2.bounds
    for k in range((lo1 - hi2).floor(), (hi1 - lo2).floor() + 2):
        if intersects(c1, c2.shift(k)):
            return True
    return False


class RayKind(Enum):
    ALL_REALS  = 'AllReals'
    CLOSED_RAY = 'ClosedRay'
    OPEN_RAY   = 'OpenRay'
    EMPTY      = 'Empty'


@dataclass(slots=True, frozen=True)
class RayInterval(PeriodicaStruct):
    kind: RayKind
    lo:   Optional[ExactReal] = None
    "ClosedRay なら [lo, ∞)、OpenRay なら (lo, ∞)"

    def contains(self, x:ExactReal) -> bool:
        match self.kind:
            case RayKind.ALL_REALS:
                return True
            case RayKind.CLOSED_RAY:
                return self.lo <= x # type: ignore[operator]
            case RayKind.OPEN_RAY:
                return self.lo < x # type: ignore[operator]
            case _:
                return False


@dataclass(slots=True, frozen=True)
class UnitPeriodicRealSet:
    """
    A = (ℤ∔D) ∪̇ (ℤ₊⁰∔E)。`mirrored`が真なら、この集合を −1 倍したもの(下1周期的な集合)を表す。
    生成時にセルを整列し、不変条件を確かめる。
    """

    D:        tuple[Cell, ...] = ()
    "周期核 ℤ∔D の代表。台は [0, 1) に含まれる"
    E:        tuple[Cell, ...] = ()
    "始集合。整数の反転移的"
    mirrored: bool = False

    def __post_init__(self):
        object.__setattr__(self, 'D', tuple(sorted(self.D, key=_cell_key)))
        object.__setattr__(self, 'E', tuple(sorted(self.E, key=_cell_key)))
        self._validate()

    def _validate(self):
        for cell in self.D:
            lo, hi, _, hi_closed = cell.bounds
            if lo < 0 or 1 < hi or (hi == 1 and hi_closed):
                raise InvalidRealSet(f'Dのセル{cell}が [0, 1) に含まれません', part='D')
        for cell in self.E:
            length = cell.length
            if 1 < length or (length == 1 and cell.bounds[2] and cell.bounds[3]):
                raise InvalidRealSet(f'Eのセル{cell}は整数で自分自身に移ります', part='E')
        for i, c1 in enumerate(self.D):
            for c2 in self.D[i + 1:]:
                if intersects(c1, c2):
                    raise InvalidRealSet(f'Dのセル{c1}と{c2}が重なっています', part='D')
        for i, c1 in enumerate(self.E):
            for c2 in self.E[i + 1:]:
                if meets_modulo_one(c1, c2):
                    raise InvalidRealSet(f'Eのセル{c1}と{c2}が整数のずれで重なります', part='E')
        for e in self.E:
            for d in self.D:
                if meets_modulo_one(e, d):
                    raise InvalidRealSet(f'Eのセル{e}の小数部分がDのセル{d}と交わります', part='E')

    @classmethod
    def of_points(cls, D=(), E=(), mirrored:bool=False) -> 'UnitPeriodicRealSet':
        return cls(tuple(PointCell(ExactReal.coerce(d)) for d in D),
                   tuple(PointCell(ExactReal.coerce(e)) for e in E), mirrored)

    @property
    def points_only(self) -> bool:
        return all(isinstance(c, PointCell) for c in self.D + self.E)

    @property
    def D_points(self) -> tuple[ExactReal, ...]:
        return tuple(c.v for c in self.D if isinstance(c, PointCell))

    @property
    def E_points(self) -> tuple[ExactReal, ...]:
        return tuple(c.v for c in self.E if isinstance(c, PointCell))

    def __str__(self):
        D = ', '.join(map(str, self.D))
        E = ', '.join(map(str, self.E))
        text = f'(ℤ∔[{D}]) ∪ (ℤ₊⁰∔[{E}])'
        return f'−{text}' if self.mirrored else text

    def to_json(self) -> dict[str, Any]:
        obj: dict[str, Any] = {'D': [c.to_json() for c in self.D], 'E': [c.to_json() for c in self.E]}
        if self.mirrored:
            obj['mirrored'] = True
        return obj

    @classmethod
    def from_json(cls, obj:Any) -> 'UnitPeriodicRealSet':
        if not isinstance(obj, dict):
            raise InvalidRealSet('実数集合はJSONオブジェクトで与えてください')
        try:
            D = tuple(cell_from_json(c) for c in obj.get('D', []))
            E = tuple(cell_from_json(c) for c in obj.get('E', []))
        except ValueError as error:
            raise InvalidRealSet(f'実数が読めません: {error}') from error
        return cls(D, E, bool(obj.get('mirrored', False)))

    @classmethod
    def from_file(cls, path:str) -> 'UnitPeriodicRealSet':
        """
        実数集合のJSONファイルを読み込む。
        `path`が存在しなければ、同梱の`resources`フォルダから探す。
        """
        if not os.path.exists(path):
            path = os.path.join(PERIODICA_ROOT, 'resources', path)
        with open(path, encoding='UTF-8') as f:
            try:
                obj = json.load(f)
            except json.JSONDecodeError as error:
                raise InvalidRealSet(f'JSONとして読み込めません: {path}') from error
        return cls.from_json(obj)


# ===== 実数直線上の演算の結果 =====

class DeltaKind(Enum):
    FINITE        = 'Finite'
    ZERO          = 'Zero'
    "E = ∅ のときの約束 δ = 0"
    PLUS_INFINITY = 'PlusInfinity'


@dataclass(slots=True, frozen=True)
class DeltaResult(PeriodicaStruct):
    value:    Optional[ExactReal]
    attained: bool
    kind:     DeltaKind


class RealClass(Enum):
    FIRST  = 'FirstClass'
    "周期的 (E = ∅)"
    SECOND = 'SecondClass'
    "周期自由 (D = ∅)"
    THIRD  = 'ThirdClass'


@dataclass(slots=True, frozen=True)
class RealSemigroupReport(PeriodicaStruct):
    literal:       bool
    "整数のずれの符号を問わない判定"
    signed:        bool
    "ずれが0以上であることを要求する判定"
    oracle:        bool
    "窓の中の和が全て集合に入るか"
    discrepancies: tuple[str, ...] = ()


class RealPart(Enum):
    KERNEL = 'Kernel'
    FREE   = 'Free'


@dataclass(slots=True, frozen=True)
class RealProjection(PeriodicaStruct):
    part:      RealPart
    generator: ExactReal
    shift:     int
    "x = generator + shift"


@dataclass(slots=True, frozen=True)
class ConcentrationReport(PeriodicaStruct):
    coc:          RayInterval
    boundary_ok:  bool
    "境界(開区間なら少し内側)のδ'で全ての標本点が集められる"
    below_fails:  Optional[bool]
    "境界のすぐ外のδ'では失敗する。Coc = ℝ なら None"
    samples:      int


@dataclass(slots=True, frozen=True)
class ImpossibilityReport(PeriodicaStruct):
    checked:        int
    "調べた標準形の(D, E)の組の数"
    third_class:    tuple[UnitPeriodicRealSet, ...]
    "見つかった第三類の半群。空であるはず"


__all__ = (
    'PointCell', 'IntervalCell', 'Cell', 'cell_from_json', 'intersects', 'meets_modulo_one', 'RayKind', 'RayInterval',
    'UnitPeriodicRealSet', 'DeltaKind', 'DeltaResult', 'RealClass', 'RealSemigroupReport', 'RealPart',
    'RealProjection', 'ConcentrationReport', 'ImpossibilityReport',
)
