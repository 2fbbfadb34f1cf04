"""
平方根の有理係数一次結合 q0 + Σ q_m·√m による厳密な実数
"""

from collections.abc import Mapping
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import total_ordering
from typing import Any, Union
import logging
import math
import re
import threading

from mpmath.ctx_iv import MPIntervalContext

from .._util import PrecisionExhausted, ZeroModulus


_LOG = logging.getLogger(__name__)

START_PREC = 64
MAX_PREC = 1 << 16

Rational = Union[int, Fraction]


def _squarefree(m:int) -> tuple[int, int]:
    "m = s²·r (rは平方因子をもたない) となる(s, r)"
    s, r = 1, m
    f = 2
    while f * f <= r:
        while r % (f * f) == 0:
            r //= f * f
            s *= f
        f += 1
    return s, r


@total_ordering
@dataclass(slots=True, frozen=True, eq=False)
class ExactReal:
    """
    q0 + Σ q_m·√m。生成時に√mの平方因子をくくり出し、係数0の項を除いて標準形にする。
    √mたちは有理数上一次独立なので、標準形が等しいことと値が等しいことは同値。
    """

    q0:    Fraction = Fraction(0)
    terms: tuple[tuple[int, Fraction], ...] = ()
    "(m, q_m) の並び。mは2以上で平方因子をもたず、昇順"

    def __post_init__(self):
        q0 = Fraction(self.q0)
        raw: dict[int, Fraction] = {}
        items = self.terms.items() if isinstance(self.terms, Mapping) else self.terms
        for m, q in items:
            m = int(m)
            if m < 0:
                raise ValueError(f'負の数の平方根は扱えません: {m}')
            if m == 0:
                continue
            s, r = _squarefree(m)
            q = Fraction(q) * s
            if r == 1:
                q0 += q
            else:
                raw[r] = raw.get(r, Fraction(0)) + q
        object.__setattr__(self, 'q0', q0)
        object.__setattr__(self, 'terms', tuple(sorted((m, q) for m, q in raw.items() if q)))

    @classmethod
    def coerce(cls, value:'ExactReal|Rational') -> 'ExactReal':
        match value:
            case ExactReal():
                return value
            case bool():
                raise TypeError('真偽値は実数として扱えません')
            case int() | Fraction():
                return cls(Fraction(value))
            case _:
                raise TypeError(f'ExactRealに変換できません: {type(value).__name__}')

    @classmethod
    def sqrt(cls, m:int) -> 'ExactReal':
        return cls(Fraction(0), ((m, Fraction(1)),))

    @property
    def is_rational(self) -> bool:
        return not self.terms

    # ===== 演算 =====

    def __add__(self, other:'ExactReal|Rational') -> 'ExactReal':
        other = ExactReal.coerce(other)
        terms = dict(self.terms)
        for m, q in other.terms:
            terms[m] = terms.get(m, Fraction(0)) + q
        return ExactReal(self.q0 + other.q0, tuple(terms.items()))

    __radd__ = __add__

    def __neg__(self) -> 'ExactReal':
        return ExactReal(-self.q0, tuple((m, -q) for m, q in self.terms))

    def __abs__(self) -> 'ExactReal':
        return -self if self.sign() < 0 else self

    def __sub__(self, other:'ExactReal|Rational') -> 'ExactReal':
        return self + -ExactReal.coerce(other)

    def __rsub__(self, other:'ExactReal|Rational') -> 'ExactReal':
        return ExactReal.coerce(other) - self

    def __mul__(self, other:'ExactReal|Rational') -> 'ExactReal':
        other = ExactReal.coerce(other)
        left = [(1, self.q0), *self.terms]
        right = [(1, other.q0), *other.terms]
        terms: list[tuple[int, Fraction]] = [(m * n, p * q) for m, p in left for n, q in right if p and q]
        return ExactReal(Fraction(0), tuple(terms))

    __rmul__ = __mul__

    def __truediv__(self, other:Rational) -> 'ExactReal':
        if isinstance(other, ExactReal):
            if not other.is_rational:
                raise TypeError('無理数での割り算には対応していません')
            other = other.q0
        if other == 0:
            raise ZeroDivisionError('0で割ることはできません')
        return self * (1 / Fraction(other))

    # ===== 比較 =====

    def sign(self) -> int:
        """
        符号。無理数部分があれば、区間演算の精度を倍々に上げて0を含まない区間が得られるまで評価する。
        値が0になるのは標準形が0のときだけ。MAX_PREC を超えたら PrecisionExhausted。
        """
        if not self.terms:
            return (self.q0 > 0) - (self.q0 < 0)
        ctx = _context()
        prec = START_PREC
        while prec <= MAX_PREC:
            ctx.prec = prec
            v = ctx.mpf(self.q0.numerator) / self.q0.denominator
            for m, q in self.terms:
                v += ctx.mpf(q.numerator) / q.denominator * ctx.sqrt(m)
            if v.a > 0:
                return 1
            if v.b < 0:
                return -1
            _LOG.debug('符号が決まらないので精度を上げます: %d -> %d', prec, prec * 2)
            prec *= 2
        raise PrecisionExhausted(f'{self}の符号が決まりません', value=str(self), precision=MAX_PREC)

    def __eq__(self, other) -> bool:
        try:
            other = ExactReal.coerce(other)
        except TypeError:
            return NotImplemented
        return self.q0 == other.q0 and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.q0, self.terms))

    def __lt__(self, other:'ExactReal|Rational') -> bool:
        return (self - ExactReal.coerce(other)).sign() < 0

    def __float__(self) -> float:
        return float(self.q0) + sum(float(q) * math.sqrt(m) for m, q in self.terms)

    def floor(self) -> int:
        if self.is_rational:
            return math.floor(self.q0)
        k = math.floor(float(self))
        while (self - k).sign() < 0:
            k -= 1
        while (self - (k + 1)).sign() >= 0:
            k += 1
        return k

    def frac(self) -> 'ExactReal':
        "{x} = x − ⌊x⌋ ∈ [0, 1)"
        return self - self.floor()

    # ===== 表記 =====

    def __str__(self):
        parts = []
        if self.q0 or not self.terms:
            parts.append(str(self.q0))
        for m, q in self.terms:
            coef = '' if q == 1 else '-' if q == -1 else f'{q}*'
            parts.append(f'{coef}sqrt({m})')
        text = ' + '.join(parts)
        return text.replace('+ -', '- ')

    def __repr__(self):
        return f'ExactReal({self})'

    def to_json(self) -> str:
        return str(self)

    def to_num(self) -> dict[str, Any]:
        "集合ファイル用の {\"q\": \"p/q\", \"roots\": {...}} 形式"
        num: dict[str, Any] = {'q': str(self.q0)}
        if self.terms:
            num['roots'] = {str(m): str(q) for m, q in self.terms}
        return num

    @classmethod
    def parse(cls, text:str) -> 'ExactReal':
        """
        `3/2`, `sqrt(2)`, `1 - sqrt(3)/2`, `1/2*sqrt(5)`, `0.25` のような式を読み込む。
        """
        source = text
        text = text.replace('√', 'sqrt').replace(' ', '')
        if not text:
            raise ValueError('空の式は読み込めません')
        if text[0] not in '+-':
            text = '+' + text
        result = cls()
        pos = 0
        for match in _TERM.finditer(text):
            if match.start() != pos:
                break
            pos = match.end()
            coef = Fraction(match['c']) if match['c'] else Fraction(1)
            if match['d']:
                coef /= int(match['d'])
            if match['sign'] == '-':
                coef = -coef
            if match['m'] is None:
                if not match['c']:
                    raise ValueError(f'式が読めません: {source}')
                result += coef
            else:
                result += cls(Fraction(0), ((int(match['m']), coef),))
        if pos != len(text):
            raise ValueError(f'式が読めません: {source}')
        return result

    @classmethod
    def from_json(cls, obj:Any) -> 'ExactReal':
        "数値、文字列の式、または {\"q\": \"p/q\", \"roots\": {\"2\": \"p/q\"}} を受け付ける"
        match obj:
            case bool():
                raise ValueError('真偽値は実数として読めません')
            case int():
                return cls(Fraction(obj))
            case float():
                return cls(Fraction(obj).limit_denominator(10**12))
            case str():
                return cls.parse(obj)
            case {'q': q, **rest}:
                roots = rest.get('roots') or {}
                return cls(Fraction(str(q)), tuple((int(m), Fraction(str(v))) for m, v in roots.items()))
            case _:
                raise ValueError(f'実数として読めません: {obj!r}')


_TERM = re.compile(
    r'(?P<sign>[+-])'
    r'(?:(?P<c>\d+(?:\.\d+)?(?:/\d+)?|\.\d+)\*?)?'
    r'(?:sqrt\(?(?P<m>\d+)\)?)?'
    r'(?:/(?P<d>\d+))?'
)

_LOCAL = threading.local()

def _context() -> MPIntervalContext:
    "スレッドごとの区間演算コンテキスト。精度の変更が他のスレッドに影響しない"
    ctx = getattr(_LOCAL, 'ctx', None)
    if ctx is None:
        ctx = _LOCAL.ctx = MPIntervalContext()
    return ctx


class Ordering(Enum):
    LT = 'LT'
    EQ = 'EQ'
    GT = 'GT'


def exact_compare(x:ExactReal|Rational, y:ExactReal|Rational) -> Ordering:
    x, y = ExactReal.coerce(x), ExactReal.coerce(y)
    if x == y:
        return Ordering.EQ
    return Ordering.LT if (x - y).sign() < 0 else Ordering.GT


def _modulus(b:Rational) -> Fraction:
    if isinstance(b, ExactReal):
        if not b.is_rational:
            raise TypeError('無理数の法には対応していません')
        b = b.q0
    b = Fraction(b)
    if b == 0:
        raise ZeroModulus('法bは0であってはなりません')
    return b

def floor_b(x:ExactReal|Rational, b:Rational=1) -> ExactReal:
    "⌊x⌋_b = b·⌊x/b⌋"
    b = _modulus(b)
    x = ExactReal.coerce(x)
    return ExactReal(b * (x * (1 / b)).floor())

def frac_b(x:ExactReal|Rational, b:Rational=1) -> ExactReal:
    "{x}_b = x − ⌊x⌋_b"
    x = ExactReal.coerce(x)
    return x - floor_b(x, b)


__all__ = ('ExactReal', 'Ordering', 'exact_compare', 'floor_b', 'frac_b')
