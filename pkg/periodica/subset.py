"""
マグマの元の添え字の部分集合(ビット集合)と、そのリテラル表記
"""

from collections.abc import Iterable, Iterator, Sequence, Set as AbstractSet
from typing import Optional
import json

from bitstring import Bits

from ._util import MagmaMismatch


class Subset(AbstractSet[int]):
    """
    `n`元のマグマの部分集合。`bits`の第iビットが元iの所属を表す。
    生成後は変更できない。
    """

    bits: int
    n:    int

    __slots__ = ('bits', 'n')

    def __init__(self, n:int, bits:int=0):
        if n < 0:
            raise ValueError(f'台集合の大きさが負です: {n}')
        if bits < 0 or bits >> n:
            raise ValueError(f'ビット列が台集合の大きさ{n}を超えています: {hex(bits)}')
        object.__setattr__(self, 'n', n)
        object.__setattr__(self, 'bits', bits)

    def __setattr__(self, name, value):
        raise AttributeError('Subsetは変更できません')

    @classmethod
    def of(cls, n:int, indices:Iterable[int]) -> 'Subset':
        bits = 0
        for i in indices:
            if not 0 <= i < n:
                raise ValueError(f'添え字が範囲外です: {i} (n={n})')
            bits |= 1 << i
        return cls(n, bits)

    @classmethod
    def empty(cls, n:int) -> 'Subset':
        return cls(n, 0)

    @classmethod
    def full(cls, n:int) -> 'Subset':
        return cls(n, (1 << n) - 1)

    @classmethod
    def singleton(cls, n:int, x:int) -> 'Subset':
        return cls.of(n, (x,))

    def __contains__(self, x) -> bool:
        return isinstance(x, int) and 0 <= x < self.n and bool(self.bits >> x & 1)

    def __iter__(self) -> Iterator[int]:
        bits = self.bits
        while bits:
            low = bits & -bits
            yield low.bit_length() - 1
            bits ^= low

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        return self.bits != 0

    def __hash__(self) -> int:
        return hash((self.n, self.bits))

    def __eq__(self, other) -> bool:
        if isinstance(other, Subset):
            return self.n == other.n and self.bits == other.bits
        if isinstance(other, AbstractSet):
            return set(self) == set(other)
        return NotImplemented

    def _same(self, other:'Subset') -> 'Subset':
        if not isinstance(other, Subset):
            raise TypeError(f'Subset同士でしか演算できません: {type(other).__name__}')
        if other.n != self.n:
            raise MagmaMismatch(f'異なる大きさのマグマの部分集合は混ぜられません: {self.n} と {other.n}', left=self.n, right=other.n)
        return other

    def __or__(self, other:'Subset') -> 'Subset':  # type: ignore[override]
        return Subset(self.n, self.bits | self._same(other).bits)

    def __and__(self, other:'Subset') -> 'Subset': # type: ignore[override]
        return Subset(self.n, self.bits & self._same(other).bits)

    def __sub__(self, other:'Subset') -> 'Subset': # type: ignore[override]
        return Subset(self.n, self.bits & ~self._same(other).bits)

    def __xor__(self, other:'Subset') -> 'Subset': # type: ignore[override]
        return Subset(self.n, self.bits ^ self._same(other).bits)

    def __le__(self, other:'Subset') -> bool:      # type: ignore[override]
        return self.bits & ~self._same(other).bits == 0

    def __lt__(self, other:'Subset') -> bool:      # type: ignore[override]
        return self <= other and self.bits != other.bits

    def __ge__(self, other:'Subset') -> bool:      # type: ignore[override]
        return self._same(other) <= self

    def __gt__(self, other:'Subset') -> bool:      # type: ignore[override]
        return self._same(other) < self

    def isdisjoint(self, other:'Subset') -> bool:  # type: ignore[override]
        return self.bits & self._same(other).bits == 0

    def complement(self) -> 'Subset':
        return Subset(self.n, ~self.bits & ((1 << self.n) - 1))

    __invert__ = complement

    def add(self, x:int) -> 'Subset':
        "`x`を加えた新しい部分集合"
        return Subset.of(self.n, (*self, x))

    def widen(self, n:int) -> 'Subset':
        "より大きい台集合(たとえばX¹)の部分集合として見る"
        if n < self.n:
            raise ValueError(f'台集合を縮めることはできません: {self.n} -> {n}')
        return Subset(n, self.bits)

    def key(self) -> tuple[int, tuple[int, ...]]:
        "正準順序(要素数、昇順の添え字列)のキー"
        return len(self), tuple(self)

    def min(self) -> Optional[int]:
        return (self.bits & -self.bits).bit_length() - 1 if self.bits else None

    def hex(self) -> str:
        return format_subset(self)

    def __repr__(self):
        return f'Subset({self.n}, {{{", ".join(map(str, self))}}})'


def canonical_order(subsets:Iterable[Subset]) -> list[Subset]:
    return sorted(subsets, key=Subset.key)


def _width(n:int) -> int:
    return max(4, -(-n // 4) * 4)

def format_subset(A:Subset) -> str:
    """
    16進のリテラル表記。元0が最下位ビットになる。
    例: {0,2,4} → "0x15"
    """
    return '0x' + Bits(uint=A.bits, length=_width(A.n)).hex.upper()


def parse_subset(text:str, n:int, labels:Optional[Sequence[str]]=None) -> Subset:
    """
    部分集合のリテラルを読み込む。
    `[0,2,4]`のような添え字のリスト(`labels`があればラベル名も可)か、`0x15`/`0b10101`のようなビット列を受け付ける。
    """
    text = text.strip()
    if text.startswith('['):
        try:
            items = json.loads(text)
        except json.JSONDecodeError as error:
            raise ValueError(f'部分集合のリテラルが読めません: {text}') from error
        indices = []
        for item in items:
            match item:
                case bool():
                    raise ValueError(f'部分集合の要素に真偽値は使えません: {text}')
                case int():
                    indices.append(item)
                case str() if labels is not None and item in labels:
                    indices.append(labels.index(item))
                case _:
                    raise ValueError(f'不明な要素です: {item!r}')
        return Subset.of(n, indices)

    if text[:2].lower() in ('0x', '0b'):
        try:
            bits = Bits(text[:2].lower() + text[2:]).uint if len(text) > 2 else 0
        except Exception as error:
            raise ValueError(f'ビット列のリテラルが読めません: {text}') from error
        if bits >> n:
            raise ValueError(f'ビット列が台集合の大きさ{n}を超えています: {text}')
        return Subset(n, bits)

    raise ValueError(f'部分集合のリテラルは [..] か 0x.. か 0b.. で書いてください: {text}')


__all__ = ('Subset', 'canonical_order', 'format_subset', 'parse_subset')
