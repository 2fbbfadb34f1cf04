"""
Cayley表で与えられる有限マグマと、その構造に関する問い合わせ
"""

from collections.abc import Callable
from dataclasses import dataclass, field
from importlib.resources import files
from itertools import product as cartesian
from typing import Any, Optional, TypeVar
import json
import logging
import os.path
import threading

import numpy as np
import numpy.typing as npt

from .subset import Subset, canonical_order
from ._util import (
    EmptyGenerator, InvalidTable, MagmaMismatch, NoSubgroup, NotAssociative, NotLeftFactor,
    NotLeftIdentity, NotLeftInvertible, NotLeftSubgroup,
)


_LOG = logging.getLogger(__name__)
PERIODICA_ROOT = str(files(__package__)) # type: ignore

_T = TypeVar('_T')


@dataclass(slots=True, frozen=True, eq=False)
class FiniteMagma:
    """
    添え字0..n-1の元の上の二項演算。`table[x][y]`がx·y。
    生成後は変更されず、スレッド間で共有できる。構造フラグは初回の問い合わせ時に一度だけ計算される。
    """

    table:  npt.NDArray[np.int64]
    labels: tuple[str, ...] = ()
    name:   str = ''

    _rows:  list[list[int]]         = field(init=False, repr=False)
    _bits:  list[list[int]]         = field(init=False, repr=False)
    _cache: dict[str, Any]          = field(init=False, repr=False, default_factory=dict)
    _lock:  threading.RLock         = field(init=False, repr=False, default_factory=threading.RLock)

    def __post_init__(self):
        table = np.array(self.table, dtype=np.int64)
        if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
            raise InvalidTable(f'Cayley表は空でない正方行列でなければなりません: {table.shape}')
        n = table.shape[0]
        if table.min() < 0 or table.max() >= n:
            raise InvalidTable(f'Cayley表の値は0以上{n}未満でなければなりません')
        table.setflags(write=False)
        object.__setattr__(self, 'table', table)

        labels = tuple(self.labels) if self.labels else tuple(str(i) for i in range(n))
        if len(labels) != n or len(set(labels)) != n:
            raise InvalidTable(f'ラベルは{n}個の相異なる文字列でなければなりません')
        object.__setattr__(self, 'labels', labels)

        rows = table.tolist()
        object.__setattr__(self, '_rows', rows)
        object.__setattr__(self, '_bits', [[1 << v for v in row] for row in rows])

    @property
    def n(self) -> int:
        return self.table.shape[0]

    def __len__(self) -> int:
        return self.n

    def __repr__(self):
        return f'FiniteMagma({self.name or "?"}, n={self.n})'

    def mul(self, x:int, y:int) -> int:
        return self._rows[x][y]

    def label(self, x:int) -> str:
        return self.labels[x]

    def index(self, label:str|int) -> int:
        if isinstance(label, int):
            if not 0 <= label < self.n:
                raise ValueError(f'添え字が範囲外です: {label}')
            return label
        try:
            return self.labels.index(label)
        except ValueError:
            raise ValueError(f'不明なラベルです: {label}') from None

    def subset(self, *items:str|int) -> Subset:
        "添え字かラベルの並びから部分集合を作る"
        return Subset.of(self.n, (self.index(i) for i in items))

    def full(self) -> Subset:
        return Subset.full(self.n)

    def empty(self) -> Subset:
        return Subset.empty(self.n)

    def element_labels(self, A:Subset) -> list[str]:
        return [self.labels[i] for i in A]

    def check(self, *subsets:Subset) -> None:
        for A in subsets:
            if A.n != self.n:
                raise MagmaMismatch(f'部分集合の台集合の大きさ{A.n}がマグマの大きさ{self.n}と異なります', magma=self.n, subset=A.n)

    def product(self, A:Subset, B:Subset) -> Subset:
        "AB = {ab : a∈A, b∈B}"
        self.check(A, B)
        acc = 0
        bs = list(B)
        if not bs:
            return Subset(self.n, 0)
        for a in A:
            row = self._bits[a]
            for b in bs:
                acc |= row[b]
        return Subset(self.n, acc)

    def left_orbit(self, B:Subset, y:int) -> Subset:
        "By"
        acc = 0
        for b in B:
            acc |= self._bits[b][y]
        return Subset(self.n, acc)

    def cached(self, key:str, compute:Callable[[], _T]) -> _T:
        with self._lock:
            if key not in self._cache:
                self._cache[key] = compute()
            return self._cache[key]

    def to_json(self) -> dict[str, Any]:
        obj: dict[str, Any] = {'n': self.n, 'table': self._rows}
        if self.labels != tuple(str(i) for i in range(self.n)):
            obj['labels'] = list(self.labels)
        return obj

    @classmethod
    def from_json(cls, obj:dict[str, Any], name:str='') -> 'FiniteMagma':
        if not isinstance(obj, dict) or 'table' not in obj:
            raise InvalidTable('Cayley表のJSONには"table"が必要です')
        table = obj['table']
        if 'n' in obj and (not isinstance(table, list) or len(table) != obj['n']):
            raise InvalidTable(f'"n"と"table"の行数が一致しません: {obj["n"]}')
        return cls(np.asarray(table), tuple(obj.get('labels') or ()), name)

    @classmethod
    def from_file(cls, path:str) -> 'FiniteMagma':
        """
        JSON形式のCayley表を読み込む。
        `path`が存在しなければ、同梱の`resources`フォルダから探す。
        """
        if not os.path.exists(path):
            path = os.path.join(PERIODICA_ROOT, 'resources', path)
        with open(path, encoding='UTF-8') as f:
            try:
                obj = json.load(f)
            except json.JSONDecodeError as error:
                raise InvalidTable(f'JSONとして読み込めません: {path}') from error
        return cls.from_json(obj, os.path.basename(path).rsplit('.', maxsplit=1)[0])


# ===== 構造フラグ =====

def is_associative(X:FiniteMagma) -> bool:
    def _compute():
        T = X.table
        left = T[T, :]                                        # (xy)z
        right = T[np.arange(X.n)[:, None, None], T[None, :, :]] # x(yz)
        return bool(np.array_equal(left, right))
    return X.cached('associative', _compute)

def require_associative(X:FiniteMagma) -> None:
    if not is_associative(X):
        raise NotAssociative(f'{X!r}は結合的ではありません')


def left_identities(X:FiniteMagma) -> Subset:
    def _compute():
        mask = np.all(X.table == np.arange(X.n), axis=1)
        return Subset.of(X.n, np.flatnonzero(mask).tolist())
    return X.cached('left_identities', _compute)

def right_identities(X:FiniteMagma) -> Subset:
    def _compute():
        mask = np.all(X.table == np.arange(X.n)[:, None], axis=0)
        return Subset.of(X.n, np.flatnonzero(mask).tolist())
    return X.cached('right_identities', _compute)

def identity(X:FiniteMagma) -> Optional[int]:
    "両側単位元。なければ`None`"
    return X.cached('identity', lambda: (left_identities(X) & right_identities(X)).min())

def require_left_identity(X:FiniteMagma, l:int) -> None:
    if l not in left_identities(X):
        raise NotLeftIdentity(f'{X.label(l)}は左単位元ではありません', element=l)


def idempotents(X:FiniteMagma) -> Subset:
    return X.cached('idempotents', lambda: Subset.of(X.n, (x for x in range(X.n) if X.mul(x, x) == x)))


def is_left_cancellative_over(X:FiniteMagma, B:Subset) -> bool:
    "bx₁ = bx₂ ⇒ x₁ = x₂ (b∈B)"
    X.check(B)
    return all(len(np.unique(X.table[b])) == X.n for b in B)

def is_right_cancellative_over(X:FiniteMagma, B:Subset) -> bool:
    X.check(B)
    return all(len(np.unique(X.table[:, b])) == X.n for b in B)


def is_group(X:FiniteMagma) -> bool:
    def _compute():
        e = identity(X)
        if e is None or not is_associative(X):
            return False
        T = X.table
        return bool(np.all(np.any((T == e) & (T.T == e), axis=1)))
    return X.cached('group', _compute)

def group_inverse(X:FiniteMagma, x:int) -> int:
    e = identity(X)
    for y in range(X.n):
        if X.mul(x, y) == e and X.mul(y, x) == e:
            return y
    raise ValueError(f'{X.label(x)}は逆元を持ちません')

def inverse_set(X:FiniteMagma, A:Subset) -> Subset:
    "群における元ごとの逆元の集合 A⁻¹"
    return Subset.of(X.n, (group_inverse(X, a) for a in A))


def units(X:FiniteMagma) -> Subset:
    "単位元をもつマグマの可逆元全体"
    e = identity(X)
    if e is None:
        return X.empty()
    return Subset.of(X.n, (x for x in range(X.n) if any(X.mul(x, y) == e and X.mul(y, x) == e for y in range(X.n))))


def group_identity(X:FiniteMagma, H:Subset) -> Optional[int]:
    """
    `H`が演算の制限で群になっているならその単位元を、そうでなければ`None`を返す。
    """
    X.check(H)
    members = list(H)
    if not members or not X.product(H, H) <= H:
        return None
    sub = X.table[np.ix_(members, members)]
    T = X.table
    if not np.array_equal(T[sub[:, :, None], np.asarray(members)[None, None, :]],
                          T[np.asarray(members)[:, None, None], sub[None, :, :]]):
        return None
    for e in members:
        if all(X.mul(e, h) == h and X.mul(h, e) == h for h in members):
            if all(any(X.mul(h, g) == e and X.mul(g, h) == e for g in members) for h in members):
                return e
            return None
    return None


# ===== 生成される部分構造 =====

def generate_subsemigroup(X:FiniteMagma, B:Subset) -> Subset:
    "⟨B⟩: Y ↦ Y ∪ YY の最小不動点"
    X.check(B)
    if not B:
        raise EmptyGenerator('空集合から部分半群は生成できません')
    require_associative(X)
    Y = frontier = B
    while frontier:
        new = (X.product(Y, frontier) | X.product(frontier, Y)) - Y
        Y = Y | new
        frontier = new
    return Y


def maximal_subgroup(X:FiniteMagma, e:int) -> Subset:
    "冪等元`e`を単位元にもつ最大の部分群"
    if X.mul(e, e) != e:
        raise ValueError(f'{X.label(e)}は冪等元ではありません')
    require_associative(X)
    local = [x for x in range(X.n) if X.mul(e, x) == x and X.mul(x, e) == x]
    return Subset.of(X.n, (x for x in local if any(X.mul(x, y) == e and X.mul(y, x) == e for y in local)))


def generate_subgroup(X:FiniteMagma, B:Subset) -> Subset:
    """
    ⟨⟨B⟩⟩。⟨B⟩が群でなければ、冪等元ごとの最大部分群のうち`B`を含むものから最小の部分群を探す。
    """
    generated = generate_subsemigroup(X, B)
    if group_identity(X, generated) is not None:
        return generated
    for e in idempotents(X):
        H = maximal_subgroup(X, e)
        if B <= H:
            candidate = generate_subsemigroup(X, B.add(e))
            _LOG.debug('冪等元%sの最大部分群の中で部分群を見つけました', X.label(e))
            return candidate
    raise NoSubgroup(f'{X.element_labels(B)}を含む部分群はありません')


# ===== 部分集合の逆元 =====

def inverses_of(X:FiniteMagma, B:Subset, l:int) -> list[Subset]:
    """
    ∀b∈B ∃y∈Y: yb = l を満たす極小な`Y`を全て、正準順序で返す。先頭が正準なB⁻¹。
    """
    X.check(B)
    require_left_identity(X, l)
    blist = list(B)
    candidates: list[list[int]] = []
    for b in blist:
        c = [beta for beta in range(X.n) if X.mul(beta, b) == l]
        if not c:
            raise NotLeftInvertible(f'{X.label(b)}は{X.label(l)}に関する左逆元を持ちません', b)
        candidates.append(c)

    found: set[int] = set()
    def _walk(i:int, chosen:int):
        if i == len(blist):
            found.add(chosen)
            return
        c = candidates[i]
        if any(chosen >> beta & 1 for beta in c):
            _walk(i + 1, chosen)
            return
        for beta in c:
            _walk(i + 1, chosen | 1 << beta)
    _walk(0, 0)

    def _covers(bits:int) -> bool:
        return all(any(bits >> beta & 1 for beta in c) for c in candidates)

    minimal = [Subset(X.n, bits) for bits in found
               if all(not _covers(bits & ~(1 << y)) for y in Subset(X.n, bits))]
    return canonical_order(minimal)

def canonical_inverse(X:FiniteMagma, B:Subset, l:int) -> Subset:
    return inverses_of(X, B, l)[0]


# ===== 左部分群・因子部分群 =====

def is_left_subgroup(X:FiniteMagma, H:Subset) -> bool:
    "H ≤_ℓ X: 制限で群になり、その単位元がXの左単位元"
    e = group_identity(X, H)
    return e is not None and e in left_identities(X)

def is_left_factor_subgroup(X:FiniteMagma, H:Subset) -> bool:
    "∀s: xs = s (x∈H) の解が1_Hだけ"
    e = group_identity(X, H)
    if e is None or e not in left_identities(X):
        raise NotLeftSubgroup(f'{X.element_labels(H)}は左部分群ではありません')
    return all(X.mul(x, s) != s for s in range(X.n) for x in H if x != e)


@dataclass(slots=True, frozen=True)
class FactorContext:
    """
    固定した左因子部分群𝓑、その単位元l、右横断集合𝓓の組。
    生成時に X = 𝓑·𝓓 が直積であることを確かめる。
    """
    carrier:        FiniteMagma
    subgroup:       Subset
    identity:       int
    transversal:    Subset
    is_left_factor: bool = True

    def __post_init__(self):
        X = self.carrier
        X.check(self.subgroup, self.transversal)
        if group_identity(X, self.subgroup) != self.identity:
            raise NotLeftFactor(f'{X.label(self.identity)}は{X.element_labels(self.subgroup)}の単位元ではありません')
        if self.identity not in left_identities(X):
            raise NotLeftFactor(f'{X.label(self.identity)}は左単位元ではありません')
        covered = X.product(self.subgroup, self.transversal)
        if len(covered) != X.n or len(self.subgroup) * len(self.transversal) != X.n:
            raise NotLeftFactor('𝓑·𝓓が台集合全体の直積になっていません', subgroup=len(self.subgroup), transversal=len(self.transversal))

    @classmethod
    def of(cls, X:FiniteMagma, subgroup:Subset, transversal:Subset) -> 'FactorContext':
        e = group_identity(X, subgroup)
        if e is None:
            raise NotLeftFactor(f'{X.element_labels(subgroup)}は群ではありません')
        return cls(X, subgroup, e, transversal)

    @property
    def nontrivial(self) -> Subset:
        "𝓑* = 𝓑∖{1_𝓑}"
        return self.subgroup - Subset.singleton(self.carrier.n, self.identity)

    def decompose(self, x:int) -> tuple[int, int]:
        "x = βd となる唯一の(β, d)"
        pairs = self.factor_pairs(x)
        if len(pairs) != 1:
            raise AssertionError(f'{x}の分解が一意ではありません: {pairs}')
        return pairs[0]

    def factor_pairs(self, x:int) -> list[tuple[int, int]]:
        X = self.carrier
        return [(beta, d) for beta, d in cartesian(self.subgroup, self.transversal) if X.mul(beta, d) == x]


def right_transversal(X:FiniteMagma, H:Subset) -> FactorContext:
    """
    添え字の順に走査し、H·𝓓にまだ含まれない元を𝓓に加えていく。同じ入力には同じ𝓓を返す。
    """
    try:
        factor = is_left_factor_subgroup(X, H)
    except NotLeftSubgroup as error:
        raise NotLeftFactor(error.error_msg) from error
    if not factor:
        raise NotLeftFactor(f'{X.element_labels(H)}は左因子部分群ではありません')

    e = group_identity(X, H)
    assert e is not None
    transversal = X.empty()
    covered = X.empty()
    for x in range(X.n):
        if x not in covered:
            transversal = transversal.add(x)
            covered = covered | X.product(H, Subset.singleton(X.n, x))
    _LOG.debug('右横断集合: %s', X.element_labels(transversal))
    return FactorContext(X, H, e, transversal)


def left_subgroups(X:FiniteMagma) -> list[Subset]:
    """
    全ての左部分群。冪等な左単位元ごとの最大部分群の部分群を、生成系から列挙する。
    """
    require_associative(X)
    result: set[Subset] = set()
    for l in left_identities(X):
        H = maximal_subgroup(X, l)
        frontier = [Subset.singleton(X.n, l)]
        seen = set(frontier)
        while frontier:
            nxt = []
            for G in frontier:
                for h in H - G:
                    K = generate_subsemigroup(X, G.add(h))
                    if K not in seen:
                        seen.add(K)
                        nxt.append(K)
            frontier = nxt
        result |= {G for G in seen if is_left_subgroup(X, G)}
    return canonical_order(result)


__all__ = (
    'FiniteMagma', 'FactorContext', 'is_associative', 'require_associative', 'left_identities', 'right_identities',
    'identity', 'require_left_identity', 'idempotents', 'is_left_cancellative_over', 'is_right_cancellative_over',
    'is_group', 'group_inverse', 'inverse_set', 'units', 'group_identity', 'generate_subsemigroup',
    'maximal_subgroup', 'generate_subgroup', 'inverses_of', 'canonical_inverse', 'is_left_subgroup',
    'is_left_factor_subgroup', 'right_transversal', 'left_subgroups',
)
