"""
例として使うマグマを組み立てる関数群
"""

from itertools import permutations, product
import logging
import re
import string

import numpy as np

from .magma import FiniteMagma


_LOG = logging.getLogger(__name__)


def cyclic(n:int) -> FiniteMagma:
    "(ℤ_n, +)"
    if n < 1:
        raise ValueError(f'位数は1以上でなければなりません: {n}')
    i = np.arange(n)
    return FiniteMagma((i[:, None] + i[None, :]) % n, name=f'Z{n}')


def zn_multiplicative(n:int) -> FiniteMagma:
    "(ℤ_n, ·)"
    if n < 1:
        raise ValueError(f'法は1以上でなければなりません: {n}')
    i = np.arange(n)
    return FiniteMagma((i[:, None] * i[None, :]) % n, name=f'Zmul{n}')


def _letters(n:int) -> tuple[str, ...]:
    return tuple(string.ascii_lowercase[:n]) if n <= 26 else ()

def left_zero(n:int) -> FiniteMagma:
    "x·y = x"
    return FiniteMagma(np.repeat(np.arange(n)[:, None], n, axis=1), _letters(n), f'L{n}')

def right_zero(n:int) -> FiniteMagma:
    "x·y = y"
    return FiniteMagma(np.repeat(np.arange(n)[None, :], n, axis=0), _letters(n), f'R{n}')


def _compose_table(maps:list[tuple[int, ...]]) -> np.ndarray:
    index = {f: i for i, f in enumerate(maps)}
    return np.array([[index[tuple(f[t] for t in g)] for g in maps] for f in maps])

def function_monoid(k:int) -> FiniteMagma:
    """
    k点集合上の写像全体が合成 (f·g)(t) = f(g(t)) でなす単系。
    全単射を先に、残りを値の辞書式順に並べる。k = 2 のときは e, s, c1, c2 と名付ける。
    """
    if not 1 <= k <= 4:
        raise ValueError(f'function_monoidはk ≤ 4まで対応しています: {k}')
    bijections = list(permutations(range(k)))
    others = [f for f in product(range(k), repeat=k) if len(set(f)) < k]
    maps = bijections + others
    if k == 2:
        labels: tuple[str, ...] = ('e', 's', 'c1', 'c2')
    else:
        labels = tuple('e' if f == tuple(range(k)) else ''.join(str(v + 1) for v in f) for f in maps)
    return FiniteMagma(_compose_table(maps), labels, f'F{k}' if k != 2 else 'M2')


def _cycle_label(p:tuple[int, ...]) -> str:
    seen = set()
    cycles = []
    for start in range(len(p)):
        if start in seen or p[start] == start:
            continue
        cycle = [start]
        seen.add(start)
        x = p[start]
        while x != start:
            cycle.append(x)
            seen.add(x)
            x = p[x]
        cycles.append('(' + ''.join(str(c + 1) for c in cycle) + ')')
    return ''.join(cycles) or 'e'

def symmetric(k:int) -> FiniteMagma:
    "k次対称群。積は写像の合成で、ラベルは巡回置換表記"
    if not 1 <= k <= 5:
        raise ValueError(f'symmetricはk ≤ 5まで対応しています: {k}')
    perms = list(permutations(range(k)))
    return FiniteMagma(_compose_table(perms), tuple(_cycle_label(p) for p in perms), f'S{k}')


def dihedral(n:int) -> FiniteMagma:
    """
    位数2nの二面体群。元はr^i (添え字i)とs·r^i (添え字n+i)。
    """
    if n < 1:
        raise ValueError(f'nは1以上でなければなりません: {n}')
    def _mul(x:int, y:int) -> int:
        xs, xi = divmod(x, n)
        ys, yi = divmod(y, n)
        sign = -1 if ys else 1
        return ((xs + ys) % 2) * n + (sign * xi + yi) % n
    table = [[_mul(x, y) for y in range(2 * n)] for x in range(2 * n)]
    labels = tuple(f'r{i}' for i in range(n)) + tuple(f's{i}' for i in range(n))
    return FiniteMagma(np.array(table), labels, f'D{n}')


def direct_product(X:FiniteMagma, Y:FiniteMagma) -> FiniteMagma:
    "成分ごとの積。(x, y)の添え字は x·|Y| + y"
    m = Y.n
    idx = np.arange(X.n * m)
    i, j = idx // m, idx % m
    table = X.table[i[:, None], i[None, :]] * m + Y.table[j[:, None], j[None, :]]
    labels = tuple(f'({a},{b})' for a in X.labels for b in Y.labels)
    return FiniteMagma(table, labels, f'{X.name}x{Y.name}')


def with_identity(X:FiniteMagma) -> FiniteMagma:
    """
    X¹: 新しい両側単位元を末尾に付け加えたマグマ。
    """
    n = X.n
    table = np.empty((n + 1, n + 1), dtype=np.int64)
    table[:n, :n] = X.table
    table[n, :] = np.arange(n + 1)
    table[:, n] = np.arange(n + 1)
    label = '1' if '1' not in X.labels else '1adj'
    return FiniteMagma(table, X.labels + (label,), f'{X.name}^1')


_NAMED = re.compile(r'^(?P<kind>[A-Za-z_]+?)[:]?(?P<arg>\d+)$')
_KINDS = {
    'cyclic': cyclic, 'z': cyclic,
    'zmul': zn_multiplicative,
    'left_zero': left_zero, 'l': left_zero,
    'right_zero': right_zero, 'r': right_zero,
    'function_monoid': function_monoid, 'f': function_monoid,
    'symmetric': symmetric, 's': symmetric,
    'dihedral': dihedral, 'd': dihedral,
}

def by_name(spec:str) -> FiniteMagma:
    """
    `Z6`, `cyclic:6`, `M2`, `F3`, `S3`, `D4`, `L2^1`, `Z2xZ4`のような名前からマグマを組み立てる。
    """
    spec = spec.strip()
    if spec.endswith('^1'):
        return with_identity(by_name(spec[:-2]))
    if 'x' in spec and not spec.startswith('zmul'):
        parts = spec.split('x')
        result = by_name(parts[0])
        for part in parts[1:]:
            result = direct_product(result, by_name(part))
        return result
    if spec == 'M2':
        return function_monoid(2)
    match = _NAMED.match(spec)
    if not match or match['kind'].lower() not in _KINDS:
        raise ValueError(f'不明なマグマの名前です: {spec}')
    return _KINDS[match['kind'].lower()](int(match['arg']))


def builder_groups(max_order:int) -> list[FiniteMagma]:
    """
    位数`max_order`以下の、組み立て関数で作れる群の一覧
    """
    names = [f'Z{n}' for n in range(1, max_order + 1)]
    names += [f'D{n}' for n in range(2, max_order // 2 + 1)]
    names += ['S3', 'S4', 'Z2xZ2', 'Z2xZ4', 'Z3xZ3', 'Z2xZ2xZ2', 'Z2xZ6', 'Z4xZ4', 'Z2xZ8', 'Z2xZ2xZ4', 'Z2xZ2xZ2xZ2', 'Z2xD4']
    groups = []
    for name in names:
        G = by_name(name)
        if G.n <= max_order:
            groups.append(G)
    return groups


__all__ = (
    'cyclic', 'zn_multiplicative', 'left_zero', 'right_zero', 'function_monoid', 'symmetric', 'dihedral',
    'direct_product', 'with_identity', 'by_name', 'builder_groups',
)
