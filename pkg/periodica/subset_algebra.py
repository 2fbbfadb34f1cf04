"""
冪マグマにおける部分集合の演算: 積、単位元の付加、直積性、反転移性、対称性、群の因数分解の探索
"""

from collections import defaultdict
from collections.abc import Iterator
from concurrent.futures import ThreadPoolExecutor
from enum import Enum
from itertools import combinations, islice
from typing import Optional
import logging

from .magma import (
    FiniteMagma, canonical_inverse, identity, inverse_set, is_group, left_identities,
    require_left_identity,
)
from .builders import with_identity
from .subset import Subset
from ._util import BadFactorization, NotFound, NotGroup, SearchSpaceTooLarge


_LOG = logging.getLogger(__name__)
FACTORIZATION_MAX_ORDER = 64


def product(X:FiniteMagma, A:Subset, B:Subset) -> Subset:
    return X.product(A, B)


def adjoin_identity(X:FiniteMagma, B:Subset, l:Optional[int]=None) -> Subset:
    """
    B¹ = B ∪ {l}。
    `l`を省略すると最小の左単位元を使う。左単位元がなければX¹の部分集合(添え字nが付加した単位元)を返す。
    """
    X.check(B)
    if l is not None:
        require_left_identity(X, l)
        return B.add(l)
    lefts = left_identities(X)
    if lefts:
        return B.add(lefts.min()) # type: ignore[arg-type]
    _LOG.debug('%rに左単位元がないのでX¹で計算します', X)
    return B.widen(X.n + 1).add(X.n)

def identity_extension(X:FiniteMagma, B:Subset, l:Optional[int]=None) -> tuple[FiniteMagma, Subset]:
    "`adjoin_identity`の結果を、それが属するマグマと組にして返す"
    B1 = adjoin_identity(X, B, l)
    return (X if B1.n == X.n else with_identity(X)), B1


def is_direct(X:FiniteMagma, A:Subset, B:Subset) -> bool:
    "|AB| = |A||B|"
    return len(X.product(A, B)) == len(A) * len(B)

def direct_witnesses(X:FiniteMagma, A:Subset, B:Subset) -> dict[int, list[tuple[int, int]]]:
    "二通り以上に分解される元と、その分解の一覧"
    X.check(A, B)
    pairs: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for a in A:
        for b in B:
            pairs[X.mul(a, b)].append((a, b))
    return {x: p for x, p in sorted(pairs.items()) if len(p) > 1}

def is_direct_by_quotients(G:FiniteMagma, A:Subset, B:Subset) -> bool:
    "群において A⁻¹A ∩ BB⁻¹ = {1}"
    if not is_group(G):
        raise NotGroup(f'{G!r}は群ではありません')
    if not A or not B:
        return True
    left = G.product(inverse_set(G, A), A)
    right = G.product(B, inverse_set(G, B))
    return left & right == Subset.singleton(G.n, identity(G)) # type: ignore[arg-type]


def is_anti_left_transference(X:FiniteMagma, A:Subset, B:Subset) -> bool:
    "A ∩ BA = ∅"
    return A.isdisjoint(X.product(B, A))


class SymmetryKind(Enum):
    SYMMETRIC      = 'Symmetric'
    ANTI_SYMMETRIC = 'AntiSymmetric'
    NEITHER        = 'Neither'

def symmetry_kind(X:FiniteMagma, B:Subset, l:int) -> SymmetryKind:
    inv = canonical_inverse(X, B, l)
    if B == inv:
        return SymmetryKind.SYMMETRIC
    if B.isdisjoint(inv):
        return SymmetryKind.ANTI_SYMMETRIC
    return SymmetryKind.NEITHER


# ===== 因数分解の探索 =====

def _cover(G:FiniteMagma, B:Subset, a:int, start:Optional[int]) -> Optional[Subset]:
    """
    左移動 xB (x∈A) で Gを重なりなく覆う`a`個のxを探す。`start`が与えられればそれをAに含める。
    """
    n = G.n
    full = (1 << n) - 1
    masks = [G.product(Subset.singleton(n, x), B).bits for x in range(n)]
    containing = [[x for x in range(n) if masks[x] >> g & 1] for g in range(n)]

    def _walk(chosen:list[int], covered:int) -> Optional[list[int]]:
        if len(chosen) == a:
            return chosen if covered == full else None
        uncovered = ~covered & full
        g = (uncovered & -uncovered).bit_length() - 1
        for x in containing[g]:
            if masks[x] & covered == 0:
                found = _walk(chosen + [x], covered | masks[x])
                if found is not None:
                    return found
        return None

    found = _walk([start], masks[start]) if start is not None else _walk([], 0)
    return Subset.of(n, found) if found is not None else None


def _candidates(G:FiniteMagma, b:int, normalized:bool) -> Iterator[Subset]:
    e = identity(G)
    if normalized:
        others = [x for x in range(G.n) if x != e]
        for combo in combinations(others, b - 1):
            yield Subset.of(G.n, (e, *combo)) # type: ignore[arg-type]
    else:
        for combo in combinations(range(G.n), b):
            yield Subset.of(G.n, combo)


def _search_chunk(G:FiniteMagma, chunk:list[Subset], a:int, start:Optional[int]) -> Optional[tuple[Subset, Subset]]:
    for B in chunk:
        A = _cover(G, B, a, start)
        if A is not None:
            return A, B
    return None


def search_factorization(G:FiniteMagma, a:int, b:int, *, workers:int=1, chunk_size:int=256) -> tuple[Subset, Subset]:
    """
    |A| = a, |B| = b, AB = G となる(A, B)を探す。
    まず1∈A, 1∈Bに正規化して探し、見つからなければ正規化せずに探す。
    並列に探しても、候補の順序で最初に見つかったものを返す。
    """
    if not is_group(G):
        raise NotGroup(f'{G!r}は群ではありません')
    if a * b != G.n or a < 1 or b < 1:
        raise BadFactorization(f'{a}·{b}が群の位数{G.n}と一致しません', a=a, b=b, order=G.n)
    if G.n > FACTORIZATION_MAX_ORDER:
        raise SearchSpaceTooLarge(f'位数{G.n}の群の因数分解は探索しません', order=G.n)

    for normalized in (True, False):
        start = identity(G) if normalized else None
        candidates = _candidates(G, b, normalized)
        with ThreadPoolExecutor(max_workers=max(1, workers), thread_name_prefix='Factorization') as executor:
            while True:
                chunks = [list(islice(candidates, chunk_size)) for _ in range(max(1, workers))]
                chunks = [c for c in chunks if c]
                if not chunks:
                    break
                for found in executor.map(lambda c: _search_chunk(G, c, a, start), chunks):
                    if found is not None:
                        _LOG.debug('因数分解が見つかりました (正規化=%s): %s', normalized, found)
                        return found
        if normalized:
            _LOG.debug('正規化した探索では見つからなかったので、正規化せずに探します')

    _LOG.error('群%rの因数分解 %d·%d が見つかりませんでした', G, a, b)
    raise NotFound(f'|A| = {a}, |B| = {b} の因数分解が見つかりませんでした', order=G.n, a=a, b=b)


def divisor_pairs(n:int) -> list[tuple[int, int]]:
    return [(a, n // a) for a in range(1, n + 1) if n % a == 0]


__all__ = (
    'product', 'adjoin_identity', 'identity_extension', 'is_direct', 'direct_witnesses', 'is_direct_by_quotients',
    'is_anti_left_transference', 'SymmetryKind', 'symmetry_kind', 'search_factorization', 'divisor_pairs',
)
