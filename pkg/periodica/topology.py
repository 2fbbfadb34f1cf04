"""
上周期的部分集合がなすAlexandrov位相。位相は特殊化前順序 reach[y][x] ⇔ x ∈ ⟨B⟩¹y で持つ。
"""

from dataclasses import dataclass
from enum import Enum
from functools import cache
from typing import Optional
import logging

import numpy as np
import numpy.typing as npt

from .magma import (
    FiniteMagma, group_inverse, is_group, is_left_cancellative_over, require_associative,
)
from .periodic import all_subsets
from .solver import solve_sandwich
from .structs import PeriodicConditions, TopologicalGroupReport, TopologicalSemigroupReport
from .subset import Subset, canonical_order
from ._util import NotATopology, NotGroup, TooLarge, require_exhaustive


_LOG = logging.getLogger(__name__)
TRANSFER_CHECK_LIMIT = 16
CONDENSATION_LIMIT = 24


class TopologyKind(Enum):
    UPPER_PERIODIC = 'UpperPeriodic'
    "BA ⊆ A となる集合が開集合"
    PERIODIC       = 'Periodic'
    "BA = A となる集合が開集合"


@dataclass(slots=True, frozen=True, eq=False)
class AlexandrovTopology:
    carrier: FiniteMagma
    B:       Subset
    reach:   npt.NDArray[np.bool_]
    "reach[y][x]: xが最小近傍N(y)に属する"
    kind:    TopologyKind = TopologyKind.UPPER_PERIODIC

    def neighborhood(self, y:int) -> Subset:
        "N(y) = ⟨B⟩¹y"
        return Subset.of(self.carrier.n, np.flatnonzero(self.reach[y]).tolist())

    def neighborhoods(self) -> list[Subset]:
        return [self.neighborhood(y) for y in range(self.carrier.n)]


def _reach(X:FiniteMagma, B:Subset) -> npt.NDArray[np.bool_]:
    n = X.n
    reach = np.eye(n, dtype=bool)
    bs = list(B)
    if bs:
        step = np.zeros((n, n), dtype=bool)
        for b in bs:
            step[np.arange(n), X.table[b]] = True
        # 推移閉包
        while True:
            grown = reach | ((reach.astype(np.int64) @ step.astype(np.int64)) > 0)
            if np.array_equal(grown, reach):
                break
            reach = grown
    reach.setflags(write=False)
    return reach


def periodic_conditions(X:FiniteMagma, B:Subset) -> PeriodicConditions:
    """
    周期位相の前提条件を調べる。転移条件は台集合が小さいときだけ全ての部分集合で確かめる。
    """
    X.check(B)
    cancellative = is_left_cancellative_over(X, B)
    if X.n > TRANSFER_CHECK_LIMIT:
        _LOG.debug('台集合が大きいので転移条件は調べません: n=%d', X.n)
        return PeriodicConditions(cancellative, None, None)
    to_B = to_A = True
    for A in all_subsets(X.n, force=True):
        if X.product(B, A) != A:
            continue
        images = [X.product(Subset.singleton(X.n, b), A) for b in B]
        to_B = to_B and all(bA == B for bA in images)
        to_A = to_A and all(bA == A for bA in images)
        if not (to_B or to_A):
            break
    return PeriodicConditions(cancellative, to_B, to_A)


def build_topology(X:FiniteMagma, B:Subset, kind:TopologyKind=TopologyKind.UPPER_PERIODIC) -> AlexandrovTopology:
    """
    τ_{B-up}(X) を作る。`kind`が`PERIODIC`なら、左B簡約性と「BA = A ⇒ bA = A」を確かめてから τ_{B-p}(X) を作る。
    有限の台集合で左B簡約的なら、上B周期的な集合は全てB周期的なので、二つの前順序は一致する。
    """
    require_associative(X)
    X.check(B)
    if kind is TopologyKind.PERIODIC:
        if not B:
            raise NotATopology('Bが空なので台集合全体が開集合になりません', kind=kind.value, reason='empty_B')
        conditions = periodic_conditions(X, B)
        if not conditions.left_cancellative:
            raise NotATopology(f'{X!r}は左B簡約的ではありません', kind=kind.value, reason='not_left_cancellative')
        if conditions.transfer_to_A is False:
            raise NotATopology('BA = A ⇒ bA = A が成り立ちません', kind=kind.value, reason='transfer')
    return AlexandrovTopology(X, B, _reach(X, B), kind)


def _down_closed(T:AlexandrovTopology, A:Subset) -> bool:
    return all(T.neighborhood(y) <= A for y in A)

def is_open(T:AlexandrovTopology, A:Subset) -> bool:
    X = T.carrier
    X.check(A)
    BA = X.product(T.B, A)
    algebraic = BA == A if T.kind is TopologyKind.PERIODIC else BA <= A
    if algebraic != _down_closed(T, A):
        raise AssertionError(f'開集合の二つの判定が一致しません: {X.element_labels(A)}')
    return algebraic

def is_lower_open(T:AlexandrovTopology, A:Subset) -> bool:
    "A ⊆ BA"
    return A <= T.carrier.product(T.B, A)


def condensation(T:AlexandrovTopology) -> list[Subset]:
    "前順序の同値類。各類の最小の添え字の順"
    mutual = T.reach & T.reach.T
    classes: list[Subset] = []
    seen = 0
    for y in range(T.carrier.n):
        if not seen >> y & 1:
            C = Subset.of(T.carrier.n, np.flatnonzero(mutual[y]).tolist())
            classes.append(C)
            seen |= C.bits
    return classes


def count_opens(T:AlexandrovTopology) -> int:
    """
    開集合の個数。開集合は同値類の上で下に閉じた集合と一対一に対応するので、類の数で指数的に数える。
    """
    classes = condensation(T)
    k = len(classes)
    if k > CONDENSATION_LIMIT:
        raise TooLarge(f'前順序の同値類が{k}個あり、開集合を数えられません', size=k, limit=CONDENSATION_LIMIT)
    owner = {}
    for i, C in enumerate(classes):
        for y in C:
            owner[y] = i
    below = [0] * k
    above = [0] * k
    for i, C in enumerate(classes):
        y = C.min()
        for x in T.neighborhood(y): # type: ignore[arg-type]
            j = owner[x]
            below[i] |= 1 << j
            above[j] |= 1 << i

    @cache
    def _count(undecided:int) -> int:
        if not undecided:
            return 1
        c = (undecided & -undecided).bit_length() - 1
        return _count(undecided & ~above[c]) + _count(undecided & ~below[c])

    result = _count((1 << k) - 1)
    _LOG.debug('開集合の個数: %d (同値類%d個)', result, k)
    return result


def _one_shift(X:FiniteMagma, B:Subset, x:int) -> Subset:
    "B¹x = Bx ∪ {x}"
    return X.left_orbit(B, x).add(x)


def is_topological_semigroup(X:FiniteMagma, B:Subset) -> TopologicalSemigroupReport:
    """
    Bが左正規な部分半群なら (X, τ_{B-up}) は位相半群になる。
    前提とは独立に、最小近傍での連続性 N(x)N(y) ⊆ N(xy) と基底 B¹x での同じ条件も調べる。
    """
    require_associative(X)
    X.check(B)
    T = build_topology(X, B)
    subsemigroup = bool(B) and X.product(B, B) <= B
    left_normal = all(X.product(Subset.singleton(X.n, x), B) <= X.left_orbit(B, x) for x in range(X.n))
    N = T.neighborhoods()
    shifts = [_one_shift(X, B, x) for x in range(X.n)]
    minimal = all(X.product(N[x], N[y]) <= N[X.mul(x, y)] for x in range(X.n) for y in range(X.n))
    basis = all(X.product(shifts[x], shifts[y]) <= shifts[X.mul(x, y)] for x in range(X.n) for y in range(X.n))
    if subsemigroup and minimal != basis:
        raise AssertionError('最小近傍と基底による連続性の判定が一致しません')
    return TopologicalSemigroupReport(subsemigroup, left_normal, minimal, basis, minimal)


def is_topological_group(G:FiniteMagma, B:Subset) -> TopologicalGroupReport:
    """
    (G, τ_{B-up}) が位相群かどうか。Bが空でない部分半群なら B ⊴ G と同値になる。
    """
    if not is_group(G):
        raise NotGroup(f'{G!r}は群ではありません')
    semigroup = is_topological_semigroup(G, B)
    T = build_topology(G, B)
    N = T.neighborhoods()
    normal = semigroup.subsemigroup and all(
        G.product(Subset.singleton(G.n, g), B) == G.left_orbit(B, g) for g in range(G.n))
    inversion = all(group_inverse(G, x) in N[group_inverse(G, y)] for y in range(G.n) for x in N[y])
    topological = inversion and semigroup.continuity_minimal
    if semigroup.subsemigroup and semigroup.left_normal and topological != normal:
        raise AssertionError('位相群の判定が正規部分群の判定と一致しません')
    basis = tuple(canonical_order(set(N)))
    return TopologicalGroupReport(normal, inversion, semigroup.continuity_minimal, topological, basis)


def ideal_topology(X:FiniteMagma) -> AlexandrovTopology:
    "B = X とした位相。開集合は左イデアルと空集合"
    T = build_topology(X, X.full())
    for y, N in enumerate(T.neighborhoods()):
        if not X.product(X.full(), N) <= N:
            raise AssertionError(f'N({X.label(y)})が左イデアルになっていません')
    return T


def left_ideals(X:FiniteMagma, *, force:bool=False) -> list[Subset]:
    "XA ⊆ A となる集合(空集合を含む)を全て、正準順序で"
    require_exhaustive(X.n, '左イデアル', force=force)
    solutions = solve_sandwich(X, X.full(), X.full())
    if solutions.all is None:
        raise TooLarge(f'{X!r}の左イデアルは多すぎて列挙できません', size=X.n)
    return list(solutions.all)


def to_dot(T:AlexandrovTopology, name:Optional[str]=None) -> str:
    """
    前順序を生成する辺 y → by (b∈B, by ≠ y) をGraphvizのDOT形式で書き出す。
    """
    X = T.carrier
    lines = [f'digraph "{name or X.name or "tau"}" {{']
    for y in range(X.n):
        lines.append(f'  n{y} [label="{X.label(y)}"];')
    edges = sorted({(y, X.mul(b, y)) for y in range(X.n) for b in T.B if X.mul(b, y) != y})
    for y, x in edges:
        lines.append(f'  n{y} -> n{x};')
    lines.append('}')
    return '\n'.join(lines) + '\n'


def write_dot(T:AlexandrovTopology, path:str) -> None:
    with open(path, 'w', encoding='UTF-8') as f:
        f.write(to_dot(T))
    _LOG.info(f'{path} に前順序を出力しました')


__all__ = (
    'TopologyKind', 'AlexandrovTopology', 'periodic_conditions', 'build_topology', 'is_open', 'is_lower_open',
    'condensation', 'count_opens', 'is_topological_semigroup', 'is_topological_group', 'ideal_topology',
    'left_ideals', 'to_dot', 'write_dot',
)
