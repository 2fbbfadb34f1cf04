"""
冪半群の方程式・不等式 BY ⊆ A, BY ⊆ Y ⊆ A, BY = A, (𝔹D ∪ BY) ∪̇ Y = A を有限の台集合の上で解く
"""

from collections.abc import Iterator
from itertools import combinations
import logging

from .builders import cyclic, zn_multiplicative
from .magma import FiniteMagma, require_associative
from .periodic import summand, upper_periodic_kernel
from .structs import RingIdealReport, SolutionSet, SplitResult
from .subset import Subset, canonical_order
from ._util import SearchSpaceTooLarge, require_exhaustive


_LOG = logging.getLogger(__name__)
LIST_LIMIT = 20
EQUATION_LIMIT = 22
SPLIT_LIMIT = 20


def _powerset(A:Subset) -> Iterator[Subset]:
    "Aの部分集合を正準順序で"
    members = list(A)
    for k in range(len(members) + 1):
        for combo in combinations(members, k):
            yield Subset.of(A.n, combo)


def solve_upper(X:FiniteMagma, B:Subset, A:Subset) -> SolutionSet:
    "BY ⊆ A の解全体は Σ_{A|B} の冪集合"
    top = summand(X, A, B)
    listed = tuple(_powerset(top)) if len(top) <= LIST_LIMIT else None
    return SolutionSet(top, listed, 1 << len(top), lambda Y: X.product(B, Y) <= A)


def solve_upper_inside(X:FiniteMagma, B:Subset, A:Subset) -> SolutionSet:
    "Y ⊆ A の範囲で BY ⊆ A を解く。最大解は Σ_{A|B} ∩ A"
    top = summand(X, A, B) & A
    listed = tuple(_powerset(top)) if len(top) <= LIST_LIMIT else None
    return SolutionSet(top, listed, 1 << len(top), lambda Y: Y <= A and X.product(B, Y) <= A)


def _closures(X:FiniteMagma, B:Subset, top:Subset) -> dict[int, int]:
    "y ↦ ⟨B⟩¹y のビット列"
    reach = {}
    for y in top:
        seen = frontier = 1 << y
        while frontier:
            step = 0
            for z in Subset(X.n, frontier):
                step |= X.left_orbit(B, z).bits
            frontier = step & ~seen
            seen |= frontier
        reach[y] = seen
    return reach


def solve_sandwich(X:FiniteMagma, B:Subset, A:Subset) -> SolutionSet:
    """
    BY ⊆ Y ⊆ A。最大解は上周期核で、解は最大解の部分集合のうち上B周期的なもの。
    最大解が小さければ、各元を入れるか外すかの分岐で全て列挙する。
    """
    top = upper_periodic_kernel(X, A, B)
    accepts = lambda Y: Y <= A and X.product(B, Y) <= Y
    if len(top) > LIST_LIMIT:
        return SolutionSet(top, None, None, accepts)

    reach = _closures(X, B, top)
    order = list(top)
    above = {y: sum(1 << z for z in order if reach[z] >> y & 1) for y in order}
    found: list[Subset] = []

    def _walk(i:int, inside:int, outside:int):
        if i == len(order):
            found.append(Subset(X.n, inside))
            return
        y = order[i]
        if (inside | outside) >> y & 1:
            _walk(i + 1, inside, outside)
            return
        if reach[y] & outside == 0:
            _walk(i + 1, inside | reach[y], outside)
        if above[y] & inside == 0:
            _walk(i + 1, inside, outside | above[y])

    _walk(0, 0, 0)
    listed = tuple(canonical_order(found))
    return SolutionSet(top, listed, len(listed), accepts)


def solve_equation(X:FiniteMagma, B:Subset, A:Subset) -> list[Subset]:
    """
    BY = A の解を全て求める。解は必ずΣ_{A|B}に含まれるので、その中で被覆を探す。
    """
    sigma = summand(X, A, B)
    if len(sigma) > EQUATION_LIMIT:
        raise SearchSpaceTooLarge(f'|Σ| = {len(sigma)} は大きすぎます', size=len(sigma), limit=EQUATION_LIMIT)
    order = list(sigma)
    masks = [X.left_orbit(B, y).bits for y in order]
    suffix = [0] * (len(order) + 1)
    for i in range(len(order) - 1, -1, -1):
        suffix[i] = suffix[i + 1] | masks[i]
    target = A.bits
    found: list[Subset] = []

    def _walk(i:int, chosen:int, covered:int):
        if covered | suffix[i] != target:
            return
        if i == len(order):
            found.append(Subset(X.n, chosen))
            return
        _walk(i + 1, chosen | 1 << order[i], covered | masks[i])
        _walk(i + 1, chosen, covered)

    _walk(0, 0, 0)
    _LOG.debug('BY = A の解が%d個見つかりました', len(found))
    return canonical_order(found)


def solve_split(X:FiniteMagma, BB:Subset, B:Subset, D:Subset, A:Subset) -> SplitResult:
    """
    (𝔹D ∪ BY) ∪̇ Y = A の解を全て求め、一意かどうかを報告する。
    """
    require_associative(X)
    X.check(BB, B, D, A)
    if X.n > SPLIT_LIMIT:
        raise SearchSpaceTooLarge(f'|X| = {X.n} は大きすぎます', size=X.n, limit=SPLIT_LIMIT)
    BD = X.product(BB, D)
    order = [y for y in A - BD if X.left_orbit(B, y) <= A]
    masks = {y: X.left_orbit(B, y).bits for y in order}
    found: list[Subset] = []

    def _walk(i:int, chosen:int, image:int):
        if i == len(order):
            if (BD.bits | image | chosen) == A.bits and (BD.bits | image) & chosen == 0:
                found.append(Subset(X.n, chosen))
            return
        y = order[i]
        grown = image | masks[y]
        if not image >> y & 1 and grown & (chosen | 1 << y) == 0:
            _walk(i + 1, chosen | 1 << y, grown)
        _walk(i + 1, chosen, image)

    _walk(0, 0, 0)
    solutions = tuple(canonical_order(found))
    if len(solutions) > 1:
        _LOG.warning('分割方程式の解が一意ではありません(要確認): %s', [X.element_labels(Y) for Y in solutions])
    return SplitResult(solutions, len(solutions) == 1)


def ring_ideal_demo(n:int, *, force:bool=False) -> RingIdealReport:
    """
    ℤ_nで I + I ⊆ I, RI ⊆ I, IR ⊆ I (空でないI) を解き、古典的なイデアル dℤ_n と比べる。
    """
    require_exhaustive(n, f'ℤ_{n}の部分集合', force=force)
    add = cyclic(n)
    mul = zn_multiplicative(n)
    R = mul.full()
    solutions = [I for I in _powerset(R)
                 if I and add.product(I, I) <= I and mul.product(R, I) <= I and mul.product(I, R) <= I]
    classical = canonical_order({Subset.of(n, range(0, n, d)) for d in range(1, n + 1) if n % d == 0})
    solutions = canonical_order(solutions)
    return RingIdealReport(n, tuple(solutions), tuple(classical), solutions == classical)


__all__ = (
    'solve_upper', 'solve_upper_inside', 'solve_sandwich', 'solve_equation', 'solve_split', 'ring_ideal_demo',
)
