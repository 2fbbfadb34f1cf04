"""
周期性の判定と、周期核・上周期核・始集合・和因子集合などの演算子
"""

from collections.abc import Callable, Iterator
from typing import Optional
import logging

from .magma import FiniteMagma, canonical_inverse, inverses_of, is_left_subgroup, left_identities
from .structs import KernelTrace, PeriodicClass, PeriodicTag, ThreeParts, WellStartedReport
from .subset import Subset
from ._util import NotLeftInvertible, NotLeftSubgroup, NotUpperPeriodic, PreconditionFailed, require_exhaustive


_LOG = logging.getLogger(__name__)


def is_left_upper_periodic(X:FiniteMagma, A:Subset, B:Subset) -> bool:
    "BA ⊆ A"
    return X.product(B, A) <= A

def is_left_lower_periodic(X:FiniteMagma, A:Subset, B:Subset) -> bool:
    "A ⊆ BA"
    return A <= X.product(B, A)

def is_left_periodic(X:FiniteMagma, A:Subset, B:Subset) -> bool:
    "BA = A"
    return X.product(B, A) == A


def _greatest_fixpoint(X:FiniteMagma, A:Subset, step:Callable[[Subset], Subset]) -> KernelTrace:
    Y = A
    iterations = 0
    while True:
        Z = step(Y)
        if Z == Y:
            _LOG.debug('不動点に到達しました: %d回', iterations)
            return KernelTrace(Y, iterations)
        Y = Z
        iterations += 1


def periodic_kernel_trace(X:FiniteMagma, A:Subset, B:Subset) -> KernelTrace:
    """
    T(Y) = {y ∈ Y : By ⊆ Y, y ∈ BY} の最大不動点をAから下向きの反復で求める。
    """
    X.check(A, B)
    def _step(Y:Subset) -> Subset:
        BY = X.product(B, Y)
        return Subset.of(X.n, (y for y in Y if y in BY and X.left_orbit(B, y) <= Y))
    return _greatest_fixpoint(X, A, _step)

def periodic_kernel(X:FiniteMagma, A:Subset, B:Subset) -> Subset:
    "Aに含まれる最大のB周期的部分集合"
    return periodic_kernel_trace(X, A, B).kernel


def upper_periodic_kernel_trace(X:FiniteMagma, A:Subset, B:Subset) -> KernelTrace:
    X.check(A, B)
    def _step(Y:Subset) -> Subset:
        return Subset.of(X.n, (y for y in Y if X.left_orbit(B, y) <= Y))
    return _greatest_fixpoint(X, A, _step)

def upper_periodic_kernel(X:FiniteMagma, A:Subset, B:Subset) -> Subset:
    "Aに含まれる最大の上B周期的部分集合"
    return upper_periodic_kernel_trace(X, A, B).kernel


def summand(X:FiniteMagma, A:Subset, B:Subset) -> Subset:
    "Σ_{A|B} = {x ∈ X : Bx ⊆ A}"
    X.check(A, B)
    return Subset.of(X.n, (x for x in range(X.n) if X.left_orbit(B, x) <= A))

def summand_closed_form(X:FiniteMagma, A:Subset, B:Subset) -> Subset:
    "Bが左部分群のとき (B·A^c)^c"
    X.check(A, B)
    if not is_left_subgroup(X, B):
        raise NotLeftSubgroup(f'{X.element_labels(B)}は左部分群ではありません')
    return X.product(B, A.complement()).complement()


def start(X:FiniteMagma, A:Subset, B:Subset) -> Subset:
    "St_B(A) = A ∖ BA"
    return A - X.product(B, A)


def classify(X:FiniteMagma, A:Subset, B:Subset) -> PeriodicClass:
    kernel = periodic_kernel(X, A, B)
    free_part = A - kernel
    if periodic_kernel(X, free_part, B):
        raise AssertionError('周期自由部分の周期核が空になっていません')
    if kernel == A:
        tag = PeriodicTag.PERIODIC
    elif not kernel:
        tag = PeriodicTag.PERIODIC_FREE
    else:
        tag = PeriodicTag.MIXED
    return PeriodicClass(tag, kernel, free_part)


def well_started_report(X:FiniteMagma, A:Subset, BB:Subset, B:Subset) -> WellStartedReport:
    """
    BA ∖ K ⊆ B·St_B(A) を三通りのKで評価する。
    𝔹が左部分群なら BA ∩ 𝔹A^c ⊆ B(A∖BA) も評価する。
    """
    X.check(A, BB, B)
    BA = X.product(B, A)
    if not BA <= A:
        raise NotUpperPeriodic(f'BA ⊆ A が成り立ちません: {X.element_labels(BA - A)}')
    B_start = X.product(B, A - BA)

    subgroup_form: Optional[bool] = None
    if is_left_subgroup(X, BB):
        subgroup_form = (BA & X.product(BB, A.complement())) <= B_start
    return WellStartedReport(
        kernel_based       = BA - periodic_kernel(X, A, BB) <= B_start,
        upper_kernel_based = BA - upper_periodic_kernel(X, A, BB) <= B_start,
        summand_based      = BA - (summand(X, A, BB) & A) <= B_start,
        subgroup_form      = subgroup_form,
    )

def is_well_started(X:FiniteMagma, A:Subset, BB:Subset, B:Subset) -> bool:
    "BA ∖ C_𝔹(A) ⊆ B·St_B(A)"
    return well_started_report(X, A, BB, B).kernel_based


def decompose_three_parts(X:FiniteMagma, A:Subset, BB:Subset, B:Subset, l:Optional[int]=None) -> ThreeParts:
    """
    A = C ∪̇ BF ∪̇ E に分解する。前提条件が崩れていれば、どれが崩れたかを`PreconditionFailed.which`で報告する。
    """
    X.check(A, BB, B)
    BA = X.product(B, A)
    if not BA <= A:
        raise PreconditionFailed('BA ⊆ A が成り立ちません', which='upper_periodic')
    if not X.product(B, BB) <= BB:
        raise PreconditionFailed('B𝔹 ⊆ 𝔹 が成り立ちません', which='B_BB_closed')
    if l is None:
        l = left_identities(X).min()
        if l is None:
            raise PreconditionFailed('左単位元がないのでB⁻¹が定まりません', which='left_identity')
    try:
        inverse = canonical_inverse(X, B, l)
    except NotLeftInvertible as error:
        raise PreconditionFailed(f'B⁻¹が存在しません: {error.error_msg}', which='inverse_exists') from error
    if not inverse <= BB | B:
        raise PreconditionFailed('B⁻¹ ⊆ 𝔹 ∪ B が成り立ちません', which='inverse_covered')
    if inverse.isdisjoint(BB):
        raise PreconditionFailed('B⁻¹ ∩ 𝔹 ≠ ∅ が成り立ちません', which='inverse_meets_BB')

    C = periodic_kernel(X, A, BB)
    F = A - C
    E = A - BA
    BF = BA & F
    if (C | BF | E) != A or not C.isdisjoint(BF | E) or not BF.isdisjoint(E) or BF != F - E:
        raise AssertionError('三つの部分への分解が成り立っていません')
    return ThreeParts(C, BF, E)


def left_ideal_kernel_check(X:FiniteMagma, A:Subset, B:Subset) -> bool:
    """
    Bが左単位元を含む部分半群で、Aが部分半群のとき、C_B(A)が空かAの右イデアルであることを確かめる。
    """
    X.check(A, B)
    if not B or not X.product(B, B) <= B:
        raise PreconditionFailed(f'{X.element_labels(B)}は部分半群ではありません', which='B_subsemigroup')
    if B.isdisjoint(left_identities(X)):
        raise PreconditionFailed(f'{X.element_labels(B)}は左単位元を含みません', which='B_left_identity')
    if not X.product(A, A) <= A:
        raise PreconditionFailed(f'{X.element_labels(A)}は部分半群ではありません', which='A_subsemigroup')
    C = periodic_kernel(X, A, B)
    return not C or X.product(C, A) <= C


def complement_periodicity(X:FiniteMagma, A:Subset, B:Subset, l:Optional[int]=None) -> bool:
    """
    B⁻¹ ⊆ B となる逆元集合があるとき、AとA^cの上B周期性が一致するかを返す。
    """
    X.check(A, B)
    if l is None:
        l = left_identities(X).min()
        if l is None:
            raise PreconditionFailed('左単位元がないのでB⁻¹が定まりません', which='left_identity')
    try:
        inverses = inverses_of(X, B, l)
    except NotLeftInvertible as error:
        raise PreconditionFailed(f'B⁻¹が存在しません: {error.error_msg}', which='inverse_exists') from error
    if not any(inv <= B for inv in inverses):
        raise PreconditionFailed('B⁻¹ ⊆ B となる逆元集合がありません', which='inverse_in_B')
    return is_left_upper_periodic(X, A, B) == is_left_upper_periodic(X, A.complement(), B)


def all_subsets(n:int, *, force:bool=False) -> Iterator[Subset]:
    "n元集合の部分集合を全て、ビット列の昇順で列挙する"
    require_exhaustive(n, '部分集合', force=force)
    for bits in range(1 << n):
        yield Subset(n, bits)


def periodic_subsets(X:FiniteMagma, B:Subset, *, force:bool=False) -> list[Subset]:
    "BA = A を満たす部分集合を全て列挙する"
    return [A for A in all_subsets(X.n, force=force) if is_left_periodic(X, A, B)]


__all__ = (
    'is_left_upper_periodic', 'is_left_lower_periodic', 'is_left_periodic', 'periodic_kernel_trace',
    'periodic_kernel', 'upper_periodic_kernel_trace', 'upper_periodic_kernel', 'summand', 'summand_closed_form',
    'start', 'classify', 'well_started_report', 'is_well_started', 'decompose_three_parts', 'left_ideal_kernel_check',
    'complement_periodicity', 'all_subsets', 'periodic_subsets',
)
