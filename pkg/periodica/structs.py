"""
演算の結果を表す構造体
"""

from collections.abc import Callable
from dataclasses import dataclass, field, fields
from enum import Enum
from fractions import Fraction
from typing import Any, Optional
import logging

from .subset import Subset, format_subset


_LOG = logging.getLogger(__name__)


def to_jsonable(value) -> Any:
    "結果をJSONで書き出せる値に変換する。部分集合は16進リテラルになる。"
    match value:
        case Subset():
            return format_subset(value)
        case Enum():
            return value.value
        case PeriodicaStruct():
            return value.to_dict()
        case Fraction():
            return str(value)
        case list() | tuple():
            return [to_jsonable(v) for v in value]
        case dict():
            return {str(k): to_jsonable(v) for k, v in value.items()}
        case bool() | int() | float() | str() | None:
            return value
        case _ if hasattr(value, 'to_json'):
            return value.to_json()
        case _:
            return str(value)


class PeriodicaStruct:
    __slots__ = ()

    def to_dict(self) -> dict[str, Any]:
        return {f.name: to_jsonable(getattr(self, f.name)) for f in fields(self) if f.repr} # type: ignore


class PeriodicTag(Enum):
    PERIODIC      = 'Periodic'
    PERIODIC_FREE = 'PeriodicFree'
    MIXED         = 'Mixed'


@dataclass(slots=True, frozen=True)
class PeriodicClass(PeriodicaStruct):
    tag:       PeriodicTag
    kernel:    Subset
    "周期核 C_B(A)"
    free_part: Subset
    "周期自由部分 F_B(A) = A ∖ C_B(A)"


@dataclass(slots=True, frozen=True)
class KernelTrace(PeriodicaStruct):
    kernel:     Subset
    iterations: int
    "不動点に達するまでの反復回数"


@dataclass(slots=True, frozen=True)
class WellStartedReport(PeriodicaStruct):
    """
    BA ∖ K ⊆ B·St_B(A) を、Kとして周期核・上周期核・和因子集合∩Aのそれぞれで評価した結果。
    `subgroup_form`は𝔹が左部分群のときだけ評価される BA ∩ 𝔹A^c ⊆ B(A∖BA)。
    """
    kernel_based:       bool
    upper_kernel_based: bool
    summand_based:      bool
    subgroup_form:      Optional[bool]


@dataclass(slots=True, frozen=True)
class ThreeParts(PeriodicaStruct):
    C:  Subset
    BF: Subset
    E:  Subset


@dataclass(slots=True, frozen=True)
class PositivePartition(PeriodicaStruct):
    G_plus:  Subset
    G_minus: Subset
    G_two:   Subset


@dataclass(slots=True, frozen=True)
class RepresentationReport(PeriodicaStruct):
    D:                          Subset
    E:                          Subset
    first_half_direct:          bool
    "𝔹·D が直積かつ周期核に一致する"
    second_half_direct:         bool
    "B¹·E が直積"
    halves_disjoint:            bool
    E_unique:                   bool
    D_unique_given_transversal: bool
    B_is_subsemigroup:          bool
    "Eが空か BB ⊆ B。Eが空でなければ上B周期性に必要十分な条件"
    well_started:               bool
    reconstructs:               bool
    "𝔹·D ∪ B¹·E = A"

    @property
    def all_flags(self) -> bool:
        return (self.first_half_direct and self.second_half_direct and self.halves_disjoint and self.E_unique
                and self.D_unique_given_transversal and self.B_is_subsemigroup and self.well_started)


@dataclass(slots=True, frozen=True)
class NormalFactorReport(PeriodicaStruct):
    identity:          int
    "1_𝓑。両側単位元であることが確認されている"
    is_two_sided:      bool
    dual_direct:       bool
    "S = 𝓓·𝓑 が直積"
    intersection:      Subset
    singleton:         bool


@dataclass(slots=True, frozen=True)
class BiProjection(PeriodicaStruct):
    part:      str
    "'D'か'E'"
    generator: int
    factor:    int
    "x = factor·generator となる𝓑またはB¹の元"


@dataclass(slots=True, frozen=True)
class QuestionTwoCase(PeriodicaStruct):
    BB:             Subset
    B:              Subset
    D:              Subset
    E:              Subset
    A:              Subset
    well_started:   bool
    kernel_matches: Optional[bool]
    "C_𝔹(A) = 𝔹D。𝔹が左部分群でB ⊆ 𝔹のときだけ調べる"
    restricted:     bool
    "B ⩽̇ 𝔹 ≤_ℓ X の組か"


@dataclass(slots=True, frozen=True)
class QuestionTwoResult(PeriodicaStruct):
    checked:                int
    "調べた(𝔹, B, 𝔹D, E)の組の数"
    counterexamples:        tuple[QuestionTwoCase, ...]
    "well startedにならなかった組"
    restricted_checked:     int
    "そのうち B ⩽̇ 𝔹 ≤_ℓ X の組の数"
    kernel_counterexamples: tuple[QuestionTwoCase, ...]
    "B ⩽̇ 𝔹 ≤_ℓ X の組で C_𝔹(A) ≠ 𝔹D となったもの"


@dataclass(slots=True, frozen=True)
class SolutionSet(PeriodicaStruct):
    """
    解の族。`all`は小さいときだけ列挙され、正準順序で並ぶ。
    """
    top:     Subset
    "最大の解"
    all:     Optional[tuple[Subset, ...]]
    count:   Optional[int]
    accepts: Callable[[Subset], bool] = field(repr=False, compare=False)

    def __contains__(self, Y:Subset) -> bool:
        return self.accepts(Y)


@dataclass(slots=True, frozen=True)
class SplitResult(PeriodicaStruct):
    solutions: tuple[Subset, ...]
    unique:    bool


@dataclass(slots=True, frozen=True)
class RingIdealReport(PeriodicaStruct):
    n:         int
    solutions: tuple[Subset, ...]
    "I + I ⊆ I, RI ⊆ I, IR ⊆ I を満たす空でないI"
    classical: tuple[Subset, ...]
    "dℤ_n (d | n)"
    agree:     bool


@dataclass(slots=True, frozen=True)
class PeriodicConditions(PeriodicaStruct):
    """
    周期位相が位相になるための条件。転移条件は二通りの読み方をそれぞれ評価する。
    台集合が大きすぎて調べなかった項目は`None`。
    """
    left_cancellative: bool
    transfer_to_B:     Optional[bool]
    "BA = A ⇒ bA = B (b∈B)"
    transfer_to_A:     Optional[bool]
    "BA = A ⇒ bA = A (b∈B)"


@dataclass(slots=True, frozen=True)
class TopologicalSemigroupReport(PeriodicaStruct):
    subsemigroup:        bool
    left_normal:         bool
    continuity_minimal:  bool
    "N(x)N(y) ⊆ N(xy), N(x) = ⟨B⟩¹x"
    continuity_basis:    bool
    "同じ条件を基底 B¹x で評価したもの"
    is_topological:      bool


@dataclass(slots=True, frozen=True)
class TopologicalGroupReport(PeriodicaStruct):
    normal:                    bool
    inversion_continuous:      bool
    multiplication_continuous: bool
    is_topological_group:      bool
    basis:                     tuple[Subset, ...]


__all__ = (
    'to_jsonable', 'PeriodicaStruct', 'PeriodicTag', 'PeriodicClass', 'KernelTrace', 'WellStartedReport',
    'ThreeParts', 'PositivePartition', 'RepresentationReport', 'NormalFactorReport', 'BiProjection', 'QuestionTwoCase',
    'QuestionTwoResult', 'SolutionSet', 'SplitResult', 'RingIdealReport', 'PeriodicConditions',
    'TopologicalSemigroupReport', 'TopologicalGroupReport',
)
