import numpy as np
import pytest

from periodica import (
    EmptyGenerator, FiniteMagma, InvalidTable, MagmaMismatch, NotLeftFactor, NotLeftInvertible, Subset,
    canonical_inverse, function_monoid, generate_subgroup, generate_subsemigroup, idempotents, identity,
    inverses_of, is_associative, is_group, is_left_cancellative_over, is_left_factor_subgroup, is_left_subgroup,
    left_identities, left_subgroups, maximal_subgroup, right_identities, right_transversal, symmetric, units,
)
from periodica.builders import left_zero, right_zero


def test_bundled_tables(m2, s3):
    Z6 = FiniteMagma.from_file('z6.json')
    assert Z6.n == 6 and Z6.name == 'z6'
    assert is_group(Z6) and identity(Z6) == 0
    for path, built in (('m2.json', m2), ('s3.json', s3)):
        X = FiniteMagma.from_file(path)
        assert np.array_equal(X.table, built.table)
        assert X.labels == built.labels

def test_json_round_trip(m2):
    X = FiniteMagma.from_json(m2.to_json())
    assert np.array_equal(X.table, m2.table) and X.labels == m2.labels
    assert 'labels' not in FiniteMagma.from_json({'table': [[0, 1], [1, 0]]}).to_json()

@pytest.mark.parametrize('obj', [
    {'table': [[0, 1]]},
    {'table': [[0, 2], [1, 0]]},
    {'table': [[0, 1], [1, 0]], 'labels': ['a', 'a']},
    {'n': 3, 'table': [[0, 1], [1, 0]]},
    {'rows': []},
])
def test_invalid_tables(obj):
    with pytest.raises(InvalidTable):
        FiniteMagma.from_json(obj)

def test_table_is_read_only(z6):
    with pytest.raises(ValueError):
        z6.table[0, 0] = 1


def test_structure_flags(z6, m2):
    assert is_associative(z6) and is_group(z6)
    assert not is_associative(FiniteMagma(np.array([[1, 0], [0, 0]])))
    L2, R2 = left_zero(2), right_zero(2)
    assert left_identities(L2) == L2.empty() and right_identities(L2) == L2.full()
    assert left_identities(R2) == R2.full() and identity(R2) is None
    assert identity(m2) == m2.index('e') and not is_group(m2)
    assert idempotents(m2) == m2.subset('e', 'c1', 'c2')
    assert units(m2) == m2.subset('e', 's')
    assert is_left_cancellative_over(m2, units(m2))
    assert not is_left_cancellative_over(m2, m2.subset('c1'))

def test_units_of_f3():
    F3 = function_monoid(3)
    U = units(F3)
    assert F3.n == 27 and len(U) == 6
    assert is_left_subgroup(F3, U) and not is_left_factor_subgroup(F3, U)
    with pytest.raises(NotLeftFactor):
        right_transversal(F3, U)


def test_generated_structures(z6, m2):
    assert generate_subsemigroup(z6, z6.subset(2)) == z6.subset(0, 2, 4)
    assert generate_subgroup(z6, z6.subset(3)) == z6.subset(0, 3)
    assert generate_subgroup(m2, m2.subset('s')) == m2.subset('e', 's')
    assert maximal_subgroup(m2, m2.index('c1')) == m2.subset('c1')
    with pytest.raises(EmptyGenerator):
        generate_subsemigroup(z6, z6.empty())

def test_inverses(z6, m2):
    assert inverses_of(z6, z6.subset(1, 2), 0) == [z6.subset(4, 5)]
    assert canonical_inverse(m2, m2.subset('s'), m2.index('e')) == m2.subset('s')
    with pytest.raises(NotLeftInvertible):
        inverses_of(m2, m2.subset('c1'), m2.index('e'))


def test_left_subgroups(z6, s3):
    assert left_subgroups(z6) == [z6.subset(0), z6.subset(0, 3), z6.subset(0, 2, 4), z6.full()]
    assert len(left_subgroups(s3)) == 6

def test_right_transversal(z6, m2):
    ctx = right_transversal(z6, z6.subset(0, 3))
    assert ctx.transversal == z6.subset(0, 1, 2)
    assert ctx.decompose(5) == (3, 2)
    assert ctx.nontrivial == z6.subset(3)
    ctx = right_transversal(m2, units(m2))
    assert ctx.transversal == m2.subset('e', 'c1')
    assert all(len(ctx.factor_pairs(x)) == 1 for x in range(m2.n))

def test_mismatch(z6):
    with pytest.raises(MagmaMismatch):
        z6.product(Subset.full(4), z6.full())
