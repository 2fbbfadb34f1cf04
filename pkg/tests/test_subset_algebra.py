from hypothesis import given, strategies as st
import pytest

from periodica import (
    BadFactorization, NotGroup, NotLeftIdentity, Subset, SymmetryKind, adjoin_identity, by_name, direct_witnesses,
    divisor_pairs, identity_extension, is_anti_left_transference, is_direct, is_direct_by_quotients, product,
    search_factorization, symmetry_kind,
)


_MAGMAS = {name: by_name(name) for name in ('Z6', 'S3', 'M2', 'L2^1', 'zmul6', 'Z2xZ2')}

def _subsets(n:int):
    return st.integers(min_value=0, max_value=(1 << n) - 1).map(lambda bits: Subset(n, bits))

@st.composite
def _magma_and_subsets(draw, count:int):
    X = _MAGMAS[draw(st.sampled_from(sorted(_MAGMAS)))]
    return X, tuple(draw(_subsets(X.n)) for _ in range(count))


def test_product(z6):
    assert product(z6, z6.subset(0, 3), z6.subset(0, 1, 2)) == z6.full()
    assert product(z6, z6.empty(), z6.subset(1)) == z6.empty()
    L2 = by_name('L2')
    assert product(L2, L2.subset('a'), L2.full()) == L2.subset('a')

@given(_magma_and_subsets(3))
def test_product_associativity(sample):
    X, (A, B, C) = sample
    assert X.product(X.product(A, B), C) == X.product(A, X.product(B, C))


def test_adjoin_identity(z6, m2):
    assert adjoin_identity(z6, z6.subset(1)) == z6.subset(0, 1)
    assert adjoin_identity(m2, m2.subset('c1'), m2.index('e')) == m2.subset('e', 'c1')
    with pytest.raises(NotLeftIdentity):
        adjoin_identity(m2, m2.subset('s'), m2.index('c1'))

def test_forced_identity_extension():
    L2 = by_name('L2')
    X1, B1 = identity_extension(L2, L2.subset('a'))
    assert X1.n == 3 and B1 == X1.subset('a', '1')
    assert identity_extension(by_name('Z6'), Subset.of(6, [1]))[1] == Subset.of(6, [0, 1])


def test_directness(z6):
    assert is_direct(z6, z6.subset(0, 3), z6.subset(0, 1, 2))
    assert not is_direct(z6, z6.subset(0, 2, 4), z6.subset(0, 2))
    assert is_direct(z6, z6.subset(0), z6.subset(1, 3, 4))
    assert direct_witnesses(z6, z6.subset(0, 1), z6.subset(0, 1)) == {1: [(0, 1), (1, 0)]}
    assert direct_witnesses(z6, z6.subset(0, 3), z6.subset(0, 1, 2)) == {}

@given(_magma_and_subsets(4))
def test_direct_sub_uniqueness(sample):
    X, (A, B, maskA, maskB) = sample
    if is_direct(X, A, B):
        assert is_direct(X, A & maskA, B & maskB)

@given(st.sampled_from(['Z6', 'S3', 'Z2xZ2']).flatmap(
    lambda name: st.tuples(st.just(_MAGMAS[name]), _subsets(_MAGMAS[name].n), _subsets(_MAGMAS[name].n))))
def test_direct_by_quotients(sample):
    G, A, B = sample
    assert is_direct(G, A, B) == is_direct_by_quotients(G, A, B)

def test_direct_by_quotients_needs_group(m2):
    with pytest.raises(NotGroup):
        is_direct_by_quotients(m2, m2.full(), m2.full())


def test_anti_left_transference(z6):
    assert is_anti_left_transference(z6, z6.subset(1), z6.subset(1))
    assert not is_anti_left_transference(z6, z6.subset(0, 3), z6.subset(3))
    assert is_anti_left_transference(z6, z6.empty(), z6.full())

@pytest.mark.parametrize('B, kind', [
    ([1, 5], SymmetryKind.SYMMETRIC),
    ([1, 2], SymmetryKind.ANTI_SYMMETRIC),
    ([1, 2, 5], SymmetryKind.NEITHER),
])
def test_symmetry_kind(z6, B, kind):
    assert symmetry_kind(z6, z6.subset(*B), 0) is kind


@pytest.mark.parametrize('name', ['Z6', 'S3', 'D4', 'Z2xZ4', 'Z3xZ3', 'Z12'])
def test_search_factorization(name):
    G = by_name(name)
    for a, b in divisor_pairs(G.n):
        A, B = search_factorization(G, a, b, workers=2)
        assert len(A) == a and len(B) == b
        assert G.product(A, B) == G.full() and is_direct(G, A, B)

def test_search_factorization_errors(z6, m2):
    with pytest.raises(NotGroup):
        search_factorization(m2, 2, 2)
    with pytest.raises(BadFactorization):
        search_factorization(z6, 2, 2)

def test_divisor_pairs():
    assert divisor_pairs(6) == [(1, 6), (2, 3), (3, 2), (6, 1)]
    assert divisor_pairs(1) == [(1, 1)]
