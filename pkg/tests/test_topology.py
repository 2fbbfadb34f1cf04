from hypothesis import given, strategies as st
import pytest

from periodica import (
    NotATopology, NotGroup, Subset, TopologyKind, all_subsets, build_topology, by_name, condensation, count_opens,
    cyclic, ideal_topology, is_lower_open, is_open, is_topological_group, is_topological_semigroup, left_ideals,
    symmetric, to_dot, write_dot,
)


def test_neighborhoods(z6):
    T = build_topology(z6, z6.subset(2))
    assert T.neighborhood(1) == z6.subset(1, 3, 5)
    assert T.neighborhood(0) == z6.subset(0, 2, 4)
    assert condensation(T) == [z6.subset(0, 2, 4), z6.subset(1, 3, 5)]
    assert count_opens(T) == 4

def test_open_sets(z6):
    T = build_topology(z6, z6.subset(2))
    assert is_open(T, z6.subset(0, 2, 4))
    assert not is_open(T, z6.subset(0, 1))
    assert is_open(T, z6.empty()) and is_open(T, z6.full())
    assert is_lower_open(T, z6.subset(0, 2, 4))
    assert not is_lower_open(T, z6.subset(0))

def test_empty_B_is_discrete(z6):
    T = build_topology(z6, z6.empty())
    assert count_opens(T) == 64
    assert all(T.neighborhood(y) == z6.subset(y) for y in range(6))

@pytest.mark.parametrize('n', [1, 2, 7, 12, 30])
def test_generator_gives_indiscrete(n):
    Z = cyclic(n)
    assert count_opens(build_topology(Z, Z.subset(1))) == 2


_SMALL = {name: by_name(name) for name in ('M2', 'S3', 'L2^1', 'Z2xZ2')}

@given(st.sampled_from(sorted(_SMALL)).flatmap(
    lambda name: st.tuples(st.just(_SMALL[name]), st.integers(min_value=0, max_value=(1 << _SMALL[name].n) - 1))))
def test_count_opens_matches_enumeration(sample):
    X, bits = sample
    T = build_topology(X, Subset(X.n, bits))
    assert count_opens(T) == sum(is_open(T, A) for A in all_subsets(X.n))


def test_periodic_kind(z6, m2):
    T = build_topology(z6, z6.subset(1), TopologyKind.PERIODIC)
    assert count_opens(T) == 2
    with pytest.raises(NotATopology) as error:
        build_topology(z6, z6.empty(), TopologyKind.PERIODIC)
    assert error.value.reason == 'empty_B'
    with pytest.raises(NotATopology) as error:
        build_topology(m2, m2.subset('c1'), TopologyKind.PERIODIC)
    assert error.value.reason == 'not_left_cancellative'


def test_topological_semigroup(z6, s3):
    report = is_topological_semigroup(z6, z6.subset(0, 2, 4))
    assert report.subsemigroup and report.is_topological
    assert report.continuity_minimal == report.continuity_basis
    assert not is_topological_semigroup(s3, s3.subset(0, 2)).is_topological

def test_topological_group(z6, s3, m2):
    report = is_topological_group(z6, z6.subset(0, 2, 4))
    assert report.normal and report.is_topological_group
    assert set(report.basis) == {z6.subset(0, 2, 4), z6.subset(1, 3, 5)}
    report = is_topological_group(s3, s3.subset(0, 2))
    assert not report.normal and not report.is_topological_group
    assert is_topological_group(s3, s3.subset(0, 3, 4)).is_topological_group
    with pytest.raises(NotGroup):
        is_topological_group(m2, m2.subset('e'))


def test_left_ideals(z6, m2):
    L2 = by_name('L2')
    assert left_ideals(L2) == [L2.empty(), L2.full()]
    assert left_ideals(z6) == [z6.empty(), z6.full()]
    ideals = left_ideals(m2)
    assert m2.subset('c1', 'c2') in ideals and m2.subset('c1') not in ideals
    T = ideal_topology(m2)
    assert count_opens(T) == len(ideals)


def test_to_dot(z6, tmp_path):
    T = build_topology(z6, z6.subset(2))
    text = to_dot(T, 'tau')
    assert text.startswith('digraph "tau" {\n')
    assert '  n0 -> n2;\n' in text and '  n5 -> n1;\n' in text
    assert text.count('->') == 6
    path = tmp_path / 'z6.dot'
    write_dot(T, str(path))
    assert path.read_text(encoding='UTF-8').count('->') == 6


def test_symmetric_neighborhoods_are_cosets():
    S3 = symmetric(3)
    T = build_topology(S3, S3.subset(0, 2))
    assert len(condensation(T)) == 3
    assert count_opens(T) == 8

def test_generator_two_on_z6(z6):
    B = z6.subset(2)
    assert is_topological_semigroup(z6, B).is_topological
    report = is_topological_group(z6, B)
    assert report.is_topological_group and not report.normal
