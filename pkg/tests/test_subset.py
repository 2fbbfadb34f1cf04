from hypothesis import given, strategies as st
import pytest

from periodica import MagmaMismatch, Subset, canonical_order, format_subset, parse_subset


def test_literals():
    A = parse_subset('[0,2,4]', 6)
    assert A == Subset.of(6, [0, 2, 4])
    assert format_subset(A) == '0x15'
    assert parse_subset('0x15', 6) == A
    assert parse_subset('0b10101', 6) == A
    assert format_subset(Subset.full(6)) == '0x3F'
    assert format_subset(Subset.empty(3)) == '0x0'

def test_literals_with_labels():
    labels = ('e', 's', 'c1', 'c2')
    assert parse_subset('["e", "c2"]', 4, labels) == Subset.of(4, [0, 3])
    assert parse_subset('["s", 2]', 4, labels) == Subset.of(4, [1, 2])

@pytest.mark.parametrize('text', ['0x40', '[6]', '{1}', '[true]', '["x"]', '[0,', '0xZZ'])
def test_bad_literals(text):
    with pytest.raises(ValueError):
        parse_subset(text, 6)


def test_set_operations():
    A = Subset.of(6, [0, 1, 2])
    B = Subset.of(6, [2, 3])
    assert A | B == Subset.of(6, [0, 1, 2, 3])
    assert A & B == Subset.singleton(6, 2)
    assert A - B == Subset.of(6, [0, 1])
    assert A.complement() == Subset.of(6, [3, 4, 5])
    assert ~B == Subset.of(6, [0, 1, 4, 5])
    assert Subset.singleton(6, 2) <= A and not B <= A
    assert A.add(5) == Subset.of(6, [0, 1, 2, 5])
    assert A.min() == 0 and Subset.empty(6).min() is None
    assert list(Subset.of(6, [4, 1])) == [1, 4]
    assert A.widen(8) == Subset.of(8, [0, 1, 2])

def test_mismatched_sizes():
    with pytest.raises(MagmaMismatch):
        Subset.full(3) | Subset.full(4)
    with pytest.raises(ValueError):
        Subset.full(4).widen(3)

def test_immutable():
    A = Subset.of(3, [1])
    with pytest.raises(AttributeError):
        A.bits = 0 # type: ignore[misc]

def test_canonical_order():
    n = 6
    subsets = [Subset.of(n, s) for s in ([0, 2], [4], [0], [2], [2, 4], [0, 4])]
    assert canonical_order(subsets) == [Subset.of(n, s) for s in ([0], [2], [4], [0, 2], [0, 4], [2, 4])]


@given(st.integers(min_value=1, max_value=20).flatmap(
    lambda n: st.tuples(st.just(n), st.integers(min_value=0, max_value=(1 << n) - 1))))
def test_literal_codec(sample):
    n, bits = sample
    A = Subset(n, bits)
    assert parse_subset(format_subset(A), n) == A
    assert parse_subset(str(list(A)), n) == A
