import pytest

from periodica import (
    builder_groups, by_name, direct_product, dihedral, function_monoid, identity, is_associative, is_group,
    with_identity, zn_multiplicative,
)


@pytest.mark.parametrize('name, n, group', [
    ('Z6', 6, True), ('cyclic:5', 5, True), ('S3', 6, True), ('D4', 8, True), ('Z2xZ4', 8, True),
    ('M2', 4, False), ('F3', 27, False), ('L2', 2, False), ('R3', 3, False), ('L2^1', 3, False), ('zmul6', 6, False),
])
def test_by_name(name, n, group):
    X = by_name(name)
    assert X.n == n
    assert is_associative(X)
    assert is_group(X) == group

def test_unknown_name():
    with pytest.raises(ValueError):
        by_name('Q8')

def test_with_identity():
    X = with_identity(by_name('L2'))
    assert X.labels == ('a', 'b', '1')
    assert identity(X) == 2
    assert with_identity(by_name('Z2')).labels[-1] == '1adj'

def test_direct_product():
    X = direct_product(by_name('Z2'), by_name('Z3'))
    assert X.labels[4] == '(1,1)'
    assert X.mul(X.index('(1,2)'), X.index('(1,2)')) == X.index('(0,1)')

def test_dihedral_relation():
    D = dihedral(4)
    r, s = D.index('r1'), D.index('s0')
    assert D.mul(D.mul(s, r), s) == D.index('r3')

def test_function_monoid_labels():
    M2 = function_monoid(2)
    assert M2.labels == ('e', 's', 'c1', 'c2')
    assert M2.mul(M2.index('s'), M2.index('c1')) == M2.index('c2')

def test_zn_multiplicative():
    Z = zn_multiplicative(6)
    assert Z.mul(2, 3) == 0 and Z.mul(5, 5) == 1

def test_builder_groups():
    groups = builder_groups(8)
    assert all(is_group(G) and G.n <= 8 for G in groups)
    assert {'Z8', 'D4', 'Z2xZ4', 'S3'} <= {G.name for G in groups}
