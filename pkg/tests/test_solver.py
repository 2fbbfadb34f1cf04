import pytest

from periodica import (
    SearchSpaceTooLarge, all_subsets, by_name, canonical_order, ring_ideal_demo, solve_equation, solve_sandwich,
    solve_split, solve_upper, solve_upper_inside, units,
)


def test_solve_upper(z6, m2):
    result = solve_upper(z6, z6.subset(0, 2, 4), z6.subset(0, 2, 4))
    assert result.top == z6.subset(0, 2, 4) and result.count == 8
    assert z6.subset(2) in result and z6.subset(1) not in result
    result = solve_upper(m2, units(m2), m2.subset('c1'))
    assert result.top == m2.empty() and result.all == (m2.empty(),)
    assert solve_upper(z6, z6.subset(1), z6.full()).top == z6.full()

def test_solve_upper_inside(z6, m2):
    assert solve_upper_inside(z6, z6.subset(2), z6.subset(0, 2, 4)).top == z6.subset(0, 2, 4)
    assert solve_upper_inside(m2, units(m2), m2.subset('c1', 'c2')).top == m2.subset('c1', 'c2')
    assert solve_upper_inside(z6, z6.subset(1), z6.empty()).top == z6.empty()

def test_solve_sandwich(z6):
    result = solve_sandwich(z6, z6.subset(2), z6.subset(0, 2, 4))
    assert result.top == z6.subset(0, 2, 4)
    assert result.all == (z6.empty(), z6.subset(0, 2, 4))
    assert solve_sandwich(z6, z6.subset(1), z6.subset(0, 1, 2)).all == (z6.empty(),)
    result = solve_sandwich(z6, z6.empty(), z6.full())
    assert result.top == z6.full() and result.count == 64

def test_solve_sandwich_matches_brute_force(m2):
    X = by_name('L2^1')
    for M in (m2, X):
        for B in all_subsets(M.n):
            for A in all_subsets(M.n):
                expected = canonical_order(Y for Y in all_subsets(M.n) if M.product(B, Y) <= Y <= A)
                assert list(solve_sandwich(M, B, A).all or ()) == expected


def test_solve_equation(z6, m2):
    evens = [[0], [2], [4], [0, 2], [0, 4], [2, 4], [0, 2, 4]]
    assert solve_equation(z6, z6.subset(0, 2, 4), z6.subset(0, 2, 4)) == [z6.subset(*Y) for Y in evens]
    assert solve_equation(m2, units(m2), m2.subset('c1')) == []
    assert solve_equation(z6, z6.subset(1), z6.empty()) == [z6.empty()]

def test_solve_equation_matches_brute_force(m2):
    for B in all_subsets(m2.n):
        for A in all_subsets(m2.n):
            expected = [Y for Y in all_subsets(m2.n) if m2.product(B, Y) == A]
            assert solve_equation(m2, B, A) == canonical_order(expected)

def test_solve_equation_limit():
    Z = by_name('Z24')
    with pytest.raises(SearchSpaceTooLarge):
        solve_equation(Z, Z.subset(0), Z.full())


def test_solve_split(z6, m2):
    U = units(m2)
    result = solve_split(m2, U, U, m2.subset('e'), U)
    assert result.solutions == (m2.empty(),) and result.unique
    H = z6.subset(0, 3)
    assert solve_split(z6, H, H, z6.subset(0), H).unique
    result = solve_split(z6, z6.subset(0), z6.subset(1), z6.subset(0), z6.subset(0, 1))
    assert result.solutions == () and not result.unique

def test_solve_split_matches_brute_force(z6):
    BB, B, D = z6.subset(0), z6.subset(2), z6.empty()
    for A in all_subsets(6):
        expected = canonical_order(Y for Y in all_subsets(6)
                                   if z6.product(B, Y).isdisjoint(Y) and z6.product(B, Y) | Y == A)
        assert list(solve_split(z6, BB, B, D, A).solutions) == expected


@pytest.mark.parametrize('n, ideals', [(1, 1), (6, 4), (8, 4), (12, 6)])
def test_ring_ideals(n, ideals):
    report = ring_ideal_demo(n)
    assert report.agree and len(report.solutions) == ideals
