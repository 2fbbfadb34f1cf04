import pytest

from periodica import (
    NotGroup, NotInSet, NotPeriodic, NotUpperPeriodic, PreconditionFailed, TooLarge, bi_projection,
    bi_projection_detail, by_name, check_normal_factor_monoid, enumerate_positive_partitions, g_two,
    generate_upper_periodic, is_positive_subsemigroup, is_positive_subset, periodic_representation,
    question_two_search, representation_report, right_transversal, unique_representation_check, units,
)


@pytest.mark.parametrize('name, expected', [('Z6', [0, 3]), ('Z5', [0]), ('Z2', [0, 1]), ('Z8', [0, 4])])
def test_g_two(name, expected):
    G = by_name(name)
    assert g_two(G) == G.subset(*expected)

def test_g_two_needs_group(m2):
    with pytest.raises(NotGroup):
        g_two(m2)


@pytest.mark.parametrize('name, count', [('Z2', 1), ('Z5', 4), ('Z7', 8), ('Z8', 8), ('S3', 2)])
def test_partition_count(name, count):
    partitions = list(enumerate_positive_partitions(by_name(name)))
    assert len(partitions) == count
    assert len({p.G_plus for p in partitions}) == count

def test_partitions_of_z2():
    Z2 = by_name('Z2')
    (p,) = enumerate_positive_partitions(Z2)
    assert not p.G_plus and not p.G_minus and p.G_two == Z2.full()

def test_partitions_cover_the_group():
    G = by_name('Z7')
    for p in enumerate_positive_partitions(G):
        assert p.G_plus | p.G_minus | p.G_two == G.full()
        assert is_positive_subset(G, p.G_plus)


def test_positive_subsets():
    Z5 = by_name('Z5')
    assert is_positive_subset(Z5, Z5.subset(1, 2))
    assert not is_positive_subset(Z5, Z5.subset(2, 3))
    assert not is_positive_subset(Z5, Z5.empty())

def test_no_positive_subsemigroup():
    assert not is_positive_subsemigroup(by_name('Z5'), by_name('Z5').subset(1, 2))
    assert not is_positive_subsemigroup(by_name('Z7'), by_name('Z7').subset(1, 2, 3))
    assert not is_positive_subsemigroup(by_name('Z2'), by_name('Z2').empty())


def test_periodic_representation(m2):
    ctx = right_transversal(m2, units(m2))
    assert periodic_representation(ctx, m2.subset('c1', 'c2')) == m2.subset('c1')
    assert periodic_representation(ctx, m2.full()) == m2.subset('e', 'c1')
    assert periodic_representation(ctx, m2.empty()) == m2.empty()
    with pytest.raises(NotPeriodic):
        periodic_representation(ctx, m2.subset('c1'))


def test_representation_report_with_transversal(m2):
    U = units(m2)
    report = representation_report(m2, m2.subset('c1', 'c2'), U, U, m2.subset('e', 'c1'))
    assert report.D == m2.subset('c1') and report.E == m2.empty()
    assert report.all_flags and report.reconstructs

def test_representation_report_of_whole_group(z6):
    report = representation_report(z6, z6.full(), z6.full(), z6.subset(1))
    assert report.D == z6.subset(0) and report.E == z6.empty()
    assert report.first_half_direct and report.reconstructs and report.well_started
    assert not report.D_unique_given_transversal

def test_representation_report_diagnoses_collapse():
    X = by_name('L2^1')
    report = representation_report(X, X.subset('a', 'b'), X.subset('1'), X.subset('a'))
    assert report.E == X.subset('b')
    assert not report.halves_disjoint and not report.all_flags
    assert report.reconstructs

def test_representation_report_needs_upper_periodic(z6):
    with pytest.raises(NotUpperPeriodic):
        representation_report(z6, z6.subset(1, 2), z6.full(), z6.subset(1))


def test_generate_upper_periodic(m2, z6):
    U = units(m2)
    assert generate_upper_periodic(m2, U, U, m2.subset('c1'), m2.empty()) == m2.subset('c1', 'c2')
    assert generate_upper_periodic(z6, z6.subset(0), z6.subset(2), z6.empty(), z6.subset(1)) == z6.subset(1, 3, 5)
    assert generate_upper_periodic(z6, z6.subset(0), z6.subset(2), z6.empty(), z6.empty()) == z6.empty()

def test_unique_representation(z6):
    H = z6.subset(0, 3)
    assert unique_representation_check(z6, H, H, (z6.subset(0), z6.empty()), (z6.subset(3), z6.empty()))
    with pytest.raises(PreconditionFailed) as info:
        unique_representation_check(z6, z6.subset(0, 2), H, (z6.empty(), z6.empty()), (z6.empty(), z6.empty()))
    assert info.value.which == 'BB_left_subgroup'


def test_normal_factor_monoid(z6, m2):
    report = check_normal_factor_monoid(z6, right_transversal(z6, z6.subset(0, 2, 4)))
    assert report.identity == 0 and report.intersection == z6.subset(0)
    assert report.is_two_sided and report.dual_direct and report.singleton
    assert check_normal_factor_monoid(z6, right_transversal(z6, z6.full())).identity == 0
    with pytest.raises(PreconditionFailed) as info:
        check_normal_factor_monoid(m2, right_transversal(m2, units(m2)))
    assert info.value.which == 'left_cancellative'


def test_bi_projection(m2):
    ctx = right_transversal(m2, units(m2))
    A, D = m2.subset('c1', 'c2'), m2.subset('c1')
    detail = bi_projection_detail(ctx, A, D, m2.empty(), m2.index('c2'))
    assert (detail.part, detail.generator, detail.factor) == ('D', m2.index('c1'), m2.index('s'))
    assert bi_projection(ctx, m2.full(), m2.subset('e', 'c1'), m2.empty(), m2.index('s')) == m2.index('e')
    with pytest.raises(NotInSet):
        bi_projection(ctx, A, D, m2.empty(), m2.index('e'))


def test_question_two_search():
    result = question_two_search(by_name('Z2'))
    assert 0 < result.restricted_checked <= result.checked
    assert all(not case.well_started for case in result.counterexamples)
    assert all(case.restricted and case.kernel_matches is False for case in result.kernel_counterexamples)
    with pytest.raises(TooLarge):
        question_two_search(by_name('Z3'), limit=2)

def test_question_two_search_without_left_subgroups():
    # L2には左単位元がないので、どの𝔹も左部分群ではない
    result = question_two_search(by_name('L2'))
    assert (result.checked, result.restricted_checked) == (10, 0)
    assert result.counterexamples == () and result.kernel_counterexamples == ()

def test_question_two_search_on_m2():
    result = question_two_search(by_name('M2'))
    assert 0 < result.restricted_checked < result.checked
    # B ⩽̇ 𝔹 ≤_ℓ X の組は必ずwell startedになる
    assert all(not case.restricted for case in result.counterexamples)
