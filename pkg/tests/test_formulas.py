import pytest

from matchloci.errors import DomainError, ResourceLimitError
from matchloci.formulas import (
    DegreeHistogram,
    conjugacy_schur_coefficient,
    first_row_stratification_identity,
    grfrob_conjugacy,
    grfrob_matchings,
    grfrob_pm,
    hilb_conjugacy,
    hilb_matchings,
    hilb_pm,
    matchings_degree_histogram,
    paired_truncation_identity,
    pm_degree_histogram,
    pm_lds_histogram,
    ungraded_frob_conjugacy,
)
from matchloci.loci import double_factorial, fixed_count, involution_count, locus_size
from matchloci.partitions import first_part, partitions_of
from matchloci.schur import (
    QPoly,
    SchurSeries,
    pieri_multiply,
    plethysm_sd_s2,
    schur_coefficient,
)
from matchloci.tableaux import count_syt


def s(n, lam, grade=0, coeff=1):
    return SchurSeries.single(n, grade, lam, coeff)


# --- all involutions -------------------------------------------------------


def test_grfrob_matchings_n2():
    assert grfrob_matchings(2) == s(2, (2,)) + s(2, (2,), grade=1)


def test_grfrob_matchings_n6_published_expansion():
    series = grfrob_matchings(6)
    expected = (
        s(6, (6,), grade=0)
        + s(6, (6,), grade=1)
        + s(6, (5, 1), grade=1)
        + s(6, (4, 2), grade=1)
        + s(6, (6,), grade=2)
        + s(6, (5, 1), grade=2)
        + s(6, (4, 2), grade=2, coeff=2)
        + s(6, (3, 2, 1), grade=2)
        + s(6, (2, 2, 2), grade=2)
        + s(6, (6,), grade=3)
        + s(6, (4, 2), grade=3)
        + s(6, (2, 2, 2), grade=3)
    )
    assert series == expected
    # the closing summand sits at grade 3, not 4
    assert series.max_grade() == 3
    assert schur_coefficient(series, 2, (4, 2)) == 2


def test_hilb_matchings_examples():
    assert hilb_matchings(4) == QPoly([1, 6, 3])
    assert hilb_matchings(0) == QPoly([1])
    assert hilb_matchings(3) == QPoly([1, 3])


@pytest.mark.parametrize("n", range(0, 13))
def test_dimension_functional_reproduces_hilbert(n):
    assert grfrob_matchings(n).dimension_series(count_syt) == hilb_matchings(n)


@pytest.mark.parametrize("n", range(0, 11))
def test_matchings_mass_is_sum_of_conjugacy_masses(n):
    total = SchurSeries.zero(n)
    for a in range(n % 2, n + 1, 2):
        total = total + ungraded_frob_conjugacy(n, a)
    assert grfrob_matchings(n).at_q1() == total


# --- perfect matchings ------------------------------------------------------


def test_grfrob_pm_small():
    assert grfrob_pm(2) == s(2, (2,))
    assert grfrob_pm(4) == s(4, (4,)) + s(4, (2, 2), grade=1)
    assert grfrob_pm(6) == (
        s(6, (6,)) + s(6, (4, 2), grade=1) + s(6, (2, 2, 2), grade=2)
    )
    with pytest.raises(DomainError):
        grfrob_pm(5)


def test_hilb_pm_small():
    assert hilb_pm(4) == QPoly([1, 2])
    assert hilb_pm(2) == QPoly([1])
    assert hilb_pm(6).at_one() == 15


@pytest.mark.parametrize("n", range(0, 13, 2))
def test_hilb_pm_equals_grfrob_dimensions(n):
    assert grfrob_pm(n).dimension_series(count_syt) == hilb_pm(n)


def test_lds_histogram_examples():
    assert pm_lds_histogram(4).as_dict() == {0: 1, 1: 2}
    assert pm_lds_histogram(2).as_dict() == {0: 1}
    assert pm_lds_histogram(8).total() == 105


@pytest.mark.parametrize("n", range(0, 11, 2))
def test_lds_histogram_matches_hilbert(n):
    assert pm_lds_histogram(n).as_qpoly() == hilb_pm(n)


def test_lds_histogram_bound():
    with pytest.raises(ResourceLimitError):
        pm_lds_histogram(20)
    with pytest.raises(DomainError):
        pm_lds_histogram(5)


# --- conjugacy classes ------------------------------------------------------


def test_grfrob_conjugacy_full_fixed():
    for n in range(0, 9):
        assert grfrob_conjugacy(n, n) == s(n, (n,) if n else ())


@pytest.mark.parametrize("n", range(0, 13, 2))
def test_grfrob_conjugacy_zero_fixed_is_pm(n):
    assert grfrob_conjugacy(n, 0) == grfrob_pm(n)


def test_grfrob_conjugacy_4_2_by_hand():
    expected = (
        s(4, (4,))
        + s(4, (3, 1), grade=1)
        + s(4, (2, 2), grade=1)
    )
    assert grfrob_conjugacy(4, 2) == expected
    assert hilb_conjugacy(4, 2) == QPoly([1, 5])


def test_grfrob_conjugacy_parity_error():
    with pytest.raises(DomainError):
        grfrob_conjugacy(5, 2)


def test_hilb_conjugacy_examples():
    assert hilb_conjugacy(4, 4) == QPoly([1])
    assert hilb_conjugacy(4, 0) == hilb_pm(4)
    assert hilb_conjugacy(4, 2).at_one() == 6


@pytest.mark.parametrize("n", range(0, 13))
def test_conjugacy_structural_bounds(n):
    for a in range(n % 2, n + 1, 2):
        series = grfrob_conjugacy(n, a)
        assert series.is_nonnegative()
        assert series.max_grade() <= (n - a) // 2
        for (grade, lam), _ in series.terms():
            assert first_part(lam) <= n - 2 * grade + a
        # q=1 mass agrees with the ungraded induction product
        assert series.at_q1() == ungraded_frob_conjugacy(n, a)
        assert hilb_conjugacy(n, a).at_one() == locus_size(fixed_count(n, a))


def test_ungraded_frob_examples():
    assert ungraded_frob_conjugacy(4, 4) == s(4, (4,))
    assert ungraded_frob_conjugacy(4, 0) == s(4, (4,)) + s(4, (2, 2))
    mass = ungraded_frob_conjugacy(6, 2).dimension_series(count_syt)
    assert mass.at_one() == 45


# --- closed-form coefficient -------------------------------------------------


def test_closed_form_coefficient_examples():
    assert conjugacy_schur_coefficient((2, 2), 0, 2) == 1
    assert conjugacy_schur_coefficient((4,), 0, 2) == 1
    assert conjugacy_schur_coefficient((3, 1), 0, 2) == 0
    with pytest.raises(DomainError):
        conjugacy_schur_coefficient((3, 1), 1, 2)


@pytest.mark.parametrize("total", range(0, 13))
def test_closed_form_matches_pieri_everywhere(total):
    for a in range(total % 2, total + 1, 2):
        d = (total - a) // 2
        product = pieri_multiply(plethysm_sd_s2(d), a)
        for lam in partitions_of(total):
            assert conjugacy_schur_coefficient(lam, a, d) == schur_coefficient(
                product, 0, lam
            ), (lam, a, d)


# --- identities ---------------------------------------------------------------


@pytest.mark.parametrize("n", range(0, 13))
def test_stratification_identity(n):
    for a in range(n % 2, n + 1, 2):
        assert first_row_stratification_identity(n, a)


@pytest.mark.parametrize("n", range(0, 13))
def test_paired_truncation_identity(n):
    assert paired_truncation_identity(n)


# --- histograms ----------------------------------------------------------------


def test_histogram_matchings_small():
    assert matchings_degree_histogram(4).as_dict() == {0: 1, 1: 6, 2: 3}
    assert matchings_degree_histogram(1).as_dict() == {0: 1}


def test_histogram_pm_small():
    assert pm_degree_histogram(4).as_dict() == {0: 1, 1: 2}
    assert pm_degree_histogram(2).as_dict() == {0: 1}


def test_histogram_totals_large():
    assert matchings_degree_histogram(60).total() == involution_count(60)
    assert pm_degree_histogram(40).total() == double_factorial(39)


@pytest.mark.parametrize("n", range(1, 16))
def test_hilbert_log_concavity(n):
    assert hilb_matchings(n).is_log_concave()
    for a in range(n % 2, n + 1, 2):
        assert hilb_conjugacy(n, a).is_log_concave()
