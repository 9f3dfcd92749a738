"""Acceptance checklist: one test per criterion, each printing a PASS/FAIL line.

Every assertion here is exact (integer/rational equality); the only
tolerances are the stated wall-clock budgets.  Lines go to the real
stdout so the checklist is visible under any pytest capture mode.
"""

import csv
import io
import sys
import time
from contextlib import redirect_stdout

import pytest

from matchloci.cli import main
from matchloci.characters import equivariant_log_concave
from matchloci.errors import InternalCheckError
from matchloci.formulas import (
    conjugacy_schur_coefficient,
    first_row_stratification_identity,
    grfrob_conjugacy,
    grfrob_matchings,
    grfrob_pm,
    hilb_conjugacy,
    hilb_matchings,
    hilb_pm,
    paired_truncation_identity,
    pm_lds_histogram,
)
from matchloci.loci import (
    double_factorial,
    fixed_count,
    involution_count,
    matchings,
    perfect_matchings,
)
from matchloci.oracle import (
    compare_ideal_with_locus,
    graded_hilbert_oracle,
    grfrob_oracle,
)
from matchloci.partitions import first_part, partitions_of
from matchloci.schur import (
    QPoly,
    SchurSeries,
    pieri_multiply,
    plethysm_sd_s2,
    schur_coefficient,
)


def report(number, description, check):
    start = time.perf_counter()
    try:
        check()
    except BaseException as exc:
        elapsed = time.perf_counter() - start
        print(
            f"ACCEPTANCE {number:2d} [{description}]: FAIL ({elapsed:.2f}s) {exc}",
            file=sys.__stdout__,
            flush=True,
        )
        raise
    elapsed = time.perf_counter() - start
    print(
        f"ACCEPTANCE {number:2d} [{description}]: PASS ({elapsed:.2f}s)",
        file=sys.__stdout__,
        flush=True,
    )


def run_cli(*argv):
    buffer = io.StringIO()
    with redirect_stdout(buffer):
        code = main(list(argv))
    return code, buffer.getvalue()


def test_criterion_1_matching_monomial_hilbert():
    def check():
        start = time.perf_counter()
        code, out = run_cli("hilb", "--locus", "matchings", "--n", "4")
        assert code == 0
        assert out.strip() == "1,6,3"
        assert graded_hilbert_oracle(matchings(4)) == QPoly([1, 6, 3])
        assert time.perf_counter() - start < 1.0

    report(1, "matching monomial basis Hilbert series n=4", check)


def test_criterion_2_degree_six_graded_frobenius():
    def check():
        start = time.perf_counter()
        series = grfrob_matchings(6)
        by_grade = {
            0: {(6,): 1},
            1: {(6,): 1, (5, 1): 1, (4, 2): 1},
            2: {(6,): 1, (5, 1): 1, (4, 2): 2, (3, 2, 1): 1, (2, 2, 2): 1},
            3: {(6,): 1, (4, 2): 1, (2, 2, 2): 1},
        }
        expected = SchurSeries(
            6,
            {
                (grade, lam): c
                for grade, terms in by_grade.items()
                for lam, c in terms.items()
            },
        )
        assert series == expected
        assert series.max_grade() == 3  # the display's last summand pinned at q^3
        assert schur_coefficient(series, 2, (4, 2)) == 2
        assert time.perf_counter() - start < 1.0

    report(2, "grFrob of the n=6 involution quotient, final term at q^3", check)


def test_criterion_3_oracle_equals_formula_everywhere():
    def check():
        start = time.perf_counter()
        for n in range(2, 7):
            assert grfrob_oracle(matchings(n)) == grfrob_matchings(n), f"matchings n={n}"
        for n in (2, 4, 6):
            assert grfrob_oracle(perfect_matchings(n)) == grfrob_pm(n), f"pm n={n}"
        for n in range(1, 7):
            for a in range(n % 2, n + 1, 2):
                assert grfrob_oracle(fixed_count(n, a)) == grfrob_conjugacy(
                    n, a
                ), f"fixed n={n} a={a}"
        assert time.perf_counter() - start < 600.0

    report(3, "oracle == formula, every grade and partition, n <= 6", check)


def test_criterion_4_ideal_equalities_and_dominance():
    def check():
        for n in (1, 2, 3, 4):
            assert compare_ideal_with_locus("matchings", n).equal, f"matchings n={n}"
        for n in (2, 4):
            assert compare_ideal_with_locus("pm", n).equal, f"pm n={n}"
        for n in range(1, 6):
            for a in range(n % 2, n + 1, 2):
                # dominance violations raise InternalCheckError inside
                compare_ideal_with_locus("fixed", n, a)

    report(4, "generator ideals: equalities (matchings, pm) and dominance (fixed)", check)


def test_criterion_5_mass_checks():
    def check():
        expected = [1, 2, 4, 10, 26, 76, 232]
        for n, count in enumerate(expected, start=1):
            assert hilb_matchings(n).at_one() == count == involution_count(n)
        for n in range(0, 13, 2):
            assert hilb_pm(n).at_one() == double_factorial(n - 1)

    report(5, "involution and double-factorial masses", check)


def test_criterion_6_lds_statistic_equivalence():
    def check():
        start = time.perf_counter()
        for n in (2, 4, 6, 8, 10):
            assert pm_lds_histogram(n).as_qpoly() == hilb_pm(n), f"n={n}"
        assert time.perf_counter() - start < 60.0

    report(6, "Hilbert series of pm quotient == lds statistic histogram", check)


def test_criterion_7_coefficient_formula_and_identities():
    def check():
        for total in range(0, 13):
            for a in range(total % 2, total + 1, 2):
                d = (total - a) // 2
                product = pieri_multiply(plethysm_sd_s2(d), a)
                for lam in partitions_of(total):
                    assert conjugacy_schur_coefficient(
                        lam, a, d
                    ) == schur_coefficient(product, 0, lam), (lam, a, d)
        for n in range(0, 13):
            for a in range(n % 2, n + 1, 2):
                assert first_row_stratification_identity(n, a), (n, a)
            assert paired_truncation_identity(n), n

    report(7, "closed-form coefficients and truncation identities to size 12", check)


def test_criterion_8_conjugacy_structure():
    def check():
        for n in range(0, 13, 2):
            assert grfrob_conjugacy(n, 0) == grfrob_pm(n), f"n={n}"
        for n in range(0, 13):
            assert grfrob_conjugacy(n, n) == SchurSeries.single(
                n, 0, (n,) if n else ()
            )
            for a in range(n % 2, n + 1, 2):
                series = grfrob_conjugacy(n, a)  # raises on any negative coefficient
                assert series.is_nonnegative()
                for (grade, lam), _ in series.terms():
                    assert first_part(lam) <= n - 2 * grade + a, (n, a, grade, lam)

    report(8, "conjugacy series: pm consistency, positivity, first-row bounds", check)


def test_criterion_9_figure_scale_histograms():
    def check():
        start = time.perf_counter()
        code, out = run_cli(
            "hilb", "--locus", "matchings", "--n", "200", "--format", "csv"
        )
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == ["degree", "dimension"]
        values = [int(r[1]) for r in rows[1:]]
        assert len(values) == 101
        assert sum(values) == involution_count(200)
        elapsed_matchings = time.perf_counter() - start
        assert elapsed_matchings < 60.0

        start = time.perf_counter()
        code, out = run_cli("hilb", "--locus", "pm", "--n", "100", "--format", "csv")
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        values = [int(r[1]) for r in rows[1:]]
        assert sum(values) == double_factorial(99)
        elapsed_pm = time.perf_counter() - start
        assert elapsed_pm < 60.0

    report(9, "exact histograms at n=200 (matchings) and n=100 (pm)", check)


def test_criterion_10_log_concavity():
    def check():
        findings = []
        for n in range(1, 11):
            result = equivariant_log_concave(grfrob_matchings(n))
            if not result.ok:
                findings.append(("matchings", n, None, result.witness))
            for a in range(n % 2, n + 1, 2):
                result = equivariant_log_concave(grfrob_conjugacy(n, a))
                if not result.ok:
                    findings.append(("fixed", n, a, result.witness))
        for n in range(1, 16):
            if not hilb_matchings(n).is_log_concave():
                findings.append(("matchings-hilbert", n, None, None))
            for a in range(n % 2, n + 1, 2):
                if not hilb_conjugacy(n, a).is_log_concave():
                    findings.append(("fixed-hilbert", n, a, None))
        assert not findings, f"log-concavity counterexamples found: {findings}"

    report(10, "equivariant log-concavity n <= 10, Hilbert log-concavity n <= 15", check)
