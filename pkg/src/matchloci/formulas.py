"""Closed-form graded Frobenius images and Hilbert series of the involution loci.

Everything here is formula-side: sums of plethysms, Pieri products and
first-row truncations, plus the hook-length dimension counts.  The
brute-force linear-algebra ground truth lives in ``oracle`` and never
shares code with this module.
"""

from dataclasses import dataclass
from math import comb, factorial, prod

from .errors import DomainError, InternalCheckError, ResourceLimitError
from .loci import (
    double_factorial,
    enumerate_locus,
    perfect_matchings,
)
from .partitions import Partition, conjugate, first_part, partitions_of, validate_partition
from .schur import (
    QPoly,
    SchurSeries,
    pieri_multiply,
    plethysm_sd_s2,
    schur_coefficient,
    truncate_first_row,
)
from .tableaux import count_syt, lds

DEFAULT_ENUMERATION_BOUND = 12


@dataclass(frozen=True)
class DegreeHistogram:
    """Exact per-degree counts, e.g. dimensions of graded pieces or statistic fibers."""

    n: int
    counts: tuple[tuple[int, int], ...]

    @classmethod
    def from_dict(cls, n: int, counts) -> "DegreeHistogram":
        return cls(n, tuple(sorted((d, c) for d, c in counts.items() if c)))

    def as_dict(self) -> dict[int, int]:
        return dict(self.counts)

    def total(self) -> int:
        return sum(c for _, c in self.counts)

    def as_qpoly(self) -> QPoly:
        return QPoly.from_dict(self.as_dict())


def _check_parity(n: int, a: int) -> None:
    if not 0 <= a <= n:
        raise DomainError(f"need 0 <= a <= n, got a={a}, n={n}")
    if (n - a) % 2 == 1:
        raise DomainError(f"a must have the parity of n, got a={a}, n={n}")


def grfrob_matchings(n: int) -> SchurSeries:
    """Graded Frobenius image of the all-involutions quotient.

    Grade k carries the induction product of the rank-k perfect-matching
    module with a trivial module: s_k[s_2] * s_{n-2k}.
    """
    if n < 0:
        raise DomainError(f"negative n: {n}")
    total = SchurSeries.zero(n)
    for k in range(n // 2 + 1):
        total = total + pieri_multiply(plethysm_sd_s2(k), n - 2 * k).shift(k)
    return total


def hilb_matchings(n: int) -> QPoly:
    """Hilbert series of the all-involutions quotient: sum of C(n,2d)(2d-1)!! q^d."""
    if n < 0:
        raise DomainError(f"negative n: {n}")
    return QPoly(
        [comb(n, 2 * d) * double_factorial(2 * d - 1) for d in range(n // 2 + 1)]
    )


def grfrob_pm(n: int) -> SchurSeries:
    """Graded Frobenius image of the perfect-matching quotient.

    The multiplicity-free sum over even lambda of n, with s_lambda placed
    at grade (n - lambda_1)/2.
    """
    if n < 0 or n % 2 == 1:
        raise DomainError(f"perfect matchings need even n >= 0, got {n}")
    terms = {}
    for mu in partitions_of(n // 2):
        lam = tuple(2 * p for p in mu)
        terms[((n - first_part(lam)) // 2, lam)] = 1
    return SchurSeries(n, terms)


def hilb_pm(n: int) -> QPoly:
    """Hilbert series of the perfect-matching quotient.

    Sums hook-length tableau counts of even shapes, bucketed by
    (n - lambda_1)/2.  Stays exact and fast at n = 100 (the even shapes
    are doubled partitions of n/2).
    """
    if n < 0 or n % 2 == 1:
        raise DomainError(f"perfect matchings need even n >= 0, got {n}")
    if n == 0:
        return QPoly([1])
    numerator = factorial(n)
    buckets: dict[int, int] = {}
    for mu in partitions_of(n // 2):
        lam = [2 * p for p in mu]
        cols = [0] * lam[0]
        for part in lam:
            for j in range(part):
                cols[j] += 1
        hooks = prod(
            lam[i] - j + cols[j] - i - 1
            for i in range(len(lam))
            for j in range(lam[i])
        )
        d = (n - lam[0]) // 2
        buckets[d] = buckets.get(d, 0) + numerator // hooks
    return QPoly.from_dict(buckets)


def pm_lds_histogram(n: int, limit: int = DEFAULT_ENUMERATION_BOUND) -> DegreeHistogram:
    """Histogram of (n - lds(w))/2 over all perfect matchings, by enumeration.

    This is the statistic side of the Hilbert series equivalence and is
    deliberately computed through Schensted insertion, independent of the
    hook-length route in ``hilb_pm``.
    """
    if n < 0 or n % 2 == 1:
        raise DomainError(f"perfect matchings need even n >= 0, got {n}")
    if n > limit:
        raise ResourceLimitError(
            f"perfect-matching enumeration capped at n <= {limit}, got {n}"
        )
    counts: dict[int, int] = {}
    for w in enumerate_locus(perfect_matchings(n)):
        d = (n - lds(w.word())) // 2
        counts[d] = counts.get(d, 0) + 1
    return DegreeHistogram.from_dict(n, counts)


def ungraded_frob_conjugacy(n: int, a: int) -> SchurSeries:
    """Ungraded Frobenius image of the a-fixed-point conjugacy class module.

    The induction product s_{(n-a)/2}[s_2] * s_a, expanded by the Pieri
    rule, at the single grade 0.
    """
    _check_parity(n, a)
    return pieri_multiply(plethysm_sd_s2((n - a) // 2), a)


def grfrob_conjugacy(n: int, a: int) -> SchurSeries:
    """Graded Frobenius image of the a-fixed-point conjugacy class quotient.

    Grade d carries the first-row truncation (lambda_1 <= n - 2d + a) of
    the difference s_d[s_2] s_{n-2d} - s_{d-1}[s_2] s_{n-2d+2}, with the
    d = 0 difference term absent (the plethysm index -1 is read as 0).
    Signed intermediates are expected; a negative coefficient surviving
    truncation is impossible for a module and raises.
    """
    _check_parity(n, a)
    total = SchurSeries.zero(n)
    for d in range((n - a) // 2 + 1):
        term = pieri_multiply(plethysm_sd_s2(d), n - 2 * d)
        if d >= 1:
            term = term - pieri_multiply(plethysm_sd_s2(d - 1), n - 2 * d + 2)
        term = truncate_first_row(term, high=n - 2 * d + a)
        if not term.is_nonnegative():
            raise InternalCheckError(
                f"negative multiplicity in conjugacy series n={n}, a={a}, grade {d}"
            )
        total = total + term.shift(d)
    return total


def hilb_conjugacy(n: int, a: int) -> QPoly:
    """Hilbert series of the a-fixed-point conjugacy class quotient (hook-length dimensions)."""
    return grfrob_conjugacy(n, a).dimension_series(count_syt)


def conjugacy_schur_coefficient(lam, a: int, d: int) -> int:
    """Coefficient of s_lambda in s_d[s_2] * s_a, by the closed interval-product formula.

    A horizontal strip removed from lambda can only shorten the last row
    of each block of equal parts, and what remains must be an even
    partition; so the coefficient vanishes outright whenever an odd part
    value repeats.  Otherwise, write the distinct part values as
    v_1 > ... > v_m and set delta_i = v_i mod 2: the coefficient is the
    coefficient of q^((a - sum delta_i)/2) in the product over i of
    1 + q + ... + q^(floor(v_i/2) - ceil(v_{i+1}/2)), with v_{m+1} = 0,
    and a negative or fractional target exponent gives 0.
    """
    lam = validate_partition(lam)
    if a < 0 or d < 0:
        raise DomainError(f"need a, d >= 0, got a={a}, d={d}")
    if sum(lam) != a + 2 * d:
        raise DomainError(f"partition {lam} does not have size {a + 2 * d}")
    for value in set(lam):
        if value % 2 == 1 and lam.count(value) > 1:
            return 0
    values = sorted(set(lam), reverse=True)
    deltas = [v % 2 for v in values]
    target2 = a - sum(deltas)
    if target2 < 0 or target2 % 2 == 1:
        return 0
    target = target2 // 2
    poly = [1]
    for i, v in enumerate(values):
        nxt = values[i + 1] if i + 1 < len(values) else 0
        width = v // 2 - (nxt + 1) // 2
        if width < 0:
            return 0
        new = [0] * (len(poly) + width)
        for e, c in enumerate(poly):
            for j in range(width + 1):
                new[e + j] += c
        poly = new
    return poly[target] if target < len(poly) else 0


def first_row_stratification_identity(n: int, a: int) -> bool:
    """Check that the truncated differences over all grades resum to the full product.

    Sums {s_d[s_2] s_{n-2d} - s_{d-1}[s_2] s_{n-2d+2}}_{lambda_1 <= n-2d+a}
    over 0 <= d <= (n-a)/2 and compares with s_{(n-a)/2}[s_2] * s_a.
    """
    _check_parity(n, a)
    lhs = SchurSeries.zero(n)
    for d in range((n - a) // 2 + 1):
        term = pieri_multiply(plethysm_sd_s2(d), n - 2 * d)
        if d >= 1:
            term = term - pieri_multiply(plethysm_sd_s2(d - 1), n - 2 * d + 2)
        lhs = lhs + truncate_first_row(term, high=n - 2 * d + a)
    return lhs == ungraded_frob_conjugacy(n, a)


def paired_truncation_identity(n: int) -> bool:
    """Check that the two-step first-row truncations tile the involution module sum.

    Compares sum_d ({F_d}_{lambda_1 <= 2(n-2d)} + {F_d}_{lambda_1 <= 2(n-2d)-2})
    with sum_d F_d, where F_d = s_d[s_2] * s_{n-2d}.
    """
    if n < 0:
        raise DomainError(f"negative n: {n}")
    lhs = SchurSeries.zero(n)
    rhs = SchurSeries.zero(n)
    for d in range(n // 2 + 1):
        term = pieri_multiply(plethysm_sd_s2(d), n - 2 * d)
        bound = 2 * (n - 2 * d)
        lhs = lhs + truncate_first_row(term, high=bound)
        lhs = lhs + truncate_first_row(term, high=bound - 2)
        rhs = rhs + term
    return lhs == rhs


def matchings_degree_histogram(n: int) -> DegreeHistogram:
    """Coefficient table of the all-involutions Hilbert series (closed form, any n)."""
    poly = hilb_matchings(n)
    return DegreeHistogram.from_dict(
        n, {d: poly.coefficient(d) for d in range(poly.degree + 1)}
    )


def pm_degree_histogram(n: int) -> DegreeHistogram:
    """Coefficient table of the perfect-matching Hilbert series via hook lengths."""
    poly = hilb_pm(n)
    return DegreeHistogram.from_dict(
        n, {d: poly.coefficient(d) for d in range(poly.degree + 1)}
    )
