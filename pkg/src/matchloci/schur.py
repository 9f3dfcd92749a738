"""Graded integer combinations of Schur functions of one homogeneous degree.

``SchurSeries`` is the working currency of the whole package: a map
``(grade, partition) -> coefficient`` where every partition has the same
size.  Coefficients are plain Python ints (arbitrary precision) and zero
coefficients are deleted eagerly, so structural equality is mathematical
equality.  ``QPoly`` is its dimension-counting shadow: a polynomial in the
grading variable q with integer coefficients.
"""

from .errors import DomainError
from .partitions import (
    Partition,
    even_partitions,
    first_part,
    validate_partition,
)


class QPoly:
    """Polynomial in the grading variable q with integer coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients=()):
        coeffs = [int(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self._coeffs = tuple(coeffs)

    @classmethod
    def from_dict(cls, counts) -> "QPoly":
        """Build from a ``degree -> coefficient`` mapping."""
        if not counts:
            return cls()
        top = max(counts)
        return cls([counts.get(d, 0) for d in range(top + 1)])

    @property
    def coefficients(self) -> tuple[int, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    def coefficient(self, d: int) -> int:
        if 0 <= d < len(self._coeffs):
            return self._coeffs[d]
        return 0

    def at_one(self) -> int:
        """The value at q = 1, i.e. the total mass of the coefficient sequence."""
        return sum(self._coeffs)

    def is_log_concave(self) -> bool:
        """Whether c_d^2 >= c_{d-1} * c_{d+1} holds at every interior index."""
        c = self._coeffs
        return all(c[d] * c[d] >= c[d - 1] * c[d + 1] for d in range(1, len(c) - 1))

    def __add__(self, other: "QPoly") -> "QPoly":
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        return QPoly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    def __eq__(self, other) -> bool:
        return isinstance(other, QPoly) and self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self):
        return f"QPoly({list(self._coeffs)})"


def _term_sort_key(item):
    (grade, lam), _ = item
    return (grade, tuple(-p for p in lam), len(lam))


class SchurSeries:
    """q-graded integer combination of Schur functions s_lambda with |lambda| = n.

    Terms are held in a ``(grade, partition) -> nonzero int`` map.  The
    series may carry negative coefficients (signed intermediates show up in
    truncated differences); consumers that represent actual modules check
    nonnegativity explicitly.
    """

    __slots__ = ("_n", "_terms")

    def __init__(self, n: int, terms=()):
        if n < 0:
            raise DomainError(f"homogeneous degree must be nonnegative, got {n}")
        self._n = n
        data = {}
        items = terms.items() if hasattr(terms, "items") else terms
        for (grade, lam), coeff in items:
            coeff = int(coeff)
            if coeff == 0:
                continue
            if grade < 0:
                raise DomainError(f"grades must be nonnegative, got {grade}")
            lam = validate_partition(lam)
            if sum(lam) != n:
                raise DomainError(f"partition {lam} does not have size {n}")
            key = (grade, lam)
            new = data.get(key, 0) + coeff
            if new:
                data[key] = new
            else:
                data.pop(key, None)
        self._terms = data

    @classmethod
    def zero(cls, n: int) -> "SchurSeries":
        return cls(n)

    @classmethod
    def single(cls, n: int, grade: int, lam, coeff: int = 1) -> "SchurSeries":
        return cls(n, {(grade, tuple(lam)): coeff})

    @property
    def n(self) -> int:
        """The common size of every indexing partition."""
        return self._n

    def terms(self) -> tuple:
        """Terms as ``((grade, partition), coefficient)`` sorted by (grade, reverse-lex)."""
        return tuple(sorted(self._terms.items(), key=_term_sort_key))

    def coefficient(self, grade: int, lam) -> int:
        lam = validate_partition(lam)
        if sum(lam) != self._n:
            raise DomainError(f"partition {lam} does not have size {self._n}")
        return self._terms.get((grade, lam), 0)

    def grades(self) -> tuple[int, ...]:
        return tuple(sorted({g for g, _ in self._terms}))

    def max_grade(self) -> int:
        """Largest grade carrying a nonzero term; -1 for the zero series."""
        return max((g for g, _ in self._terms), default=-1)

    def grade_part(self, grade: int) -> "SchurSeries":
        """The single-grade slice, kept at its original grade."""
        return SchurSeries(
            self._n,
            {(g, lam): c for (g, lam), c in self._terms.items() if g == grade},
        )

    def at_q1(self) -> "SchurSeries":
        """Collapse all grades to 0 (evaluate the grading variable at 1)."""
        out = {}
        for (_, lam), c in self._terms.items():
            out[(0, lam)] = out.get((0, lam), 0) + c
        return SchurSeries(self._n, out)

    def shift(self, k: int) -> "SchurSeries":
        """Multiply by q^k."""
        return SchurSeries(
            self._n, {(g + k, lam): c for (g, lam), c in self._terms.items()}
        )

    def scale(self, factor: int) -> "SchurSeries":
        return SchurSeries(
            self._n, {key: factor * c for key, c in self._terms.items()}
        )

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self._terms.values())

    def is_zero(self) -> bool:
        return not self._terms

    def dimension_series(self, dim_of_partition) -> QPoly:
        """Apply a partition -> dimension functional termwise, yielding a QPoly."""
        buckets = {}
        for (g, lam), c in self._terms.items():
            buckets[g] = buckets.get(g, 0) + c * dim_of_partition(lam)
        return QPoly.from_dict(buckets)

    def __add__(self, other: "SchurSeries") -> "SchurSeries":
        if self._n != other._n:
            raise DomainError(
                f"cannot add series of degrees {self._n} and {other._n}"
            )
        out = dict(self._terms)
        for key, c in other._terms.items():
            new = out.get(key, 0) + c
            if new:
                out[key] = new
            else:
                out.pop(key, None)
        return SchurSeries(self._n, out)

    def __sub__(self, other: "SchurSeries") -> "SchurSeries":
        return self + other.scale(-1)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SchurSeries)
            and self._n == other._n
            and self._terms == other._terms
        )

    def __hash__(self):
        return hash((self._n, frozenset(self._terms.items())))

    def __repr__(self):
        body = " + ".join(
            f"{c}*q^{g}*s{list(lam)}" for (g, lam), c in self.terms()
        )
        return f"SchurSeries(n={self._n}: {body or '0'})"


def horizontal_strip_extensions(lam: Partition, boxes: int):
    """Yield the partitions obtained from ``lam`` by adding a horizontal strip.

    A horizontal strip of size ``boxes`` adds that many cells, no two in the
    same column; equivalently the result ``nu`` interlaces ``lam``:
    nu_1 >= lam_1 >= nu_2 >= lam_2 >= ...
    """
    lam = validate_partition(lam)
    rows = len(lam)

    def gen(row, remaining, prev_part):
        # prev_part bounds this row's size from above only through the
        # interlacing cap on additions below row 1.
        if row == rows:
            # one optional new bottom row, capped by the last old part
            cap = lam[rows - 1] if rows else 0
            if remaining == 0:
                yield ()
            elif rows == 0 or remaining <= cap:
                yield (remaining,)
            return
        base = lam[row]
        cap_add = remaining if row == 0 else min(remaining, prev_part - base)
        for add in range(cap_add, -1, -1):
            part = base + add
            for rest in gen(row + 1, remaining - add, base):
                yield (part, *rest)

    for nu in gen(0, boxes, 0):
        yield tuple(p for p in nu if p > 0)


def pieri_multiply(series: SchurSeries, boxes: int) -> SchurSeries:
    """Multiply by the single-row Schur function s_(boxes) via the Pieri rule.

    Each term s_lambda becomes the sum of s_nu over all nu adding a
    horizontal strip of ``boxes`` cells to lambda; grades are untouched and
    coefficients accumulate.
    """
    if boxes < 0:
        raise DomainError(f"strip size must be nonnegative, got {boxes}")
    if boxes == 0:
        return series
    out = {}
    for (grade, lam), coeff in series.terms():
        for nu in horizontal_strip_extensions(lam, boxes):
            key = (grade, nu)
            out[key] = out.get(key, 0) + coeff
    return SchurSeries(series.n + boxes, out)


def plethysm_sd_s2(d: int) -> SchurSeries:
    """The plethysm s_d[s_2]: the multiplicity-free sum of s_lambda over even lambda of 2d.

    This is the Frobenius image of the symmetric group of degree 2d acting
    on perfect matchings of 2d points; it sits at grade 0.
    """
    if d < 0:
        raise DomainError(f"plethysm index must be nonnegative, got {d}")
    return SchurSeries(2 * d, {(0, lam): 1 for lam in even_partitions(2 * d)})


def truncate_first_row(series: SchurSeries, low: int = 0, high=None) -> SchurSeries:
    """Keep only terms whose first row length lies in [low, high].

    ``high=None`` means unbounded above.  The three predicate shapes in use
    are lambda_1 <= a (``high=a``), lambda_1 = a (``low=high=a``) and a
    two-sided range.
    """
    kept = {
        (g, lam): c
        for (g, lam), c in series.terms()
        if low <= first_part(lam) and (high is None or first_part(lam) <= high)
    }
    return SchurSeries(series.n, kept)


def schur_coefficient(series: SchurSeries, grade: int, lam) -> int:
    """The stored coefficient of s_lambda at the given grade (0 if absent)."""
    return series.coefficient(grade, lam)
