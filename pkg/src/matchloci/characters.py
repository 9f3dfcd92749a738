"""Symmetric group character arithmetic.

Character tables are built once per n by the Murnaghan-Nakayama border
strip recursion and cached behind an immutable handle; everything
downstream (Frobenius decomposition, Kronecker products, the equivariant
log-concavity test) works through exact rational inner products.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from math import factorial
from typing import NamedTuple

from .errors import DomainError, ResourceLimitError
from .partitions import Partition, partitions_of, validate_partition
from .schur import SchurSeries

DEFAULT_TABLE_BOUND = 15


@cache
def _mn_character(lam: Partition, mu: Partition) -> int:
    """Character value chi^lam(mu) by border strip removal on beta numbers."""
    if not lam:
        return 1
    strip = mu[0]
    rest = mu[1:]
    length = len(lam)
    beta = [lam[i] + (length - 1 - i) for i in range(length)]
    beta_set = set(beta)
    total = 0
    for b in beta:
        c = b - strip
        if c < 0 or c in beta_set:
            continue
        height = sum(1 for x in beta if c < x < b)
        new_beta = sorted([x for x in beta if x != b] + [c], reverse=True)
        m = len(new_beta)
        new_lam = tuple(
            p for p in (new_beta[i] - (m - 1 - i) for i in range(m)) if p > 0
        )
        total += (-1) ** height * _mn_character(new_lam, rest)
    return total


def class_size(mu: Partition) -> int:
    """Size of the conjugacy class of cycle type mu: n! / prod(i^{m_i} m_i!)."""
    mu = validate_partition(mu)
    n = sum(mu)
    centralizer = 1
    mult: dict[int, int] = {}
    for part in mu:
        mult[part] = mult.get(part, 0) + 1
    for part, m in mult.items():
        centralizer *= part**m * factorial(m)
    return factorial(n) // centralizer


@dataclass(frozen=True)
class ClassFunction:
    """A rational-valued function on conjugacy classes, keyed by cycle type."""

    n: int
    values: tuple[tuple[Partition, Fraction], ...]

    @classmethod
    def from_dict(cls, n: int, mapping) -> "ClassFunction":
        parts = partitions_of(n)
        missing = [mu for mu in parts if mu not in mapping]
        if missing or len(mapping) != len(parts):
            raise DomainError(
                f"class function keys must be exactly the partitions of {n}"
            )
        return cls(n, tuple((mu, Fraction(mapping[mu])) for mu in parts))

    def value(self, mu) -> Fraction:
        mu = validate_partition(mu)
        for key, v in self.values:
            if key == mu:
                return v
        raise DomainError(f"{mu} is not a cycle type of size {self.n}")

    def as_dict(self) -> dict[Partition, Fraction]:
        return dict(self.values)

    def pointwise_product(self, other: "ClassFunction") -> "ClassFunction":
        if self.n != other.n:
            raise DomainError(f"size mismatch: {self.n} vs {other.n}")
        rhs = other.as_dict()
        return ClassFunction(
            self.n, tuple((mu, v * rhs[mu]) for mu, v in self.values)
        )

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        if self.n != other.n:
            raise DomainError(f"size mismatch: {self.n} vs {other.n}")
        rhs = other.as_dict()
        return ClassFunction(
            self.n, tuple((mu, v + rhs[mu]) for mu, v in self.values)
        )


class CharacterTable:
    """Exact integer character table of the symmetric group of degree n.

    Rows are irreducibles chi^lam, columns are cycle types mu, both in
    reverse lexicographic order.  Instances are immutable; build them via
    ``character_table`` which caches one per n.
    """

    def __init__(self, n: int):
        self._n = n
        self._parts = partitions_of(n)
        self._values = {
            (lam, mu): _mn_character(lam, mu)
            for lam in self._parts
            for mu in self._parts
        }
        self._class_sizes = {mu: class_size(mu) for mu in self._parts}

    @property
    def n(self) -> int:
        return self._n

    @property
    def partitions(self) -> tuple[Partition, ...]:
        return self._parts

    def value(self, lam, mu) -> int:
        lam = validate_partition(lam)
        mu = validate_partition(mu)
        try:
            return self._values[(lam, mu)]
        except KeyError:
            raise DomainError(f"({lam}, {mu}) is not indexed by partitions of {self._n}")

    def class_size(self, mu) -> int:
        return self._class_sizes[validate_partition(mu)]

    def irreducible(self, lam) -> ClassFunction:
        lam = validate_partition(lam)
        return ClassFunction(
            self._n,
            tuple((mu, Fraction(self._values[(lam, mu)])) for mu in self._parts),
        )


@cache
def _cached_table(n: int) -> CharacterTable:
    return CharacterTable(n)


def character_table(n: int, bound: int = DEFAULT_TABLE_BOUND) -> CharacterTable:
    """The character table for degree n, cached; guarded by a size bound."""
    if n < 0:
        raise DomainError(f"negative n: {n}")
    if n > bound:
        raise ResourceLimitError(
            f"character table capped at n <= {bound}, got {n}"
        )
    return _cached_table(n)


def schur_to_class_function(series: SchurSeries, bound: int = DEFAULT_TABLE_BOUND) -> ClassFunction:
    """Turn a single-grade Schur expansion into the corresponding character."""
    grades = series.grades()
    if len(grades) > 1:
        raise DomainError(f"expected a single grade, got grades {grades}")
    table = character_table(series.n, bound)
    totals = {mu: Fraction(0) for mu in table.partitions}
    for (_, lam), coeff in series.terms():
        for mu in table.partitions:
            totals[mu] += coeff * table.value(lam, mu)
    return ClassFunction.from_dict(series.n, totals)


def decompose_class_function(f: ClassFunction, bound: int = DEFAULT_TABLE_BOUND) -> SchurSeries:
    """Expand a virtual character into Schur functions at grade 0.

    Multiplicities come from the exact inner product
    (1/n!) * sum_mu |K_mu| f(mu) chi^lam(mu); any non-integral multiplicity
    means the input was not a virtual character and raises.
    """
    table = character_table(f.n, bound)
    order = factorial(f.n)
    fvals = f.as_dict()
    terms = {}
    for lam in table.partitions:
        inner = sum(
            table.class_size(mu) * fvals[mu] * table.value(lam, mu)
            for mu in table.partitions
        )
        mult = Fraction(inner, order)
        if mult.denominator != 1:
            raise DomainError(
                f"non-integral multiplicity {mult} at {lam}: not a virtual character"
            )
        if mult:
            terms[(0, lam)] = int(mult)
    return SchurSeries(f.n, terms)


def kronecker_multiplicities(
    a: SchurSeries, b: SchurSeries, bound: int = DEFAULT_TABLE_BOUND
) -> SchurSeries:
    """Schur expansion of the internal (Kronecker) tensor product of two grade-0 series."""
    if a.n != b.n:
        raise DomainError(f"size mismatch: {a.n} vs {b.n}")
    product = schur_to_class_function(a, bound).pointwise_product(
        schur_to_class_function(b, bound)
    )
    return decompose_class_function(product, bound)


class LogConcavityResult(NamedTuple):
    ok: bool
    witness: tuple[int, Partition] | None


def equivariant_log_concave(
    series: SchurSeries, bound: int = DEFAULT_TABLE_BOUND
) -> LogConcavityResult:
    """Test module-level log-concavity of a graded series with nonnegative coefficients.

    For every interior grade d the tensor square of grade d must contain
    the tensor product of grades d-1 and d+1, multiplicity by multiplicity;
    for symmetric group modules that dominance is exactly the existence of
    an equivariant embedding.  Returns the first offending (grade,
    partition) as a witness on failure.
    """
    if not series.is_nonnegative():
        raise DomainError("series with negative coefficients is not a graded module")
    top = series.max_grade()
    grade_chars = {}
    table = character_table(series.n, bound)
    for d in range(top + 1):
        part = SchurSeries(
            series.n,
            {(0, lam): c for (g, lam), c in series.terms() if g == d},
        )
        grade_chars[d] = schur_to_class_function(part, bound)
    for d in range(1, top):
        square = decompose_class_function(
            grade_chars[d].pointwise_product(grade_chars[d]), bound
        )
        cross = decompose_class_function(
            grade_chars[d - 1].pointwise_product(grade_chars[d + 1]), bound
        )
        for lam in table.partitions:
            if cross.coefficient(0, lam) > square.coefficient(0, lam):
                return LogConcavityResult(False, (d, lam))
    return LogConcavityResult(True, None)
