"""Brute-force ground truth for the locus quotients.

The orbit-harmonics quotient of a finite locus has, in each degree d, the
dimension rank(E_{<=d}) - rank(E_{<=d-1}) where E_{<=d} is the points-by-
monomials evaluation matrix up to degree d, and its character is the trace
of the orthogonal projection onto the degree-filtered function space
composed with the conjugation permutation.  This module computes both with
exact integer/rational arithmetic, plus degree-truncated Hilbert functions
of the explicit generator ideals, so every closed formula in ``formulas``
can be checked against independent linear algebra.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from itertools import combinations, combinations_with_replacement
from math import comb

from .characters import ClassFunction, decompose_class_function
from .errors import DomainError, InternalCheckError, ResourceLimitError
from .linalg import (
    DenseIntegerEchelon,
    DenseModularEchelon,
    SparseIntegerEchelon,
    SparseModularEchelon,
    deterministic_prime,
    invert_fraction_matrix,
)
from .loci import (
    KIND_FIXED,
    KIND_MATCHINGS,
    KIND_PM,
    Involution,
    LocusSpec,
    conjugate_involution,
    enumerate_locus,
    fixed_count,
    locus_size,
)
from .partitions import first_part, partitions_of
from .schur import QPoly, SchurSeries

DEFAULT_ORACLE_BOUND = 6
DEFAULT_COLUMN_LIMIT = 500_000

Monomial = tuple[int, ...]


def variable_index(i: int, j: int, n: int) -> int:
    """Flat row-major index of the matrix variable x_{i,j} (1-based i, j)."""
    return (i - 1) * n + (j - 1)


def monomial_count(num_vars: int, degree: int) -> int:
    """Number of monomials of exact degree ``degree`` in ``num_vars`` variables."""
    if degree == 0:
        return 1
    return comb(num_vars + degree - 1, degree)


def monomials_of_degree(n: int, degree: int):
    """Degree-``degree`` monomials in the n*n matrix variables.

    A monomial is a sorted tuple of flat variable indices with repetition;
    the iteration order (lexicographic on that tuple) is the documented
    row-major order and is stable across runs.
    """
    return combinations_with_replacement(range(n * n), degree)


def _support_constraints(mon: Monomial, n: int):
    """The partial involution forced by a monomial's support, or None if inconsistent.

    x_{i,j} = 1 on an involution matrix exactly when w(i) = j, which also
    forces w(j) = i; a support is inconsistent when some letter is sent to
    two different places.
    """
    partner: dict[int, int] = {}
    for idx in set(mon):
        i, j = divmod(idx, n)
        i, j = i + 1, j + 1
        for a, b in ((i, j), (j, i)):
            if partner.setdefault(a, b) != b:
                return None
    pairs = frozenset(
        (min(a, b), max(a, b)) for a, b in partner.items() if a != b
    )
    fixed = frozenset(a for a, b in partner.items() if a == b)
    return pairs, fixed


def default_degree_cap(spec: LocusSpec) -> int:
    """One degree past the guaranteed top of the quotient, so vanishing is shown, not assumed."""
    if spec.kind == KIND_FIXED:
        return (spec.n - spec.a) // 2 + 1
    return spec.n // 2 + 1


def _check_bound(spec: LocusSpec, bound: int) -> None:
    if spec.n > bound:
        raise ResourceLimitError(
            f"oracle runs are capped at n <= {bound}, got n = {spec.n}"
        )


@dataclass(frozen=True)
class EvaluationMatrix:
    """The full points-by-monomials 0/1 evaluation matrix of a locus.

    Rows are locus points in enumeration order; columns are all monomials
    of degree <= max_deg in the n*n matrix variables, in graded row-major
    order.  Columns are packed as bitmasks (bit r = value at row r).
    """

    spec: LocusSpec
    max_deg: int
    points: tuple[Involution, ...]
    monomials: tuple[Monomial, ...]
    columns: tuple[int, ...]

    @classmethod
    def build(
        cls,
        spec: LocusSpec,
        max_deg: int,
        column_limit: int = DEFAULT_COLUMN_LIMIT,
    ) -> "EvaluationMatrix":
        n = spec.n
        total = sum(monomial_count(n * n, d) for d in range(max_deg + 1))
        if total > column_limit:
            raise ResourceLimitError(
                f"{total} columns exceed the configured limit {column_limit}"
            )
        points = enumerate_locus(spec)
        point_pairs = [frozenset(w.pairs) for w in points]
        point_fixed = [frozenset(w.fixed) for w in points]
        mask_cache: dict = {}
        monomials = []
        columns = []
        for d in range(max_deg + 1):
            for mon in monomials_of_degree(n, d):
                constraints = _support_constraints(mon, n)
                if constraints is None:
                    mask = 0
                elif constraints in mask_cache:
                    mask = mask_cache[constraints]
                else:
                    pairs, fixed = constraints
                    mask = 0
                    for r in range(len(points)):
                        if pairs <= point_pairs[r] and fixed <= point_fixed[r]:
                            mask |= 1 << r
                    mask_cache[constraints] = mask
                monomials.append(mon)
                columns.append(mask)
        return cls(spec, max_deg, points, tuple(monomials), tuple(columns))

    @property
    def row_count(self) -> int:
        return len(self.points)

    @property
    def column_count(self) -> int:
        return len(self.monomials)

    def entry(self, row: int, col: int) -> int:
        return (self.columns[col] >> row) & 1

    def column(self, col: int) -> tuple[int, ...]:
        mask = self.columns[col]
        return tuple((mask >> r) & 1 for r in range(len(self.points)))


def _pair_sets(avail: tuple[int, ...], count: int):
    """Sets of ``count`` disjoint pairs from ``avail``, smallest element matched first."""
    if count == 0:
        yield ()
        return
    if 2 * count > len(avail):
        return
    m, rest = avail[0], avail[1:]
    for idx, partner in enumerate(rest):
        remaining = rest[:idx] + rest[idx + 1 :]
        for more in _pair_sets(remaining, count - 1):
            yield ((m, partner), *more)
    yield from _pair_sets(rest, count)


def _partial_involutions_by_cost(n: int, max_cost: int):
    """Bucket partial involutions (pair set, declared fixed set) by pair+fixed count.

    Cost c is the least degree of a monomial whose support forces exactly
    these constraints, so bucket c holds precisely the new evaluation
    columns that can appear at filtration degree c.
    """
    buckets: list[list] = [[] for _ in range(max_cost + 1)]
    elements = tuple(range(1, n + 1))
    for p in range(min(n // 2, max_cost) + 1):
        for pairs in _pair_sets(elements, p):
            used = {x for pair in pairs for x in pair}
            rest = tuple(i for i in elements if i not in used)
            for f in range(min(len(rest), max_cost - p) + 1):
                for fixed in combinations(rest, f):
                    buckets[p + f].append((pairs, fixed))
    return buckets


@dataclass(frozen=True)
class _Filtration:
    points: tuple[Involution, ...]
    basis: tuple[tuple[int, ...], ...]
    level_ranks: tuple[int, ...]


@cache
def _support_filtration(spec: LocusSpec, max_deg: int) -> _Filtration:
    """Echelon basis of the evaluation column space, level by filtration degree.

    Works over the deduplicated support columns; ``graded_hilbert_oracle``
    with engine="full" reproduces the same ranks from the literal monomial
    stream, and the two are cross-checked in tests.
    """
    points = enumerate_locus(spec)
    point_pairs = [set(w.pairs) for w in points]
    point_fixed = [set(w.fixed) for w in points]
    echelon = DenseIntegerEchelon(len(points))
    level_ranks = []
    buckets = _partial_involutions_by_cost(spec.n, max_deg)
    for d in range(max_deg + 1):
        for pairs, fixed in buckets[d]:
            ps, fs = set(pairs), set(fixed)
            vec = [
                1 if ps <= pp and fs <= pf else 0
                for pp, pf in zip(point_pairs, point_fixed)
            ]
            if any(vec):
                echelon.add(vec)
        level_ranks.append(echelon.rank)
    return _Filtration(points, tuple(echelon.basis), tuple(level_ranks))


def _full_stream_ranks(spec: LocusSpec, max_deg: int, echelon_factory):
    """Level ranks from the literal every-monomial column stream."""
    points = enumerate_locus(spec)
    point_pairs = [frozenset(w.pairs) for w in points]
    point_fixed = [frozenset(w.fixed) for w in points]
    echelon = echelon_factory(len(points))
    vec_cache: dict = {}
    level_ranks = []
    for d in range(max_deg + 1):
        for mon in monomials_of_degree(spec.n, d):
            constraints = _support_constraints(mon, spec.n)
            if constraints is None:
                continue
            if constraints not in vec_cache:
                pairs, fixed = constraints
                vec_cache[constraints] = [
                    1 if pairs <= pp and fixed <= pf else 0
                    for pp, pf in zip(point_pairs, point_fixed)
                ]
            vec = vec_cache[constraints]
            if any(vec):
                echelon.add(vec)
        level_ranks.append(echelon.rank)
    return tuple(level_ranks)


def graded_hilbert_oracle(
    spec: LocusSpec,
    max_deg: int | None = None,
    bound: int = DEFAULT_ORACLE_BOUND,
    engine: str = "support",
    modular: bool = False,
) -> QPoly:
    """Exact graded dimensions of the locus quotient from evaluation-matrix ranks.

    dim in degree d is rank(E_{<=d}) - rank(E_{<=d-1}).  With
    ``modular=True`` the ranks run over a deterministic prime field; for
    n <= 5 the exact ranks are still computed and must agree.
    """
    _check_bound(spec, bound)
    if max_deg is None:
        max_deg = default_degree_cap(spec)
    if engine == "support":
        level_ranks = _support_filtration(spec, max_deg).level_ranks
    elif engine == "full":
        level_ranks = _full_stream_ranks(
            spec, max_deg, lambda length: DenseIntegerEchelon(length)
        )
    else:
        raise DomainError(f"unknown engine {engine!r}")
    if modular:
        p = deterministic_prime(max(locus_size(spec), 2))
        mod_ranks = _full_stream_ranks(
            spec, max_deg, lambda length: DenseModularEchelon(length, p)
        )
        if spec.n <= 5 and mod_ranks != level_ranks:
            raise InternalCheckError(
                f"modular ranks {mod_ranks} disagree with exact ranks {level_ranks}"
            )
        level_ranks = mod_ranks
    dims = [level_ranks[0]] + [
        level_ranks[d] - level_ranks[d - 1] for d in range(1, max_deg + 1)
    ]
    return QPoly(dims)


def class_representative_word(mu, n: int) -> tuple[int, ...]:
    """The permutation of cycle type mu whose cycles are consecutive ascending blocks."""
    if sum(mu) != n:
        raise DomainError(f"cycle type {mu} does not have size {n}")
    images = list(range(1, n + 1))
    start = 1
    for part in mu:
        for offset in range(part):
            images[start + offset - 1] = start + (offset + 1) % part
        start += part
    return tuple(images)


@cache
def _level_traces(spec: LocusSpec, max_deg: int):
    """Per-level, per-class traces of projection-onto-filtration composed with conjugation.

    Returns (classes, levels) where levels[d][mu] is
    tr(P_{W<=d} . rho(g_mu)) as an exact Fraction.
    """
    filtration = _support_filtration(spec, max_deg)
    points, basis = filtration.points, filtration.basis
    index = {w: r for r, w in enumerate(points)}
    length = len(points)
    rank_total = len(basis)

    gram = [[0] * rank_total for _ in range(rank_total)]
    for i in range(rank_total):
        for j in range(i, rank_total):
            s = sum(a * b for a, b in zip(basis[i], basis[j]))
            gram[i][j] = s
            gram[j][i] = s

    inverses: dict[int, list[list[Fraction]]] = {}
    for r in set(filtration.level_ranks):
        inverses[r] = invert_fraction_matrix(
            [row[:r] for row in gram[:r]]
        )

    classes = partitions_of(spec.n)
    levels = []
    # M[a][b] = sum_z basis[a][perm[z]] * basis[b][z], i.e. Bt . rho(g) . B
    m_matrices = {}
    for mu in classes:
        word = class_representative_word(mu, spec.n)
        perm = [index[conjugate_involution(word, points[r])] for r in range(length)]
        m = [[0] * rank_total for _ in range(rank_total)]
        shuffled = [[vec[perm[z]] for z in range(length)] for vec in basis]
        for a in range(rank_total):
            va = shuffled[a]
            for b in range(rank_total):
                vb = basis[b]
                m[a][b] = sum(x * y for x, y in zip(va, vb))
        m_matrices[mu] = m
    for d in range(max_deg + 1):
        r = filtration.level_ranks[d]
        ginv = inverses[r]
        traces = {}
        for mu in classes:
            m = m_matrices[mu]
            total = Fraction(0)
            for i in range(r):
                gi = ginv[i]
                total += sum(gi[j] * m[j][i] for j in range(r))
            traces[mu] = total
        levels.append(traces)
    return classes, tuple(levels)


def graded_character_oracle(
    spec: LocusSpec,
    d: int,
    max_deg: int | None = None,
    bound: int = DEFAULT_ORACLE_BOUND,
) -> ClassFunction:
    """Character of the degree-d piece of the locus quotient, by projection traces."""
    _check_bound(spec, bound)
    if max_deg is None:
        max_deg = default_degree_cap(spec)
    if not 0 <= d <= max_deg:
        raise DomainError(f"degree {d} outside 0..{max_deg}")
    classes, levels = _level_traces(spec, max_deg)
    current = levels[d]
    previous = levels[d - 1] if d > 0 else {mu: Fraction(0) for mu in classes}
    return ClassFunction.from_dict(
        spec.n, {mu: current[mu] - previous[mu] for mu in classes}
    )


def grfrob_oracle(
    spec: LocusSpec,
    max_deg: int | None = None,
    bound: int = DEFAULT_ORACLE_BOUND,
) -> SchurSeries:
    """Graded Frobenius image of the locus quotient, decomposed grade by grade."""
    _check_bound(spec, bound)
    if max_deg is None:
        max_deg = default_degree_cap(spec)
    total = SchurSeries.zero(spec.n)
    for d in range(max_deg + 1):
        char = graded_character_oracle(spec, d, max_deg, bound)
        try:
            part = decompose_class_function(char, bound=max(spec.n, 1))
        except DomainError as exc:
            raise InternalCheckError(
                f"oracle character at degree {d} is not a virtual character: {exc}"
            ) from exc
        if not part.is_nonnegative():
            raise InternalCheckError(
                f"negative multiplicity in oracle decomposition at degree {d}"
            )
        total = total + part.shift(d)
    return total


@dataclass(frozen=True)
class IdealGenerators:
    """The explicit homogeneous generator list for one locus kind."""

    kind: str
    n: int
    a: int | None
    polys: tuple[tuple[tuple[Monomial, int], ...], ...]

    def polynomials(self) -> list[dict]:
        return [dict(p) for p in self.polys]


def ideal_generators(kind: str, n: int, a: int | None = None) -> IdealGenerators:
    """Row/column sums and products plus symmetric differences, specialized per kind.

    The perfect-matching kind adds the diagonal variables; the fixed-count
    kind adds the diagonal sum and every product of a+1 diagonal variables.
    """
    if n < 0:
        raise DomainError(f"negative n: {n}")
    polys: list[dict] = []

    def var(i, j):
        return variable_index(i, j, n)

    for i in range(1, n + 1):
        polys.append({(var(i, j),): 1 for j in range(1, n + 1)})
    for j in range(1, n + 1):
        polys.append({(var(i, j),): 1 for i in range(1, n + 1)})
    for i in range(1, n + 1):
        for j1, j2 in combinations(range(1, n + 1), 2):
            polys.append({tuple(sorted((var(i, j1), var(i, j2)))): 1})
    for j in range(1, n + 1):
        for i1, i2 in combinations(range(1, n + 1), 2):
            polys.append({tuple(sorted((var(i1, j), var(i2, j)))): 1})
    for i, j in combinations(range(1, n + 1), 2):
        polys.append({(var(i, j),): 1, (var(j, i),): -1})

    if kind == KIND_MATCHINGS:
        if a is not None:
            raise DomainError("a is only meaningful for the fixed kind")
    elif kind == KIND_PM:
        if n <= 0 or n % 2 == 1:
            raise DomainError(f"perfect-matching ideal needs even n > 0, got {n}")
        for i in range(1, n + 1):
            polys.append({(var(i, i),): 1})
    elif kind == KIND_FIXED:
        if a is None or not 0 <= a <= n or (n - a) % 2 == 1:
            raise DomainError(f"need 0 <= a <= n with the parity of n, got a={a}")
        polys.append({(var(i, i),): 1 for i in range(1, n + 1)})
        for subset in combinations(range(1, n + 1), a + 1):
            polys.append({tuple(sorted(var(i, i) for i in subset)): 1})
    else:
        raise DomainError(f"unknown ideal kind {kind!r}")

    frozen = tuple(tuple(sorted(p.items())) for p in polys)
    return IdealGenerators(kind, n, a, frozen)


def _merge_monomials(u: Monomial, v: Monomial) -> Monomial:
    return tuple(sorted(u + v))


def ideal_quotient_hilbert(
    gens: IdealGenerators, max_deg: int, modular: bool = False
) -> QPoly:
    """Hilbert function of the polynomial ring modulo the generated ideal, degrees 0..max_deg.

    The degree-D piece of the ideal is spanned by monomial multiples of the
    generators; its corank inside the full degree-D monomial space is the
    quotient dimension.  Homogeneity of every generator is what makes the
    per-degree computation exact.
    """
    num_vars = gens.n * gens.n
    poly_list = []
    for poly in gens.polynomials():
        degrees = {len(mon) for mon in poly}
        if len(degrees) > 1:
            raise DomainError(f"generator is not homogeneous: {poly}")
        poly_list.append((degrees.pop() if degrees else 0, poly))

    prime = deterministic_prime(1) if modular else None
    dims = []
    for total_deg in range(max_deg + 1):
        echelon = (
            SparseModularEchelon(prime) if modular else SparseIntegerEchelon()
        )
        seen = set()
        for gen_deg, poly in poly_list:
            if gen_deg > total_deg or not poly:
                continue
            for u in combinations_with_replacement(
                range(num_vars), total_deg - gen_deg
            ):
                row = {}
                for mon, coeff in poly.items():
                    key = _merge_monomials(u, mon)
                    row[key] = row.get(key, 0) + coeff
                row = {k: c for k, c in row.items() if c}
                if not row:
                    continue
                fingerprint = frozenset(row.items())
                if fingerprint in seen:
                    continue
                seen.add(fingerprint)
                echelon.add(row)
        dims.append(monomial_count(num_vars, total_deg) - echelon.rank)
    poly = QPoly(dims)
    if modular and gens.n <= 5:
        exact = ideal_quotient_hilbert(gens, max_deg, modular=False)
        if exact != poly:
            raise InternalCheckError(
                f"modular ideal dimensions {poly} disagree with exact {exact}"
            )
    return poly


def _locus_spec_for(kind: str, n: int, a: int | None) -> LocusSpec:
    if kind == KIND_FIXED:
        return fixed_count(n, a)
    return LocusSpec(kind, n)


@dataclass(frozen=True)
class IdealComparison:
    """Per-degree comparison of the generator-ideal quotient against the locus oracle."""

    kind: str
    n: int
    a: int | None
    max_deg: int
    ideal_dims: QPoly
    oracle_dims: QPoly
    equal: bool
    first_difference: int | None

    def rows(self):
        return [
            (d, self.ideal_dims.coefficient(d), self.oracle_dims.coefficient(d))
            for d in range(self.max_deg + 1)
        ]


def compare_ideal_with_locus(
    kind: str,
    n: int,
    a: int | None = None,
    max_deg: int | None = None,
    bound: int = DEFAULT_ORACLE_BOUND,
    modular: bool = False,
) -> IdealComparison:
    """Check whether the explicit generators cut out the full associated graded ideal.

    The generators always sit inside the associated graded ideal, so the
    ideal quotient can only be larger; a smaller ideal dimension in any
    degree is mathematically impossible and raises.
    """
    spec = _locus_spec_for(kind, n, a)
    _check_bound(spec, bound)
    if max_deg is None:
        max_deg = default_degree_cap(spec)
    ideal_dims = ideal_quotient_hilbert(
        ideal_generators(kind, n, a), max_deg, modular=modular
    )
    oracle_dims = graded_hilbert_oracle(spec, max_deg, bound, modular=modular)
    first_difference = None
    for d in range(max_deg + 1):
        ideal_d = ideal_dims.coefficient(d)
        oracle_d = oracle_dims.coefficient(d)
        if ideal_d < oracle_d:
            raise InternalCheckError(
                f"ideal quotient dimension {ideal_d} below oracle {oracle_d} "
                f"in degree {d} for kind={kind}, n={n}, a={a}"
            )
        if ideal_d != oracle_d and first_difference is None:
            first_difference = d
    return IdealComparison(
        kind,
        n,
        a,
        max_deg,
        ideal_dims,
        oracle_dims,
        first_difference is None,
        first_difference,
    )


def symmetrizer_annihilation_check(
    n: int,
    a: int,
    d: int,
    j: int,
    bound: int = DEFAULT_ORACLE_BOUND,
) -> bool:
    """Whether symmetrizing the first j letters kills the degree-d conjugacy quotient piece.

    Requires j > n - 2d + a (the regime where annihilation is asserted);
    equivalent to every irreducible in the oracle's degree-d decomposition
    having first row at most n - 2d + a.
    """
    if j > n:
        raise DomainError(f"need j <= n, got j={j}, n={n}")
    if j <= n - 2 * d + a:
        raise DomainError(
            f"annihilation regime needs j > n - 2d + a = {n - 2 * d + a}, got j={j}"
        )
    spec = fixed_count(n, a)
    char = graded_character_oracle(spec, d, bound=bound)
    part = decompose_class_function(char, bound=max(n, 1))
    return all(first_part(lam) <= n - 2 * d + a for (_, lam), _ in part.terms())
