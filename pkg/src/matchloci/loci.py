"""The involution matrix loci: enumeration, matching monomials, conjugation.

Points of every locus are involutions of 1..n stored as sorted pair lists;
the n-by-n symmetric permutation matrix picture is materialized only inside
the oracle's evaluation step.
"""

from dataclasses import dataclass, field
from functools import cache
from math import factorial

from .errors import DomainError

KIND_MATCHINGS = "matchings"
KIND_PM = "pm"
KIND_FIXED = "fixed"
_KINDS = (KIND_MATCHINGS, KIND_PM, KIND_FIXED)


@dataclass(frozen=True)
class Involution:
    """An involution of 1..n as a set of disjoint 2-cycles; the rest are fixed points."""

    n: int
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        seen = set()
        for i, j in self.pairs:
            if not (1 <= i < j <= self.n):
                raise DomainError(f"bad pair ({i},{j}) for n={self.n}")
            if i in seen or j in seen:
                raise DomainError(f"overlapping pairs in {self.pairs}")
            seen.update((i, j))
        if self.pairs != tuple(sorted(self.pairs)):
            raise DomainError("pairs must be sorted; use Involution.from_pairs")

    @classmethod
    def from_pairs(cls, n: int, pairs) -> "Involution":
        """Normalizing constructor: orients each pair (min, max) and sorts."""
        normalized = tuple(sorted((min(i, j), max(i, j)) for i, j in pairs))
        return cls(n, normalized)

    @classmethod
    def from_word(cls, word) -> "Involution":
        w = tuple(int(x) for x in word)
        n = len(w)
        if sorted(w) != list(range(1, n + 1)):
            raise DomainError(f"not a permutation word: {w}")
        if any(w[w[i - 1] - 1] != i for i in range(1, n + 1)):
            raise DomainError(f"not an involution word: {w}")
        pairs = tuple(
            (i, w[i - 1]) for i in range(1, n + 1) if w[i - 1] > i
        )
        return cls(n, pairs)

    @property
    def fixed(self) -> tuple[int, ...]:
        matched = {x for pair in self.pairs for x in pair}
        return tuple(i for i in range(1, self.n + 1) if i not in matched)

    @property
    def num_pairs(self) -> int:
        return len(self.pairs)

    @property
    def num_fixed(self) -> int:
        return self.n - 2 * len(self.pairs)

    def word(self) -> tuple[int, ...]:
        """Images (w(1), ..., w(n))."""
        images = list(range(1, self.n + 1))
        for i, j in self.pairs:
            images[i - 1], images[j - 1] = j, i
        return tuple(images)

    def apply(self, i: int) -> int:
        for a, b in self.pairs:
            if i == a:
                return b
            if i == b:
                return a
        return i


@dataclass(frozen=True)
class LocusSpec:
    """Which locus: all involutions, perfect matchings, or a fixed-point count.

    ``a`` is the exact number of fixed points and is only meaningful for
    the ``fixed`` kind.
    """

    kind: str
    n: int
    a: int | None = field(default=None)

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise DomainError(f"unknown locus kind {self.kind!r}; expected one of {_KINDS}")
        if self.n < 0:
            raise DomainError(f"locus size must be nonnegative, got n={self.n}")
        if self.kind == KIND_PM:
            if self.n % 2 == 1:
                raise DomainError(f"perfect matchings need even n, got {self.n}")
            if self.a not in (None, 0):
                raise DomainError("perfect matchings fix a=0 implicitly")
        elif self.kind == KIND_FIXED:
            if self.a is None:
                raise DomainError("fixed-point locus needs a")
            if not 0 <= self.a <= self.n:
                raise DomainError(f"need 0 <= a <= n, got a={self.a}, n={self.n}")
            if (self.n - self.a) % 2 == 1:
                raise DomainError(
                    f"a must have the parity of n, got a={self.a}, n={self.n}"
                )
        elif self.a is not None:
            raise DomainError("a is only meaningful for the fixed kind")


def matchings(n: int) -> LocusSpec:
    return LocusSpec(KIND_MATCHINGS, n)


def perfect_matchings(n: int) -> LocusSpec:
    return LocusSpec(KIND_PM, n)


def fixed_count(n: int, a: int) -> LocusSpec:
    return LocusSpec(KIND_FIXED, n, a)


def _gen_involutions(elements: tuple[int, ...], fixed_min: int, fixed_max: int):
    """Yield (pairs, fixed) over involutions of ``elements``.

    Order: the smallest unplaced element is first left fixed (when the
    budget allows), then paired with each larger partner ascending.  This
    order is load-bearing: golden files and oracle row indexing rely on it.
    """
    if not elements:
        if fixed_min <= 0:
            yield (), ()
        return
    if fixed_max <= 0 and len(elements) % 2 == 1:
        return
    m, rest = elements[0], elements[1:]
    if fixed_max > 0 and len(rest) >= fixed_min - 1:
        for pairs, fixed in _gen_involutions(rest, fixed_min - 1, fixed_max - 1):
            yield pairs, (m, *fixed)
    for idx, partner in enumerate(rest):
        remaining = rest[:idx] + rest[idx + 1 :]
        if len(remaining) < fixed_min:
            continue
        for pairs, fixed in _gen_involutions(remaining, fixed_min, fixed_max):
            yield ((m, partner), *pairs), fixed


@cache
def enumerate_locus(spec: LocusSpec) -> tuple[Involution, ...]:
    """All points of the locus, each exactly once, in a stable documented order."""
    elements = tuple(range(1, spec.n + 1))
    if spec.kind == KIND_MATCHINGS:
        lo, hi = 0, spec.n
    elif spec.kind == KIND_PM:
        lo, hi = 0, 0
    else:
        lo = hi = spec.a
    return tuple(
        Involution(spec.n, tuple(sorted(pairs)))
        for pairs, _ in _gen_involutions(elements, lo, hi)
    )


@cache
def involution_count(n: int) -> int:
    """Number of involutions of 1..n, via I(n) = I(n-1) + (n-1) I(n-2)."""
    if n < 0:
        raise DomainError(f"negative n: {n}")
    if n <= 1:
        return 1
    return involution_count(n - 1) + (n - 1) * involution_count(n - 2)


def double_factorial(k: int) -> int:
    """k!! with the empty-product conventions (-1)!! = 0!! = 1."""
    result = 1
    while k > 1:
        result *= k
        k -= 2
    return result


def locus_size(spec: LocusSpec) -> int:
    """Cardinality of the locus, by closed form (no enumeration)."""
    if spec.kind == KIND_MATCHINGS:
        return involution_count(spec.n)
    if spec.kind == KIND_PM:
        return double_factorial(spec.n - 1)
    a = spec.a
    k = (spec.n - a) // 2
    return factorial(spec.n) // (factorial(a) * factorial(k) * 2**k)


def matching_monomial(inv: Involution) -> tuple[tuple[int, int], ...]:
    """The squarefree upper-triangular variable set of an involution.

    One variable index pair (i, j) with i < j per 2-cycle; the identity
    maps to the empty product.
    """
    return inv.pairs


def conjugate_involution(v_word, inv: Involution) -> Involution:
    """Relabel ``inv`` by the permutation ``v``: each 2-cycle (i,j) becomes (v(i),v(j))."""
    w = tuple(int(x) for x in v_word)
    if len(w) != inv.n:
        raise DomainError(
            f"permutation length {len(w)} does not match locus size {inv.n}"
        )
    if sorted(w) != list(range(1, inv.n + 1)):
        raise DomainError(f"not a permutation word: {w}")
    return Involution.from_pairs(
        inv.n, ((w[i - 1], w[j - 1]) for i, j in inv.pairs)
    )
