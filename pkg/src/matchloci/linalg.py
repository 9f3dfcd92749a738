"""Exact linear algebra engines for the oracle.

Two incremental echelon structures (dense integer vectors for evaluation
columns, sparse dict rows for ideal spans), an exact Fraction matrix
inverse for Gram projections, and a deterministic-prime modular rank as
the optional fast path.  Everything is fraction-free over Python ints with
gcd content reduction, so correctness never depends on floating point.
"""

from fractions import Fraction
from math import gcd

from .errors import InternalCheckError


def _content_reduce(values):
    g = 0
    for v in values:
        g = gcd(g, v)
        if g == 1:
            return values
    if g > 1:
        return [v // g for v in values]
    return values


class DenseIntegerEchelon:
    """Incremental row reduction of integer vectors of a fixed length.

    Stores a primitive (content-one) echelon basis in insertion order, so
    the first r basis vectors always span exactly what the first inputs
    that increased the rank spanned.  That prefix property is what lets
    the oracle slice Gram matrices per filtration level.
    """

    def __init__(self, length: int):
        self.length = length
        self.basis: list[tuple[int, ...]] = []
        self._pivot_to_row: dict[int, int] = {}

    @property
    def rank(self) -> int:
        return len(self.basis)

    def reduce(self, vector) -> list[int]:
        """Return the residue of ``vector`` after elimination by the basis."""
        v = list(vector)
        if len(v) != self.length:
            raise InternalCheckError(
                f"vector length {len(v)} != {self.length}"
            )
        for pivot, row_idx in sorted(self._pivot_to_row.items()):
            c = v[pivot]
            if c == 0:
                continue
            row = self.basis[row_idx]
            lead = row[pivot]
            v = [lead * a - c * b for a, b in zip(v, row)]
            v = _content_reduce(v)
        return v

    def add(self, vector) -> bool:
        """Insert a vector; True if it enlarged the span."""
        v = self.reduce(vector)
        pivot = next((i for i, a in enumerate(v) if a != 0), None)
        if pivot is None:
            return False
        if v[pivot] < 0:
            v = [-a for a in v]
        self._pivot_to_row[pivot] = len(self.basis)
        self.basis.append(tuple(v))
        return True


class SparseIntegerEchelon:
    """Incremental rank of sparse integer rows keyed by orderable monomial keys."""

    def __init__(self):
        self._rows: dict[object, dict] = {}

    @property
    def rank(self) -> int:
        return len(self._rows)

    def add(self, row: dict) -> bool:
        v = {k: c for k, c in row.items() if c}
        while v:
            pivot = max(v)
            if pivot not in self._rows:
                g = 0
                for c in v.values():
                    g = gcd(g, c)
                if v[pivot] < 0:
                    g = -g
                self._rows[pivot] = {k: c // g for k, c in v.items()}
                return True
            other = self._rows[pivot]
            c_v, c_o = v[pivot], other[pivot]
            new = {}
            g = 0
            for k in set(v) | set(other):
                c = c_o * v.get(k, 0) - c_v * other.get(k, 0)
                if c:
                    new[k] = c
                    g = gcd(g, c)
            if g > 1:
                new = {k: c // g for k, c in new.items()}
            v = new
        return False


def invert_fraction_matrix(matrix) -> list[list[Fraction]]:
    """Exact inverse of a square integer/rational matrix by Gauss-Jordan."""
    size = len(matrix)
    aug = [
        [Fraction(matrix[i][j]) for j in range(size)]
        + [Fraction(1 if j == i else 0) for j in range(size)]
        for i in range(size)
    ]
    for col in range(size):
        pivot_row = next(
            (r for r in range(col, size) if aug[r][col] != 0), None
        )
        if pivot_row is None:
            raise InternalCheckError("singular Gram matrix")
        aug[col], aug[pivot_row] = aug[pivot_row], aug[col]
        inv_lead = 1 / aug[col][col]
        aug[col] = [x * inv_lead for x in aug[col]]
        for r in range(size):
            if r != col and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[col])]
    return [row[size:] for row in aug]


def deterministic_prime(lower: int) -> int:
    """Smallest prime strictly greater than max(lower, 10^6); fixed across runs."""
    candidate = max(lower, 1_000_000) + 1
    while True:
        if candidate % 2 and all(
            candidate % p for p in range(3, int(candidate**0.5) + 1, 2)
        ):
            return candidate
        candidate += 1


class DenseModularEchelon:
    """Rank over GF(p) for dense integer vectors; a fast path, never an authority."""

    def __init__(self, length: int, p: int):
        self.length = length
        self.p = p
        self._rows: dict[int, list[int]] = {}

    @property
    def rank(self) -> int:
        return len(self._rows)

    def add(self, vector) -> bool:
        p = self.p
        v = [x % p for x in vector]
        for pivot in range(self.length):
            c = v[pivot]
            if c == 0:
                continue
            if pivot in self._rows:
                row = self._rows[pivot]
                v = [(a - c * b) % p for a, b in zip(v, row)]
            else:
                inv = pow(c, -1, p)
                self._rows[pivot] = [(a * inv) % p for a in v]
                return True
        return False


class SparseModularEchelon:
    """Rank over GF(p) for sparse rows; mirrors SparseIntegerEchelon."""

    def __init__(self, p: int):
        self.p = p
        self._rows: dict[object, dict] = {}

    @property
    def rank(self) -> int:
        return len(self._rows)

    def add(self, row: dict) -> bool:
        p = self.p
        v = {k: c % p for k, c in row.items() if c % p}
        while v:
            pivot = max(v)
            if pivot not in self._rows:
                inv = pow(v[pivot], -1, p)
                self._rows[pivot] = {k: (c * inv) % p for k, c in v.items()}
                return True
            other = self._rows[pivot]
            c = v[pivot]
            new = {}
            for k in set(v) | set(other):
                val = (v.get(k, 0) - c * other.get(k, 0)) % p
                if val:
                    new[k] = val
            v = new
        return False
