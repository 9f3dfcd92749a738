"""Schensted insertion, standard Young tableaux, and hook-length counting.

Permutations are passed around as words ``(w(1), ..., w(n))`` with values
1..n; tableaux are tuples of row tuples.
"""

from bisect import bisect_right
from math import factorial, prod

from .errors import DomainError
from .partitions import Partition, conjugate, validate_partition


def validate_word(word) -> tuple[int, ...]:
    """Check that ``word`` is a permutation of 1..n and return it as a tuple."""
    w = tuple(int(x) for x in word)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise DomainError(f"not a permutation word of 1..{len(w)}: {w}")
    return w


def shape(tableau) -> Partition:
    """Row lengths of a tableau."""
    return tuple(len(row) for row in tableau)


def is_standard(tableau) -> bool:
    """Whether rows and columns strictly increase and entries are exactly 1..n."""
    rows = [tuple(r) for r in tableau]
    entries = sorted(x for row in rows for x in row)
    if entries != list(range(1, len(entries) + 1)):
        return False
    for row in rows:
        if any(row[i] >= row[i + 1] for i in range(len(row) - 1)):
            return False
    for r in range(1, len(rows)):
        if len(rows[r]) > len(rows[r - 1]):
            return False
        if any(rows[r - 1][c] >= rows[r][c] for c in range(len(rows[r]))):
            return False
    return True


def schensted(word):
    """Row-insert ``word`` and return the (insertion, recording) tableau pair.

    Classic row bumping: each letter enters row 1, displacing the smallest
    entry strictly greater than it, and the displaced entry bumps into the
    next row.  The recording tableau marks the cell created at each step.
    """
    w = validate_word(word)
    p_rows: list[list[int]] = []
    q_rows: list[list[int]] = []
    for step, value in enumerate(w, start=1):
        current = value
        r = 0
        while True:
            if r == len(p_rows):
                p_rows.append([current])
                q_rows.append([step])
                break
            row = p_rows[r]
            idx = bisect_right(row, current)
            if idx == len(row):
                row.append(current)
                q_rows[r].append(step)
                break
            row[idx], current = current, row[idx]
            r += 1
    return tuple(map(tuple, p_rows)), tuple(map(tuple, q_rows))


def lds(word) -> int:
    """Length of the longest decreasing subsequence.

    Computed as the first-column length of the insertion tableau, which
    equals the row count.
    """
    p, _ = schensted(word)
    return len(p)


def count_syt(lam) -> int:
    """Number of standard Young tableaux of shape ``lam``, by the hook length formula."""
    lam = validate_partition(lam)
    n = sum(lam)
    if n == 0:
        return 1
    conj = conjugate(lam)
    hooks = [
        lam[i] - j + conj[j] - i - 1
        for i in range(len(lam))
        for j in range(lam[i])
    ]
    return factorial(n) // prod(hooks)


def odd_column_count(tableau) -> int:
    """Number of columns of odd length.

    For an involution, this equals its number of fixed points when the
    tableau is the insertion tableau of the involution's word.
    """
    lam = shape(tableau)
    if not is_standard(tableau):
        raise DomainError("expected a standard tableau")
    return sum(1 for length in conjugate(lam) if length % 2 == 1)
