"""Integer partitions: enumeration, conjugation, small helpers.

A partition is stored as a tuple of weakly decreasing positive integers;
the empty tuple is the unique partition of 0.  All enumeration functions
return partitions in reverse lexicographic order, so ``(n,)`` comes first
and ``(1,) * n`` last.
"""

from functools import cache

from .errors import DomainError

Partition = tuple[int, ...]


def validate_partition(parts) -> Partition:
    """Normalize ``parts`` to a tuple and check it is weakly decreasing and positive."""
    lam = tuple(int(p) for p in parts)
    for i, p in enumerate(lam):
        if p < 1:
            raise DomainError(f"partition parts must be positive, got {lam}")
        if i > 0 and lam[i - 1] < p:
            raise DomainError(f"partition parts must be weakly decreasing, got {lam}")
    return lam


@cache
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n``, in reverse lexicographic order."""
    if n < 0:
        raise DomainError(f"cannot partition a negative integer: {n}")

    def gen(remaining, cap):
        if remaining == 0:
            yield ()
            return
        for first in range(min(cap, remaining), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first, *rest)

    return tuple(gen(n, n))


def even_partitions(n: int) -> tuple[Partition, ...]:
    """Partitions of ``n`` with every part even; empty for odd ``n``.

    Generated by doubling the partitions of ``n/2`` (which preserves
    reverse lexicographic order), so this stays cheap even when ``n`` is
    far too large for ``partitions_of(n)`` itself.
    """
    if n < 0:
        raise DomainError(f"cannot partition a negative integer: {n}")
    if n % 2 == 1:
        return ()
    return tuple(tuple(2 * p for p in mu) for mu in partitions_of(n // 2))


def conjugate(lam: Partition) -> Partition:
    """Transpose the Young diagram: part ``i`` of the result is the length of column ``i``."""
    lam = validate_partition(lam)
    if not lam:
        return ()
    cols = [0] * lam[0]
    for part in lam:
        for j in range(part):
            cols[j] += 1
    return tuple(cols)


def first_part(lam: Partition) -> int:
    """The first (largest) part, with the convention that the empty partition has first part 0."""
    return lam[0] if lam else 0
