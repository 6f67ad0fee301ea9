"""Partitions padded to a fixed length n, plus the enumerations the scans need."""

from __future__ import annotations

from itertools import accumulate
from typing import Iterator, Sequence

Partition = tuple[int, ...]


def as_partition(parts: Sequence[int], n: int) -> Partition:
    """Right-pad with zeros to length n and check it is weakly decreasing and nonnegative."""
    parts = [int(p) for p in parts]
    while len(parts) > n and parts[-1] == 0:
        parts.pop()
    if len(parts) > n:
        raise ValueError(f"{tuple(parts)} has more than {n} parts")
    parts += [0] * (n - len(parts))
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {tuple(parts)}")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"{tuple(parts)} is not weakly decreasing")
    return tuple(parts)


def is_partition(parts: Sequence[int]) -> bool:
    return all(p >= 0 for p in parts) and all(a >= b for a, b in zip(parts, parts[1:]))


def partial_sums(parts: Sequence[int]) -> tuple[int, ...]:
    """(0, p_1, p_1 + p_2, ..., |p|)."""
    return (0,) + tuple(accumulate(parts))


def scale(parts: Sequence[int], k: int) -> Partition:
    return tuple(k * p for p in parts)


def partitions_in_box(n: int, max_part: int) -> Iterator[Partition]:
    """All partitions with at most n parts, each part <= max_part, in lex-decreasing order."""
    def rec(prefix, bound, left):
        if left == 0:
            yield tuple(prefix)
            return
        for p in range(bound, -1, -1):
            yield from rec(prefix + [p], p, left - 1)
    yield from rec([], max_part, n)


def partitions_of(total: int, n: int) -> Iterator[Partition]:
    """All partitions of ``total`` with at most n parts, padded to length n."""
    def rec(prefix, bound, left, rest):
        if left == 0:
            if rest == 0:
                yield tuple(prefix)
            return
        # the remaining `left` parts are each <= p
        for p in range(min(bound, rest), -1, -1):
            if p * left < rest:
                break
            yield from rec(prefix + [p], p, left - 1, rest - p)
    if n == 0:
        if total == 0:
            yield ()
        return
    yield from rec([], total, n, total)
