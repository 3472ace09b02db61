"""Integer partitions: canonical values, graded-lex enumeration, slot surgery."""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Union


class Partition(tuple):
    """A weakly decreasing tuple of positive integers, stored without trailing zeros.

    >>> Partition([3, 1, 0, 0])
    Partition(3, 1)
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts are not weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    def __repr__(self) -> str:
        return f"Partition({', '.join(map(str, self))})"

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self)) + ")"

    @property
    def length(self) -> int:
        return len(self)

    @property
    def weight(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """The ``i``-th part (1-based), zero past the length."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def padded(self, r: int) -> tuple:
        if len(self) > r:
            raise ValueError(f"{self} has more than {r} parts")
        return tuple(self) + (0,) * (r - len(self))

    def conjugate(self) -> "Partition":
        return Partition(sum(1 for p in self if p > i) for i in range(self.part(1)))

    def to_json(self) -> list:
        return list(self)


PartitionLike = Union[Partition, Iterable[int], str]


def as_partition(x: PartitionLike) -> Partition:
    """Accept a Partition, a sequence of ints or a comma-separated string (``""`` is empty)."""
    if isinstance(x, Partition):
        return x
    if isinstance(x, str):
        x = x.strip().strip("()[]")
        return Partition(int(p) for p in x.split(",") if p.strip()) if x else Partition()
    return Partition(x)


def length(p: PartitionLike) -> int:
    return as_partition(p).length


def weight(p: PartitionLike) -> int:
    return as_partition(p).weight


def graded_lex_key(p: Partition):
    """Sort key: weight ascending, then parts lexicographically descending."""
    return (p.weight, tuple(-x for x in p))


@lru_cache(maxsize=None)
def _exact_weight(n: int, max_part: int, max_len: int) -> tuple:
    if n == 0:
        return ((),)
    if max_len == 0:
        return ()
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in _exact_weight(n - first, first, max_len - 1):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(n: int, max_length: int | None = None) -> list:
    """Partitions of ``n`` with at most ``max_length`` parts, lex descending."""
    return [Partition(p) for p in _exact_weight(n, n, n if max_length is None else max_length)]


def enumerate_partitions(max_length: int, max_weight: int) -> list:
    """All partitions with length ``<= max_length`` and weight ``<= max_weight``, graded-lex."""
    if max_length < 0 or max_weight < 0:
        raise ValueError("bounds must be non-negative")
    out = []
    for n in range(max_weight + 1):
        out.extend(partitions_of(n, max_length))
    return out


def remove_part(p: PartitionLike, j: int, r: int | None = None) -> Partition:
    """Delete slot ``j`` (1-based) of ``p`` padded to ``r`` slots."""
    p = as_partition(p)
    r = len(p) if r is None else r
    if not 1 <= j <= r:
        raise IndexError(f"slot {j} outside 1..{r}")
    slots = list(p.padded(r))
    del slots[j - 1]
    return Partition(slots)


def pad_shift(p: PartitionLike, r: int) -> Partition:
    """``p + (1^(r-1))``: add one to each of the first ``r - 1`` slots."""
    p = as_partition(p)
    if len(p) > r - 1:
        raise ValueError(f"{p} needs at most {r - 1} parts to be shifted at rank {r}")
    return Partition(x + 1 for x in p.padded(r - 1))


def dominates(a: Partition, b: Partition) -> bool:
    """Dominance order for partitions of equal weight."""
    sa = sb = 0
    for i in range(max(len(a), len(b))):
        sa += a.part(i + 1)
        sb += b.part(i + 1)
        if sa < sb:
            return False
    return True
