"""Integer partitions, hook lengths and self-conjugate structure.

The enumerators in this module double as the brute-force oracles that the
generating-function identities in :mod:`hooklab.qseries` are checked against,
so everything here is written directly from the combinatorial definitions.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator

__all__ = [
    "Partition",
    "HookMultiset",
    "ScType",
    "ScSplit",
    "conjugate",
    "is_self_conjugate",
    "hook_lengths",
    "n_hooks",
    "durfee_size",
    "enumerate_partitions",
    "enumerate_self_conjugate",
    "count_distinct_odd",
    "distinct_odd_partitions",
    "sc_split",
    "sc_join",
    "a_star_oracle",
]

HookMultiset = Counter


class Partition(tuple):
    """A non-increasing tuple of positive integers.

    >>> Partition([3, 1, 1]).size
    5
    >>> str(Partition(()))
    '-'
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(parts)
        for i, p in enumerate(parts):
            if not isinstance(p, int) or isinstance(p, bool) or p < 1:
                raise ValueError(f"parts must be positive integers, got {p!r}")
            if i and parts[i - 1] < p:
                raise ValueError(f"parts must be non-increasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    def __str__(self) -> str:
        return ",".join(map(str, self)) if self else "-"

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Inverse of ``str``: ``"7,7,5"`` or ``"-"`` for the empty partition."""
        text = text.strip()
        if text in ("-", ""):
            return cls(())
        try:
            parts = [int(tok) for tok in text.split(",")]
        except ValueError:
            raise ValueError(f"not a partition: {text!r}") from None
        return cls(parts)


def conjugate(p: Iterable[int]) -> Partition:
    p = tuple(p)
    if not p:
        return Partition(())
    return Partition(sum(1 for part in p if part > j) for j in range(p[0]))


def is_self_conjugate(p: Iterable[int]) -> bool:
    p = tuple(p)
    return conjugate(p) == p


def hook_lengths(p: Iterable[int]) -> HookMultiset:
    """Multiset of hook lengths ``arm + leg + 1`` over all cells of ``p``."""
    p = tuple(p)
    cols = conjugate(p)
    hooks: Counter = Counter()
    for i, row in enumerate(p):
        for j in range(row):
            hooks[(row - j - 1) + (cols[j] - i - 1) + 1] += 1
    return hooks


def n_hooks(p: Iterable[int], t: int) -> int:
    if t < 1:
        raise ValueError("t must be a positive integer")
    return hook_lengths(p)[t]


def durfee_size(p: Iterable[int]) -> int:
    return sum(1 for i, part in enumerate(p, start=1) if part >= i)


def _partitions_bounded(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    # reverse-lexicographic: biggest first part first
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            yield (first,) + rest


def enumerate_partitions(n: int, largest: int | None = None) -> Iterator[Partition]:
    """Yield every partition of ``n`` once, in reverse-lexicographic order.

    If ``largest`` is given only partitions with all parts ``<= largest`` are
    produced.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    bound = n if largest is None else largest
    for parts in _partitions_bounded(n, bound):
        yield Partition(parts)


class ScType(Enum):
    TYPE1 = 1
    TYPE2 = 2


@dataclass(frozen=True)
class ScSplit:
    """Durfee square plus the twin partition of a self-conjugate partition.

    ``twin`` is the partition formed by the rows below the square, which is
    the same as the column lengths to the right of it. Its parts never
    exceed ``durfee``.
    """

    durfee: int
    twin: Partition
    type_tag: ScType

    def join(self) -> Partition:
        return sc_join(self.durfee, self.twin)


def sc_join(durfee: int, twin: Iterable[int]) -> Partition:
    twin = Partition(twin)
    if twin and twin[0] > durfee:
        raise ValueError("twin parts cannot exceed the Durfee size")
    arms = conjugate(twin)
    top = [durfee + (arms[i] if i < len(arms) else 0) for i in range(durfee)]
    return Partition(top + list(twin))


def sc_split(p: Iterable[int]) -> ScSplit:
    p = Partition(p)
    if not p:
        raise ValueError("sc_split needs a non-empty partition")
    if not is_self_conjugate(p):
        raise ValueError(f"{p} is not self-conjugate")
    d = durfee_size(p)
    twin = Partition(p[d:])
    tag = ScType.TYPE2 if twin and twin[0] == d else ScType.TYPE1
    return ScSplit(d, twin, tag)


def enumerate_self_conjugate(n: int) -> Iterator[Partition]:
    """Yield the self-conjugate partitions of ``n`` in reverse-lexicographic order.

    Built from a Durfee square of side ``d`` and a twin partition of
    ``(n - d*d) / 2`` with parts at most ``d``; no filtering of all partitions.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        yield Partition(())
        return
    found = []
    d = 1
    while d * d <= n:
        rest = n - d * d
        if rest % 2 == 0:
            for twin in _partitions_bounded(rest // 2, d):
                found.append(sc_join(d, twin))
        d += 1
    yield from sorted(found, reverse=True)


def distinct_odd_partitions(n: int) -> Iterator[Partition]:
    """Partitions of ``n`` into distinct odd parts, largest part first."""

    def rec(m: int, below: int) -> Iterator[tuple[int, ...]]:
        if m == 0:
            yield ()
            return
        top = min(m, below - 2)
        if top % 2 == 0:
            top -= 1
        for first in range(top, 0, -2):
            for rest in rec(m - first, first):
                yield (first,) + rest

    if n < 0:
        raise ValueError("n must be non-negative")
    for parts in rec(n, n + 2 + (n % 2 == 0)):
        yield Partition(parts)


def count_distinct_odd(n: int) -> int:
    """q*(n): partitions of ``n`` into distinct odd parts, by 0/1 knapsack."""
    if n < 0:
        return 0
    table = [1] + [0] * n
    for part in range(1, n + 1, 2):
        for m in range(n, part - 1, -1):
            table[m] += table[m - part]
    return table[n]


def a_star_oracle(t: int, n: int) -> int:
    """Total number of ``t``-hooks over the self-conjugate partitions of ``n``."""
    if t < 1:
        raise ValueError("t must be a positive integer")
    return sum(n_hooks(p, t) for p in enumerate_self_conjugate(n))
