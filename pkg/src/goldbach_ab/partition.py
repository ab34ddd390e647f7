"""Odd partitions of 2N, their type census, and Goldbach pair extraction.

A partition 2N = a + b (both odd, 3 <= a <= b <= 2N-3) is counted once.
Partitions where both components are A-type (or both B-type) get that tag;
a partition mixing the two types would contradict the same-type rule this
package exists to check, so it is recorded as data, never raised.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterator

from .classify import EvenTarget, NumberClass, btype_window, classify_odd, prime_window
from .errors import UsageError
from .sieve import PrimeTable


class PartitionKind(Enum):
    A = "A"
    B = "B"
    MIXED = "mixed"


@dataclass(frozen=True)
class OddPartition:
    a: int
    b: int
    kind: PartitionKind


@dataclass(frozen=True)
class PartitionCensus:
    """Aggregate counts over every odd partition of one even target."""

    two_n: int
    total: int
    a_count: int
    b_count: int
    mixed_count: int
    goldbach_count: int
    goldbach_pairs: tuple[tuple[int, int], ...]


def partition_total(two_n: int) -> int:
    """Closed form for the number of odd partitions: (2N - 6) // 4 + 1."""
    return (two_n - 6) // 4 + 1


def odd_partitions(t: EvenTarget) -> Iterator[tuple[int, int]]:
    """All pairs (a, b), a <= b, a + b = 2N, both odd, ascending in a.

    >>> list(odd_partitions(EvenTarget(10)))
    [(3, 7), (5, 5)]
    """
    for a in range(3, t.n + 1, 2):
        yield a, t.two_n - a


def classify_partition(
    a: int, b: int, t: EvenTarget, table: PrimeTable
) -> PartitionKind:
    """Tag one partition by the classes of its two components.

    A MIXED result is a counterexample to the same-type rule and must be
    surfaced by the caller as a claim failure, never swallowed.
    """
    if a + b != t.two_n or a % 2 == 0 or b % 2 == 0:
        raise UsageError(f"({a}, {b}) is not an odd partition of {t.two_n}")
    if not (3 <= a <= b <= t.two_n - 3):
        raise UsageError(f"({a}, {b}) lies outside the component window of {t.two_n}")
    ka = classify_odd(a, t, table)
    kb = classify_odd(b, t, table)
    if ka is kb:
        return PartitionKind.A if ka is NumberClass.A else PartitionKind.B
    return PartitionKind.MIXED


def goldbach_partitions(t: EvenTarget, table: PrimeTable) -> list[OddPartition]:
    """The prime-prime partitions of 2N, each tagged with its kind."""
    c = census(t, table)
    return [
        OddPartition(p, q, classify_partition(p, q, t, table))
        for p, q in c.goldbach_pairs
    ]


def census(t: EvenTarget, table: PrimeTable) -> PartitionCensus:
    """Count every odd partition of 2N by kind and extract the prime pairs.

    Works on the classification window as flat bytes: component b = 2N - a
    sits at the mirrored index, so comparing the window against its own
    reversal covers all partitions at once.
    """
    bmask = btype_window(t, table)
    pwin = prime_window(t, table)
    counts = census_from_windows(t.two_n, bmask, pwin)
    total, a_count, b_count, mixed_count, r = counts
    pairs = goldbach_pairs_from_window(t.two_n, pwin)
    return PartitionCensus(
        two_n=t.two_n,
        total=total,
        a_count=a_count,
        b_count=b_count,
        mixed_count=mixed_count,
        goldbach_count=r,
        goldbach_pairs=pairs,
    )


def census_from_windows(
    two_n: int, bmask: bytes, pwin: bytes
) -> tuple[int, int, int, int, int]:
    """(total, a_count, b_count, mixed_count, goldbach_count) from raw windows."""
    k = len(bmask)
    h = partition_total(two_n)
    fwd = int.from_bytes(bmask[:h], "little")
    rev = int.from_bytes(bmask[k - h :][::-1], "little")
    mixed = (fwd ^ rev).bit_count()
    b_count = (fwd & rev).bit_count()
    a_count = h - mixed - b_count
    pf = int.from_bytes(pwin[:h], "little")
    pr = int.from_bytes(pwin[k - h :][::-1], "little")
    r = (pf & pr).bit_count()
    return h, a_count, b_count, mixed, r


def goldbach_pairs_from_window(
    two_n: int, pwin: bytes
) -> tuple[tuple[int, int], ...]:
    """Extract the (p, q) prime pairs, p <= q, from the primality window."""
    k = len(pwin)
    h = partition_total(two_n)
    pf = int.from_bytes(pwin[:h], "little")
    pr = int.from_bytes(pwin[k - h :][::-1], "little")
    both = (pf & pr).to_bytes(h, "little")
    pairs = []
    i = both.find(1)
    while i >= 0:
        a = 3 + 2 * i
        pairs.append((a, two_n - a))
        i = both.find(1, i + 1)
    return tuple(pairs)


def first_mixed_partition(
    t: EvenTarget, table: PrimeTable
) -> tuple[int, int] | None:
    """Smallest-a partition whose components classify differently, if any."""
    bmask = btype_window(t, table)
    k = len(bmask)
    h = partition_total(t.two_n)
    fwd = int.from_bytes(bmask[:h], "little")
    rev = int.from_bytes(bmask[k - h :][::-1], "little")
    diff = (fwd ^ rev).to_bytes(h, "little")
    i = diff.find(1)
    if i < 0:
        return None
    a = 3 + 2 * i
    return a, t.two_n - a


def brute_force_goldbach_count(t: EvenTarget, table: PrimeTable) -> int:
    """Independent r(2N): test a and 2N - a for primality, odd a in [3, N]."""
    count = 0
    for a in range(3, t.n + 1, 2):
        if table.odd_bits[a >> 1] and table.odd_bits[(t.two_n - a) >> 1]:
            count += 1
    return count


def self_pair(t: EvenTarget, table: PrimeTable) -> tuple[int, int] | None:
    """The partition (N, N) when it is a prime pair, else None.

    Such a pair always has both components dividing 2N, making it the only
    possible B-type Goldbach pair.
    """
    n = t.n
    if n % 2 == 1 and table.odd_bits[n >> 1]:
        return (n, n)
    return None


def kind_of_prime_pair(p: int, q: int, two_n: int) -> PartitionKind:
    """Kind of a known prime pair via gcd on each side."""
    pa = math.gcd(p, two_n) == 1
    pb = math.gcd(q, two_n) == 1
    if pa and pb:
        return PartitionKind.A
    if not pa and not pb:
        return PartitionKind.B
    return PartitionKind.MIXED
