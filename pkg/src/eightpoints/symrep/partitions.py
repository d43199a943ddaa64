"""Integer partitions as conjugacy classes of the symmetric group."""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import factorial, gcd
from typing import List, Tuple

Partition = Tuple[int, ...]


@lru_cache(maxsize=None)
def partitions(n: int, largest: int = 0) -> Tuple[Partition, ...]:
    """Partitions of n in lexicographic order, (1,...,1) first and (n,) last."""
    if n == 0:
        return ((),)
    largest = largest or n
    out: List[Partition] = []
    for first in range(1, min(n, largest) + 1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(sorted(out))


def z_value(mu: Partition) -> int:
    """Size of the centralizer of a permutation of cycle type mu."""
    value = 1
    for part, mult in Counter(mu).items():
        value *= part ** mult * factorial(mult)
    return value


def class_size(mu: Partition) -> int:
    return factorial(sum(mu)) // z_value(mu)


def power_class(mu: Partition, k: int) -> Partition:
    """Cycle type of g**k for g of cycle type mu."""
    parts: List[int] = []
    for length in mu:
        g = gcd(length, k)
        parts.extend([length // g] * g)
    return tuple(sorted(parts, reverse=True))


def format_partition(mu: Partition) -> str:
    """'4+4', '2+2+2+2'."""
    return "+".join(str(p) for p in mu)


def parse_partition(text: str) -> Partition:
    return tuple(sorted((int(p) for p in text.split("+")), reverse=True))


def conjugate(mu: Partition) -> Partition:
    if not mu:
        return ()
    return tuple(sum(1 for p in mu if p > i) for i in range(mu[0]))
