"""Fixed-length partitions and the dominance order.

A partition is a plain tuple of ``n`` non-increasing non-negative integers.
Zero parts are kept, so ``(2, 0)`` and ``(2,)`` are different objects
labelling polynomials in two and one variables respectively.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import accumulate
from typing import Iterable, List, Sequence, Tuple

Partition = Tuple[int, ...]

__all__ = [
    "Partition",
    "PartitionError",
    "as_partition",
    "weight",
    "dominance_leq",
    "lower_set",
    "flat_and_natural",
    "enumerate_partitions",
    "part_difference",
]


class PartitionError(ValueError):
    pass


def as_partition(parts: Iterable[int]) -> Partition:
    lam = tuple(int(p) for p in parts)
    if any(p < 0 for p in lam):
        raise PartitionError(f"negative part in {lam}")
    if any(a < b for a, b in zip(lam, lam[1:])):
        raise PartitionError(f"parts of {lam} are not non-increasing")
    return lam


def weight(lam: Sequence[int]) -> int:
    return sum(lam)


def part_difference(lam: Sequence[int], i: int, j: int) -> int:
    """lambda_i - lambda_j with 1-based indices; index n+1 reads as zero."""
    li = lam[i - 1] if i <= len(lam) else 0
    lj = lam[j - 1] if j <= len(lam) else 0
    return li - lj


def dominance_leq(mu: Sequence[int], lam: Sequence[int]) -> bool:
    """True iff mu is dominated by lam (equal weight, prefix sums bounded)."""
    if len(mu) != len(lam):
        raise PartitionError(f"length mismatch: {len(mu)} vs {len(lam)}")
    if sum(mu) != sum(lam):
        return False
    return all(a <= b for a, b in zip(accumulate(mu), accumulate(lam)))


@lru_cache(maxsize=None)
def _enumerate(n: int, w: int, cap: int) -> Tuple[Partition, ...]:
    if n == 0:
        return ((),) if w == 0 else ()
    out = []
    for first in range(min(w, cap), -1, -1):
        if first * n < w:
            break
        for rest in _enumerate(n - 1, w - first, first):
            out.append((first,) + rest)
    return tuple(out)


def enumerate_partitions(n: int, w: int) -> List[Partition]:
    """All partitions of weight w with exactly n parts, reverse-lex order."""
    if n < 0 or w < 0:
        raise PartitionError("n and w must be non-negative")
    return list(_enumerate(n, w, w))


@lru_cache(maxsize=None)
def _lower_set(lam: Partition) -> Tuple[Partition, ...]:
    return tuple(mu for mu in _enumerate(len(lam), sum(lam), sum(lam)) if dominance_leq(mu, lam))


def lower_set(lam: Sequence[int]) -> List[Partition]:
    """Every mu dominated by lam, lam first, then reverse-lexicographic.

    Reverse-lex order is a linear extension of dominance, so walking the
    list front to back visits each mu after everything that dominates it.
    """
    return list(_lower_set(as_partition(lam)))


def flat_and_natural(lam: Sequence[int]) -> Tuple[Partition, Partition]:
    if len(lam) < 2:
        raise PartitionError("flat/natural partitions need n >= 2")
    last = lam[-1]
    nat = tuple(p - last for p in lam[:-1])
    return nat + (0,), nat
