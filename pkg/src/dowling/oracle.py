"""Brute-force set-partition counting: ground truth for the number families.

Partitions are enumerated as restricted growth strings, so the enumeration
is provably exhaustive and duplicate-free.  Counting is deliberately naive;
a hard size guard keeps it at desk scale.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

SIZE_GUARD = 12


@dataclass(frozen=True)
class PartitionSpec:
    """What to count: partitions of {1..total} into `blocks` nonempty blocks,
    with the first `distinguished` elements pairwise separated; `ordered`
    counts each block as a linearly ordered list."""

    total: int
    blocks: int
    distinguished: int = 0
    ordered_blocks: bool = False

    def __post_init__(self):
        if self.total < 0 or self.blocks < 0:
            raise ValueError("sizes must be nonnegative")
        if self.distinguished > self.total:
            raise ValueError("cannot distinguish more elements than exist")


def _iter_partition_stats(total: int):
    """Yield (block_count, separated_prefix, ordered_weight) per partition.

    `separated_prefix` is the largest p such that elements 1..p land in
    pairwise distinct blocks; in a canonical restricted growth string that
    is the first index where the label stops being fresh.  `ordered_weight`
    is the product of the factorials of the block sizes, i.e. the number of
    ways to linearly order every block.
    """
    if total == 0:
        yield 0, 0, 1
        return
    labels = [0] * total
    sizes = [0] * (total + 1)

    def emit():
        blocks = max(labels[:total]) + 1
        sep = total
        for i in range(total):
            if labels[i] != i:
                sep = i
                break
        weight = 1
        for b in range(blocks):
            weight *= math.factorial(sizes[b])
        return blocks, sep, weight

    def walk(i, used):
        if i == total:
            yield emit()
            return
        for label in range(used + 1):
            labels[i] = label
            sizes[label] += 1
            yield from walk(i + 1, used + (label == used))
            sizes[label] -= 1

    yield from walk(0, 0)


@lru_cache(maxsize=None)
def _census(total: int):
    """Tally partitions of {1..total} by (block_count, separated_prefix).

    Returns two dicts: plain counts and linear-order-weighted counts.  Pure
    and cached, so repeated queries share one enumeration sweep.
    """
    plain: dict = {}
    weighted: dict = {}
    for blocks, sep, weight in _iter_partition_stats(total):
        key = (blocks, sep)
        plain[key] = plain.get(key, 0) + 1
        weighted[key] = weighted.get(key, 0) + weight
    return plain, weighted


def count_partitions(spec: PartitionSpec) -> int:
    """Count the partitions described by `spec` by exhaustive enumeration."""
    if spec.total > SIZE_GUARD:
        raise ValueError(f"total={spec.total} exceeds the size guard ({SIZE_GUARD})")
    plain, weighted = _census(spec.total)
    table = weighted if spec.ordered_blocks else plain
    return sum(
        count
        for (blocks, sep), count in table.items()
        if blocks == spec.blocks and sep >= spec.distinguished
    )


def count_all_partitions(total: int, distinguished: int = 0, ordered: bool = False) -> int:
    """Count partitions into any number of blocks (same constraints)."""
    if total > SIZE_GUARD:
        raise ValueError(f"total={total} exceeds the size guard ({SIZE_GUARD})")
    if distinguished > total:
        raise ValueError("cannot distinguish more elements than exist")
    plain, weighted = _census(total)
    table = weighted if ordered else plain
    return sum(count for (_, sep), count in table.items() if sep >= distinguished)
