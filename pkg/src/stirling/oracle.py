"""Brute-force ground truth by direct enumeration.

Counts permutations by cycle count and set partitions by block count, one
object at a time. Nothing here shares code, recurrences, or triangles with
the engine; that independence is the whole point of an oracle, so do not
"optimize" these by delegating to it. The only speedup allowed is memoizing
a finished census so repeated point queries do not re-enumerate.

Costs grow factorially (10! = 3 628 800 permutations, Bell(10) = 115 975
partitions), hence the budget rail.
"""

from functools import lru_cache
from itertools import permutations

from .exact import ResourceLimitError

DEFAULT_ENUMERATION_BUDGET = 10


class BudgetExceededError(ResourceLimitError):
    """Enumeration request beyond the configured budget."""

    def __init__(self, n: int, budget: int):
        super().__init__(
            f"n={n} exceeds the enumeration budget of {budget} "
            "(enumeration cost grows factorially)"
        )
        self.n = n
        self.budget = budget


def _check_args(n: int, m: int, budget: int):
    for name, value in (("n", n), ("m", m)):
        if isinstance(value, bool) or not isinstance(value, int):
            raise TypeError(f"{name} must be an int, got {type(value).__name__}")
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    if m < 0:
        raise ValueError(f"m must be non-negative, got {m}")
    if n > budget:
        raise BudgetExceededError(n, budget)


def count_permutations_by_cycles(n: int, m: int,
                                 budget: int = DEFAULT_ENUMERATION_BUDGET) -> int:
    """Number of permutations of an n-set with exactly m cycles, found by
    enumerating all n! permutations and walking the cycles of each one."""
    _check_args(n, m, budget)
    if m > n:
        return 0
    return _permutation_cycle_census(n)[m]


def count_set_partitions(n: int, m: int,
                         budget: int = DEFAULT_ENUMERATION_BUDGET) -> int:
    """Number of partitions of an n-set into exactly m nonempty blocks, found
    by enumerating every restricted growth string of length n."""
    _check_args(n, m, budget)
    if m > n:
        return 0
    return _set_partition_census(n)[m]


@lru_cache(maxsize=None)
def _permutation_cycle_census(n: int) -> tuple:
    """counts[m] = permutations of range(n) with exactly m cycles."""
    counts = [0] * (n + 1)
    indices = range(n)
    for perm in permutations(indices):
        seen = 0
        cycles = 0
        for i in indices:
            if seen >> i & 1:
                continue
            cycles += 1
            j = i
            while not seen >> j & 1:
                seen |= 1 << j
                j = perm[j]
        counts[cycles] += 1
    return tuple(counts)


@lru_cache(maxsize=None)
def _set_partition_census(n: int) -> tuple:
    """counts[m] = partitions of an n-set with exactly m blocks.

    Enumerates restricted growth strings: position i may reuse any of the
    block labels seen so far or open the next one, so every leaf of the
    recursion is one distinct partition, with no duplicates to filter.
    """
    counts = [0] * (n + 1)

    def extend(i, used):
        if i == n:
            counts[used] += 1
            return
        for _reused_label in range(used):
            extend(i + 1, used)
        extend(i + 1, used + 1)

    extend(0, 0)
    return tuple(counts)
