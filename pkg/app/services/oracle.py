import logging
import math
import multiprocessing as mp
import time
from itertools import permutations
from typing import List, Optional, Sequence, Tuple

from app.utils.permutations import Direction, StatConfig, next_permutation
from app.utils.polynomials import BiPoly, IntPoly

logger = logging.getLogger(__name__)

DEFAULT_MAX_N = 11

# Prefix length used to cut S_n into contiguous lexicographic ranges.
PREFIX_LENGTH = 2


class EnumerationGuardError(ValueError):
    """Raised when a brute-force request exceeds the enumeration guard."""


def check_guard(n: int, max_n: Optional[int] = None):
    limit = DEFAULT_MAX_N if max_n is None else max_n
    if n < 0:
        raise EnumerationGuardError(f"Length must be nonnegative, got n={n}")
    if n > limit:
        raise EnumerationGuardError(
            f"Refusing to enumerate S_{n}: {math.factorial(n)} permutations exceeds guard n <= {limit}"
        )


def prefixes(n: int) -> List[Tuple[int, ...]]:
    """Lexicographically ordered prefixes; each one names a contiguous block of S_n."""
    return list(permutations(range(1, n + 1), min(PREFIX_LENGTH, n)))


def count_range(n: int, k: int, residues: Sequence[int], direction: str, prefix: Tuple[int, ...]):
    """
    Histogram of (first letter in class, statistic) over every permutation of
    1..n that starts with ``prefix``.

    Only the suffix after the prefix moves, via the lexicographic successor.
    ``acc[t]`` is the statistic restricted to pairs before position t, so a
    successor step with pivot i only rescans pairs from i-1 on.
    """
    cfg = StatConfig(k, Direction(direction), frozenset(residues))
    member = cfg.membership_table(n)
    first = direction == Direction.FIRST_ELEMENT.value
    counts = [[0] * (n + 1), [0] * (n + 1)]
    if n == 0:
        counts[0][0] = 1
        return counts

    rest = sorted(set(range(1, n + 1)) - set(prefix))
    buffer = list(prefix) + rest

    acc = [0] * n
    for t in range(n - 1):
        a, b = buffer[t], buffer[t + 1]
        acc[t + 1] = acc[t] + (1 if a > b and member[a if first else b] else 0)
    lead = 1 if member[buffer[0]] else 0
    lo = len(prefix)
    row = counts[lead]

    while True:
        row[acc[n - 1]] += 1
        pivot = next_permutation(buffer, lo)
        if pivot < 0:
            break
        for t in range(max(pivot - 1, 0), n - 1):
            a, b = buffer[t], buffer[t + 1]
            acc[t + 1] = acc[t] + (1 if a > b and member[a if first else b] else 0)
    return counts


def _count_range_args(args):
    return count_range(*args)


def enumerate_counts(n: int, cfg: StatConfig, jobs: int = 1, max_n: Optional[int] = None):
    """Merged (z0, z1) histograms of the configured statistic over all of S_n."""
    check_guard(n, max_n)
    started = time.perf_counter()
    tasks = [(n, cfg.k, tuple(sorted(cfg.residues)), cfg.direction.value, prefix) for prefix in prefixes(n)]
    logger.info(f"Enumerating S_{n} for k={cfg.k}, residues={sorted(cfg.residues)}, "
                f"direction={cfg.direction.value} over {len(tasks)} ranges with {jobs} job(s)")

    if jobs > 1 and len(tasks) > 1:
        with mp.Pool(processes=jobs) as pool:
            partials = pool.map(_count_range_args, tasks)
    else:
        partials = [count_range(*task) for task in tasks]

    size = max(len(p[0]) for p in partials)
    merged = [[0] * size, [0] * size]
    for partial in partials:
        for z in (0, 1):
            for s, c in enumerate(partial[z]):
                merged[z][s] += c

    total = sum(merged[0]) + sum(merged[1])
    if total != math.factorial(n):
        raise RuntimeError(f"Enumeration of S_{n} visited {total} permutations")
    logger.debug(f"Enumerated S_{n} in {time.perf_counter() - started:.3f}s")
    return merged


def poly_A_bruteforce(k: int, n: int, jobs: int = 1, max_n: Optional[int] = None) -> IntPoly:
    """Distribution of the left statistic (first element divisible by k) over S_n."""
    z0, z1 = enumerate_counts(n, StatConfig.left(k), jobs, max_n)
    return IntPoly(a + b for a, b in zip(z0, z1))


def poly_B_bruteforce(k: int, n: int, jobs: int = 1, max_n: Optional[int] = None) -> BiPoly:
    """Right statistic (second element divisible by k), split by whether sigma_1 is divisible by k."""
    z0, z1 = enumerate_counts(n, StatConfig.right(k), jobs, max_n)
    return BiPoly(z0, z1)


def distribution_general(n: int, cfg: StatConfig, jobs: int = 1, max_n: Optional[int] = None) -> IntPoly:
    z0, z1 = enumerate_counts(n, cfg, jobs, max_n)
    return IntPoly(a + b for a, b in zip(z0, z1))


def split_distribution_general(n: int, cfg: StatConfig, jobs: int = 1, max_n: Optional[int] = None) -> BiPoly:
    """As ``distribution_general`` but keeping z for "first letter in the class"."""
    z0, z1 = enumerate_counts(n, cfg, jobs, max_n)
    return BiPoly(z0, z1)
