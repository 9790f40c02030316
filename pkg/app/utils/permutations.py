"""
Permutations in one-line notation and the refined descent statistics.

Descent positions follow the usual 1-based convention: position ``i`` is a
descent when ``values[i-1] > values[i]``. Insertion positions for
``insert_max`` are 0-based slots: slot 0 is the front, slot ``i`` sits right
after the i-th entry.
"""

import enum
import logging
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Iterator, Tuple

logger = logging.getLogger(__name__)


class PermutationError(ValueError):
    """Raised for malformed permutations, statistic configs and positions."""


class Direction(enum.Enum):
    FIRST_ELEMENT = "first"
    SECOND_ELEMENT = "second"


@dataclass(frozen=True)
class Permutation:
    values: Tuple[int, ...]

    def __post_init__(self):
        values = tuple(self.values)
        if sorted(values) != list(range(1, len(values) + 1)):
            raise PermutationError(f"Not a permutation of 1..{len(values)}: {list(values)}")
        object.__setattr__(self, "values", values)

    @classmethod
    def of(cls, *values: int) -> "Permutation":
        return cls(tuple(values))

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __getitem__(self, index):
        return self.values[index]

    def __str__(self) -> str:
        return " ".join(str(v) for v in self.values)


@dataclass(frozen=True)
class StatConfig:
    """
    Which descents are counted: modulus ``k``, whether the first or second
    element of the descent pair is tested, and the residues mod ``k`` that
    form the class (``{0}`` is the multiples of k).
    """

    k: int
    direction: Direction = Direction.FIRST_ELEMENT
    residues: FrozenSet[int] = frozenset({0})

    def __post_init__(self):
        if self.k < 1:
            raise PermutationError(f"Modulus must be positive, got k={self.k}")
        residues = frozenset(self.residues)
        bad = sorted(r for r in residues if not 0 <= r < self.k)
        if bad:
            raise PermutationError(f"Residues {bad} out of range for k={self.k}")
        object.__setattr__(self, "residues", residues)

    @classmethod
    def left(cls, k: int, residues: Iterable[int] = (0,)) -> "StatConfig":
        return cls(k, Direction.FIRST_ELEMENT, frozenset(residues))

    @classmethod
    def right(cls, k: int, residues: Iterable[int] = (0,)) -> "StatConfig":
        return cls(k, Direction.SECOND_ELEMENT, frozenset(residues))

    def all_residues(self) -> "StatConfig":
        return StatConfig(self.k, self.direction, frozenset(range(self.k)))

    def in_class(self, value: int) -> bool:
        return value % self.k in self.residues

    def membership_table(self, n: int) -> Tuple[bool, ...]:
        """Lookup ``table[v]`` for ``v`` in ``0..n``; index 0 is unused padding."""
        return tuple(self.in_class(v) for v in range(n + 1))


def descent_set(p: Permutation) -> Tuple[int, ...]:
    return tuple(i for i in range(1, len(p)) if p[i - 1] > p[i])


def des(p: Permutation) -> int:
    return len(descent_set(p))


def des_left(p: Permutation, cfg: StatConfig) -> int:
    if cfg.direction is not Direction.FIRST_ELEMENT:
        raise PermutationError("des_left needs a FIRST_ELEMENT config")
    return sum(1 for i in descent_set(p) if cfg.in_class(p[i - 1]))


def des_right(p: Permutation, cfg: StatConfig) -> int:
    if cfg.direction is not Direction.SECOND_ELEMENT:
        raise PermutationError("des_right needs a SECOND_ELEMENT config")
    return sum(1 for i in descent_set(p) if cfg.in_class(p[i]))


def class_descents(p: Permutation, cfg: StatConfig) -> int:
    """Dispatch on ``cfg.direction``."""
    if cfg.direction is Direction.FIRST_ELEMENT:
        return des_left(p, cfg)
    return des_right(p, cfg)


def first_in_class(p: Permutation, cfg: StatConfig) -> int:
    if len(p) == 0:
        raise PermutationError("first_in_class is undefined on the empty permutation")
    return 1 if cfg.in_class(p[0]) else 0


def insert_max(p: Permutation, pos: int) -> Permutation:
    n = len(p)
    if not 0 <= pos <= n:
        raise PermutationError(f"Insertion position {pos} outside 0..{n}")
    values = p.values
    return Permutation(values[:pos] + (n + 1,) + values[pos:])


def all_permutations(n: int) -> Iterator[Permutation]:
    """Every permutation of 1..n in lexicographic order."""
    buffer = list(range(1, n + 1))
    yield Permutation(tuple(buffer))
    while next_permutation(buffer) >= 0:
        yield Permutation(tuple(buffer))


def next_permutation(buffer, lo: int = 0) -> int:
    """
    Advance ``buffer[lo:]`` to its lexicographic successor in place.

    Returns the pivot index (the leftmost changed position), or -1 when the
    suffix is already the last arrangement; the buffer is left untouched then.
    """
    i = len(buffer) - 2
    while i >= lo and buffer[i] > buffer[i + 1]:
        i -= 1
    if i < lo:
        return -1
    j = len(buffer) - 1
    while buffer[j] < buffer[i]:
        j -= 1
    buffer[i], buffer[j] = buffer[j], buffer[i]
    buffer[i + 1:] = buffer[:i:-1]
    return i
