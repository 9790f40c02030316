"""
Constructive bijections between permutation classes that transport the
refined descent statistics.

``bij01`` and ``bij02`` act on S_L with L = kn + k - 2 (k >= 3). Both work on
the word extended by the dummy letter D = kn + k - 1 and drop D at the end;
their inverses retrace the same steps.
"""

import logging
from typing import List, NamedTuple, Sequence

from app.utils.permutations import Permutation

logger = logging.getLogger(__name__)


class BijectionDomainError(ValueError):
    """Raised when a map is applied outside the lengths or moduli it is defined for."""


class Bij02Image(NamedTuple):
    permutation: Permutation
    flag: int


def complement(p: Permutation) -> Permutation:
    top = len(p) + 1
    return Permutation(tuple(top - v for v in p))


def reverse(p: Permutation) -> Permutation:
    return Permutation(tuple(reversed(p.values)))


def star(p: Permutation) -> Permutation:
    """Reverse of the complement."""
    return reverse(complement(p))


def split_length(length: int, k: int, offset: int) -> int:
    """n with length = k*n + k - offset, or BijectionDomainError."""
    n, rest = divmod(length - (k - offset), k)
    if n < 0 or rest:
        raise BijectionDomainError(f"Length {length} is not of the form {k}n + {k - offset}")
    return n


def _check_bij_domain(p: Permutation, k: int) -> int:
    if k < 3:
        raise BijectionDomainError(f"Needs k >= 3, got k={k}")
    return split_length(len(p), k, 2)


def _rotate_to_front(word: List[int], letter: int) -> List[int]:
    i = word.index(letter)
    return word[i:] + word[:i]


def _reverse_complement(word: Sequence[int]) -> List[int]:
    top = len(word) + 1
    return [top - v for v in reversed(word)]


def bij01(p: Permutation, k: int) -> Permutation:
    """Append D, complement, rotate D to the front, drop D. Sends statistic j to n - j."""
    _check_bij_domain(p, k)
    dummy = len(p) + 1
    word = [dummy + 1 - v for v in p.values + (dummy,)]
    word = _rotate_to_front(word, dummy)
    return Permutation(tuple(word[1:]))


def bij01_inverse(p: Permutation, k: int) -> Permutation:
    """Prepend D, rotate until 1 is last, complement, drop D."""
    _check_bij_domain(p, k)
    dummy = len(p) + 1
    word = [dummy] + list(p.values)
    i = word.index(1)
    word = word[i + 1:] + word[:i + 1]
    word = [dummy + 1 - v for v in word]
    return Permutation(tuple(word[:-1]))


def bij02(p: Permutation, k: int) -> Bij02Image:
    """
    Write p = A x 1 B and extend it by D. Reverse-complement, rotate D to the
    front and drop it: the image is x^c A^cr 1 B^cr. ``flag`` is 1 when x^c is
    divisible by k; a p that starts with 1 has x = D and flag 0.
    """
    _check_bij_domain(p, k)
    dummy = len(p) + 1
    word = _reverse_complement(list(p.values) + [dummy])
    word = _rotate_to_front(word, dummy)
    image = Permutation(tuple(word[1:]))
    flag = 1 if image[0] % k == 0 else 0
    return Bij02Image(image, flag)


def bij02_inverse(p: Permutation, k: int) -> Permutation:
    _check_bij_domain(p, k)
    dummy = len(p) + 1
    word = _rotate_to_front([dummy] + list(p.values), 1)
    word = _reverse_complement(word)
    if word[-1] != dummy:
        raise BijectionDomainError(f"{p} is not in the image of bij02")
    return Permutation(tuple(word[:-1]))
