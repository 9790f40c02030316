"""
Explicit coefficient formulas for A^(k)_{kn+j}(x) and B^(k)_{kn+j}(x, z).

Every formula takes the split length ``kn + j`` (0 <= j <= k - 1) and a
degree in its own native index: the ``*_dual`` formulas and ``coeff_B1``
count from the top coefficient down. ``coefficient`` maps everything to
plain x-degrees. Coefficients outside the support are 0.

Common pieces: ``P = ((k-1)n + j)!`` prefactors every formula, ``N = (k-1)n + j``
and ``m = kn + j``.
"""

import enum
import logging
import math
from typing import Callable, Optional

logger = logging.getLogger(__name__)


class FormulaId(enum.Enum):
    A_BOUNDARY_LOW = "A-boundary-low"
    A_BOUNDARY_HIGH = "A-boundary-high"
    A_INCL_EXCL = "A-incl-excl"
    A_DUAL = "A-dual"
    B_BOUNDARY = "B-boundary"
    B_TOTAL_DUAL = "B-total-dual"
    B_TOTAL_INCL_EXCL = "B-total-incl-excl"
    B1_FORM = "B1-form"
    B0_FORM = "B0-form"
    OMEGA = "Omega"


class BoundaryKind(enum.Enum):
    TOTAL_0 = "total-0"
    SPLIT_00 = "split-00"
    SPLIT_10 = "split-10"
    TOTAL_N = "total-n"
    SPLIT_0N = "split-0n"
    B1_N_MINUS_1 = "B1-(n-1)"


def falling_factorial(x: int, r: int) -> int:
    if r < 0:
        raise ValueError(f"falling_factorial needs r >= 0, got {r}")
    result = 1
    for i in range(r):
        result *= x - i
    return result


def binom(a: int, b: int) -> int:
    """
    Binomial coefficient, 0 when b < 0 or b > a >= 0. A negative top with
    b >= 0 uses the generalized value (-1)^b C(b - a - 1, b).
    """
    if b < 0:
        return 0
    if a >= 0:
        return math.comb(a, b) if b <= a else 0
    return (-1) ** b * math.comb(b - a - 1, b)


def _prod(terms) -> int:
    return math.prod(terms)


def _prefactor(k: int, n: int, j: int) -> int:
    return math.factorial((k - 1) * n + j)


def _check_split(k: int, n: int, j: int):
    if k < 1 or n < 0 or not 0 <= j <= k - 1:
        raise ValueError(f"Expected k >= 1, n >= 0, 0 <= j <= k-1; got k={k}, n={n}, j={j}")


def _alternating_sum(k: int, n: int, j: int, s: int, top_shift: int, product: Callable[[int], int]) -> int:
    """
    sum_{r=0}^{s} (-1)^(s-r) C(N + r, r) C(m + top_shift, s - r) product(r).
    ``top_shift`` is 1 for the A and total-B sums, 0 for the split B sums.
    """
    big_n = (k - 1) * n + j
    m = k * n + j
    total = 0
    for r in range(s + 1):
        sign = -1 if (s - r) % 2 else 1
        total += sign * binom(big_n + r, r) * binom(m + top_shift, s - r) * product(r)
    return total


def coeff_A_boundary_low(k: int, n: int, j: int) -> int:
    """Constant term of A^(k)_{kn+j}."""
    _check_split(k, n, j)
    return _prefactor(k, n, j) * _prod(j + 1 + i * (k - 1) for i in range(n))


def coeff_A_boundary_high(k: int, n: int, j: int) -> int:
    """Coefficient of x^n in A^(k)_{kn+j}."""
    _check_split(k, n, j)
    return _prefactor(k, n, j) * (k - 1) ** n * math.factorial(n)


def coeff_A_incl_excl(k: int, n: int, j: int, s: int) -> int:
    """A^(k)_{s, kn+j}, iterated up from the constant term."""
    _check_split(k, n, j)
    if s < 0 or s > n:
        return 0
    inner = _alternating_sum(k, n, j, s, 1, lambda r: _prod(r + 1 + j + (k - 1) * i for i in range(n)))
    return _prefactor(k, n, j) * inner


def coeff_A_dual(k: int, n: int, j: int, s: int) -> int:
    """A^(k)_{n-s, kn+j}, iterated down from the top coefficient."""
    _check_split(k, n, j)
    if s < 0 or s > n:
        return 0
    inner = _alternating_sum(k, n, j, s, 1, lambda r: _prod(r + (k - 1) * i for i in range(1, n + 1)))
    return _prefactor(k, n, j) * inner


def omega_sum(k: int, n: int, r: int) -> int:
    total = 0
    for p in range(n):
        left = _prod(r + (k - 1) * i for i in range(p))
        right = _prod(1 + r + (k - 1) * i for i in range(p + 1, n))
        total += left * right
    return total


def omega_product(k: int, n: int, r: int) -> int:
    return _prod(1 + r + (k - 1) * i for i in range(n)) - _prod(r + (k - 1) * i for i in range(n))


def omega(k: int, n: int, r: int) -> int:
    """Omega(k, n, r); both forms are evaluated and must agree."""
    if n < 1:
        raise ValueError(f"Omega needs n >= 1, got {n}")
    by_sum = omega_sum(k, n, r)
    by_product = omega_product(k, n, r)
    if by_sum != by_product:
        raise ArithmeticError(f"Omega forms disagree at k={k}, n={n}, r={r}: {by_sum} != {by_product}")
    return by_sum


def coeff_B_boundary(k: int, n: int, j: int, which) -> int:
    _check_split(k, n, j)
    which = BoundaryKind(which)
    prefactor = _prefactor(k, n, j)
    grow = _prod(1 + (k - 1) * i for i in range(1, n + 1))
    flat = (k - 1) ** n * math.factorial(n)
    if which is BoundaryKind.TOTAL_0:
        return prefactor * grow
    if which is BoundaryKind.SPLIT_00:
        return prefactor * flat
    if which is BoundaryKind.SPLIT_10:
        return prefactor * (grow - flat)
    if which in (BoundaryKind.TOTAL_N, BoundaryKind.SPLIT_0N):
        # j = 0 puts a zero factor in the product: kn is never a descent bottom in S_kn
        return prefactor * _prod(j + (k - 1) * i for i in range(n))
    if n == 0:
        return 0
    return prefactor * omega(k, n, j)


def coeff_B_total_dual(k: int, n: int, j: int, s: int) -> int:
    """B^(k)_{n-s, kn+j}, iterated down from the top coefficient."""
    _check_split(k, n, j)
    if s < 0 or s > n:
        return 0
    inner = _alternating_sum(k, n, j, s, 1, lambda r: _prod(r + j + (k - 1) * i for i in range(n)))
    return _prefactor(k, n, j) * inner


def coeff_B_total_incl_excl(k: int, n: int, j: int, s: int) -> int:
    """B^(k)_{s, kn+j}, iterated up from the constant term."""
    _check_split(k, n, j)
    if s < 0 or s > n:
        return 0
    inner = _alternating_sum(k, n, j, s, 1, lambda r: _prod(1 + r + (k - 1) * i for i in range(1, n + 1)))
    return _prefactor(k, n, j) * inner


def coeff_B1(k: int, n: int, j: int, s: int) -> int:
    """B^(k)_{1, n-1-s, kn+j}: the z part, counted down from x^(n-1)."""
    _check_split(k, n, j)
    if n == 0 or s < 0 or s > n - 1:
        return 0
    inner = _alternating_sum(k, n, j, s, 0, lambda r: omega(k, n, r + j))
    return _prefactor(k, n, j) * inner


def coeff_B0(k: int, n: int, j: int, s: int) -> int:
    """
    B^(k)_{0, n-1-s, kn+j} for 0 <= s <= n - 1; ``s = -1`` gives the top
    coefficient B^(k)_{0, n, kn+j}.
    """
    _check_split(k, n, j)
    if s == -1:
        return coeff_B_boundary(k, n, j, BoundaryKind.SPLIT_0N)
    if s < -1 or s > n - 1:
        return 0
    first = _alternating_sum(k, n, j, s + 1, 0, lambda r: _prod(r + j + (k - 1) * i for i in range(n)))
    second = _alternating_sum(k, n, j, s, 0, lambda r: _prod(1 + r + j + (k - 1) * i for i in range(n)))
    return _prefactor(k, n, j) * (first - second)


def split_length(k: int, length: int):
    """(n, j) with length = k*n + j and 0 <= j <= k - 1."""
    if k < 1 or length < 0:
        raise ValueError(f"Expected k >= 1 and length >= 0; got k={k}, length={length}")
    return divmod(length, k)


def coefficient(formula, k: int, n: int, j: int, degree: int, z: Optional[int] = None) -> int:
    """
    Coefficient of x^degree (and z^z for the split B forms) in the length
    kn + j polynomial, computed by the named formula.
    """
    formula = FormulaId(formula)
    _check_split(k, n, j)
    if degree < 0 or degree > n:
        return 0
    if formula is FormulaId.A_BOUNDARY_LOW:
        return coeff_A_boundary_low(k, n, j) if degree == 0 else _unsupported(formula, degree)
    if formula is FormulaId.A_BOUNDARY_HIGH:
        return coeff_A_boundary_high(k, n, j) if degree == n else _unsupported(formula, degree)
    if formula is FormulaId.A_INCL_EXCL:
        return coeff_A_incl_excl(k, n, j, degree)
    if formula is FormulaId.A_DUAL:
        return coeff_A_dual(k, n, j, n - degree)
    if formula is FormulaId.B_TOTAL_DUAL:
        return coeff_B_total_dual(k, n, j, n - degree)
    if formula is FormulaId.B_TOTAL_INCL_EXCL:
        return coeff_B_total_incl_excl(k, n, j, degree)
    if formula is FormulaId.B1_FORM:
        return coeff_B1(k, n, j, n - 1 - degree)
    if formula is FormulaId.B0_FORM:
        return coeff_B0(k, n, j, n - 1 - degree)
    if formula is FormulaId.B_BOUNDARY:
        return _b_boundary_by_degree(k, n, j, degree, z)
    raise ValueError(f"{formula.value} is not a coefficient formula")


def _b_boundary_by_degree(k: int, n: int, j: int, degree: int, z: Optional[int]) -> int:
    if degree == 0:
        kind = {None: BoundaryKind.TOTAL_0, 0: BoundaryKind.SPLIT_00, 1: BoundaryKind.SPLIT_10}[z]
        return coeff_B_boundary(k, n, j, kind)
    if degree == n:
        if z == 1:
            return 0
        return coeff_B_boundary(k, n, j, BoundaryKind.TOTAL_N)
    if degree == n - 1 and z == 1:
        return coeff_B_boundary(k, n, j, BoundaryKind.B1_N_MINUS_1)
    return _unsupported(FormulaId.B_BOUNDARY, degree)


def _unsupported(formula: FormulaId, degree: int) -> int:
    raise ValueError(f"{formula.value} has no value at x-degree {degree}")


def closed_A_coefficients(k: int, length: int):
    """All x-coefficients of A^(k)_length via the inclusion-exclusion formula."""
    n, j = split_length(k, length)
    return [coeff_A_incl_excl(k, n, j, s) for s in range(n + 1)]


def closed_B_split_coefficients(k: int, length: int):
    """(z0, z1) coefficient lists of B^(k)_length(x, z) via the B0 and B1 formulas."""
    n, j = split_length(k, length)
    z0 = [coefficient(FormulaId.B0_FORM, k, n, j, d) for d in range(n + 1)]
    z1 = [coefficient(FormulaId.B1_FORM, k, n, j, d) for d in range(n + 1)]
    return z0, z1
